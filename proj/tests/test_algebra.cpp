#include <doctest.h>

#include <algorithm>

#include "homcx/module.hpp"

using namespace homcx;

namespace {

// Normal-orders the word x^e x^f by adjacent swaps x_j x_i -> q_ij x_i x_j.
std::optional<std::pair<Elem, std::vector<unsigned>>> normal_order(const AlgebraPtr& a, const std::vector<unsigned>& e,
                                                                  const std::vector<unsigned>& f) {
    const Field fld = a->field();
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < e.size(); ++i) word.insert(word.end(), e[i], i);
    for (std::size_t i = 0; i < f.size(); ++i) word.insert(word.end(), f[i], i);
    Elem coeff = 1;
    for (std::size_t pass = 0; pass < word.size(); ++pass)
        for (std::size_t k = 0; k + 1 < word.size(); ++k)
            if (word[k] > word[k + 1]) {
                coeff = fld.mul(coeff, a->q(word[k + 1], word[k]));
                std::swap(word[k], word[k + 1]);
            }
    std::vector<unsigned> exps(e.size(), 0);
    for (auto g : word) ++exps[g];
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] >= a->exponents()[i]) return std::nullopt;
    return std::make_pair(coeff, exps);
}

}  // namespace

TEST_CASE("quantum complete intersection structure constants") {
    Field f(7);
    auto a = qci_algebra(f, {3, 2, 2}, {{1, 3, 2}, {1, 1, 6}, {1, 1, 1}});
    CHECK(a->dim() == 12);
    for (std::size_t x = 0; x < a->dim(); ++x)
        for (std::size_t y = 0; y < a->dim(); ++y) {
            auto got = a->multiply(x, y);
            auto want = normal_order(a, a->monomials()[x], a->monomials()[y]);
            REQUIRE(got.has_value() == want.has_value());
            if (got) {
                CHECK(got->first == want->first);
                CHECK(a->monomials()[got->second] == want->second);
            }
        }
    CHECK(a->monomial_index({0, 0, 0}) == 0);
    CHECK(a->q(1, 0) == f.inv(3));
}

TEST_CASE("generator matrices satisfy the relations") {
    Field f(5);
    auto a = qci_uniform(f, {2, 3}, 2);
    CHECK(satisfies_relations(a, {a->left_generator(0), a->left_generator(1)}, a->dim()));
    // Right multiplication realizes the opposite algebra.
    CHECK(satisfies_relations(opposite(a), {a->right_generator(0), a->right_generator(1)}, a->dim()));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(a->left_generator(i) * a->right_generator(j) == a->right_generator(j) * a->left_generator(i));
}

TEST_CASE("invalid algebras are rejected") {
    Field f(3);
    CHECK_THROWS_AS(qci_uniform(f, {1}, 1), ContractError);
    CHECK_THROWS_AS(qci_uniform(f, {3, 3}, 0), ContractError);
    CHECK_THROWS_AS(qci_uniform(f, {2}, 1, Coproduct::primitive), ContractError);
    CHECK_THROWS_AS(qci_uniform(f, {3, 3}, 2, Coproduct::primitive), ContractError);
    CHECK_THROWS_AS(coproduct_from_string("hopf"), ContractError);
}

TEST_CASE("enveloping algebra and the regular bimodule") {
    Field f(5);
    auto a = qci_uniform(f, {2, 3}, 3);
    Envelope e = enveloping(a);
    CHECK(e.env->dim() == a->dim() * a->dim());
    CHECK(e.env->generator_count() == 4);
    Module reg = regular_bimodule(e);
    CHECK(reg.dim() == a->dim());
    CHECK(satisfies_relations(e.env, reg.actions(), reg.dim()));
    CHECK(is_projective(restrict_left(e, reg)));
    CHECK(is_projective(restrict_right(e, reg)));
    CHECK_FALSE(is_projective(reg));
}

TEST_CASE("modules, maps and covers") {
    Field f(3);
    auto a = qci_uniform(f, {3, 3}, 1, Coproduct::primitive);
    Module k = trivial_module(a), r = regular_module(a), p2 = free_module(a, 2);
    CHECK(k.dim() == 1);
    CHECK(p2.dim() == 18);
    CHECK(radical(r).dim() == 8);
    CHECK(is_projective(r));
    CHECK(is_projective(p2));
    CHECK_FALSE(is_projective(k));
    CHECK(composition_length(r) == 9);

    // Actions that break x^3 = 0 are rejected.
    Matrix j = Matrix::from_ints(f, 2, 2, {1, 0, 0, 0});
    CHECK_THROWS_AS(Module::make(a, 2, {j, Matrix(f, 2, 2)}), ContractError);

    // free_map sends generator j to images column j and is A-linear.
    Matrix images = Matrix::from_ints(f, 9, 2, {1, 0, 0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 2});
    Matrix m = free_map(r, images);
    CHECK(intertwines(p2, r, m));
    CHECK(m.column(0) == images.column(0));
    CHECK(m.column(9) == images.column(1));

    ProjectiveCover c = projective_cover(k);
    CHECK(c.rank == 1);
    CHECK(c.kernel.module.dim() == 8);

    // Top of A (+) k has dimension 2.
    ProjectiveCover c2 = projective_cover(direct_sum(r, k));
    CHECK(c2.rank == 2);
}

TEST_CASE("hom spaces match independent counts") {
    Field f(3);
    auto a = qci_uniform(f, {3, 3}, 1, Coproduct::primitive);
    Module k = trivial_module(a), r = regular_module(a);
    // Hom(A, M) = M.
    CHECK(hom_basis(r, k).size() == 1);
    CHECK(hom_basis(r, r).size() == 9);
    // Hom(k, A) = socle of A: common kernel of the generator actions.
    Matrix stacked = vconcat(a->left_generator(0), a->left_generator(1));
    CHECK(hom_basis(k, r).size() == kernel_basis(stacked).cols());
    for (const Matrix& h : hom_basis(r, r)) CHECK(intertwines(r, r, h));
    CHECK(find_isomorphism(r, free_module(a, 1)).has_value());
    CHECK_FALSE(find_isomorphism(k, r).has_value());
    CHECK_THROWS_AS(hom_basis(r, free_module(a, 20), 100), BudgetExceeded);
}

TEST_CASE("tensor products") {
    Field f(3);
    for (Coproduct cp : {Coproduct::primitive, Coproduct::group_shifted}) {
        auto a = qci_uniform(f, {3, 3}, 1, cp);
        Module k = trivial_module(a), r = regular_module(a);
        Module kr = tensor_diagonal(k, r);
        CHECK(kr.dim() == 9);
        CHECK(satisfies_relations(a, kr.actions(), kr.dim()));
        CHECK(find_isomorphism(kr, r).has_value());
        // Projectives form an ideal.
        Module rr = tensor_diagonal(r, r);
        CHECK(is_projective(rr));
        CHECK(rr.dim() == 81);
    }
    auto plain = qci_uniform(f, {3, 3}, 1);
    CHECK_THROWS_AS(tensor_diagonal(trivial_module(plain), trivial_module(plain)), UnsupportedOperation);

    // A (x)_A M = M over the algebra.
    auto a = qci_uniform(Field(5), {2, 3}, 2);
    Envelope e = enveloping(a);
    Module reg = regular_bimodule(e);
    Module m = direct_sum(regular_module(a), trivial_module(a));
    Quotient q = tensor_over(e, reg, m);
    CHECK(q.module.dim() == m.dim());
    CHECK(find_isomorphism(q.module, m).has_value() == find_isomorphism(m, q.module).has_value());
    CHECK(tensor_over(e, reg, reg).module.dim() == a->dim());
}
