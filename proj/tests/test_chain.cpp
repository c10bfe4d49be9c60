#include <doctest.h>

#include "homcx/chain.hpp"

using namespace homcx;

namespace {

AlgebraPtr cyclic3() { return qci_uniform(Field(3), {3}, 1, Coproduct::primitive); }

Matrix mult(const AlgebraPtr& a, unsigned power) {
    Matrix m = Matrix::identity(a->field(), a->dim());
    for (unsigned i = 0; i < power; ++i) m = m * a->left_generator(0);
    return m;
}

// A --x^{e_k}--> ... --x^{e_1}--> A in degrees 0..len.
ComplexPtr powers_complex(const AlgebraPtr& a, const std::vector<unsigned>& exps, int lo = 0) {
    std::vector<Module> objs(exps.size() + 1, regular_module(a));
    std::vector<Matrix> diffs{Matrix(a->field(), 0, 0)};
    for (unsigned e : exps) diffs.push_back(mult(a, e));
    return std::make_shared<const ChainComplex>(ChainComplex::make(a, lo, objs, diffs));
}

}  // namespace

TEST_CASE("homology of small complexes") {
    auto a = cyclic3();
    auto c = powers_complex(a, {1});
    // coker x = A/xA, ker x = (x^2).
    CHECK(homology_dims(*c) == std::map<int, std::size_t>{{0, 1}, {1, 1}});
    auto c2 = powers_complex(a, {1, 2});
    CHECK(homology_dims(*c2) == std::map<int, std::size_t>{{0, 1}, {1, 0}, {2, 2}});
    CHECK(euler_characteristic(*c2) == 3);
    CHECK(homology_euler_characteristic(*c2) == 3);
    // Periodic x, x^2, x: exact in the middle.
    auto c3 = powers_complex(a, {1, 2, 1});
    CHECK(homology_dims(*c3).at(1) == 0);
    CHECK(homology_dims(*c3).at(2) == 0);

    Homology h = homology(*c2, 2);
    CHECK(h.dim() == 2);
    CHECK((c2->differential(2) * h.representatives()).is_zero());
}

TEST_CASE("invalid differentials are rejected") {
    auto a = cyclic3();
    std::vector<Module> objs(3, regular_module(a));
    CHECK_THROWS_AS(ChainComplex::make(a, 0, objs, {Matrix(a->field(), 0, 0), mult(a, 1), mult(a, 1)}), ContractError);
    Matrix not_linear(a->field(), 3, 3);
    not_linear(0, 0) = 1;
    CHECK_THROWS_AS(ChainComplex::make(a, 0, {objs[0], objs[1]}, {Matrix(a->field(), 0, 0), not_linear}),
                    ContractError);
}

TEST_CASE("shift re-indexes and twists the differential") {
    auto a = cyclic3();
    auto c = powers_complex(a, {1, 2});
    ChainComplex s = shift(*c, 3);
    CHECK(s.lo() == 3);
    CHECK(homology_dims(s).at(5) == 2);
    CHECK(s.differential(4) == -c->differential(1));
}

TEST_CASE("chain maps, cones and homotopies") {
    auto a = cyclic3();
    auto c = powers_complex(a, {1});
    ChainMap id = identity_map(c);
    CHECK(is_chain_map(id));
    CHECK_FALSE(is_null_homotopic(id));
    ChainComplex cone = mapping_cone(id);
    for (const auto& [deg, dim] : homology_dims(cone)) CHECK(dim == 0);
    CHECK(cone_les_holds(id));
    CHECK(cone_les_holds(zero_map(c, c, 0)));
    CHECK(cone_les_holds(scale(id, 2)));

    // Identity of an exact complex is null-homotopic; check the witness.
    auto exact = powers_complex(a, {0});
    ChainMap e = identity_map(exact);
    auto h = null_homotopy(e);
    REQUIRE(h.has_value());
    for (int i = exact->lo(); i <= exact->hi(); ++i) {
        Matrix lhs = e.component(i);
        Matrix rhs(a->field(), lhs.rows(), lhs.cols());
        if (h->count(i)) rhs = rhs + exact->differential(i + 1) * h->at(i);
        if (h->count(i - 1)) rhs = rhs + h->at(i - 1) * exact->differential(i);
        CHECK(lhs == rhs);
    }

    // x^2 : C -> C in degree 0 only, shift 1 (degree 0 to degree 1).
    ChainMap f{c, c, 1, {}};
    f.components.emplace(0, mult(a, 2));
    CHECK(is_chain_map(f));
    CHECK(cone_les_holds(f));
    ChainMap ff = compose(f, f);
    CHECK(ff.shift == 2);
    CHECK(is_chain_map(ff));

    ChainMap bad{c, c, 0, {}};
    bad.components.emplace(0, mult(a, 0));
    CHECK_FALSE(is_chain_map(bad));
}

TEST_CASE("tensor complexes") {
    auto a = cyclic3();
    auto c = powers_complex(a, {1});
    TensorComplex t = tensor_complex(c, c, TensorMode::diagonal);
    CHECK(t.complex->lo() == 0);
    CHECK(t.complex->hi() == 2);
    CHECK(t.complex->dim(1) == 18);
    // Kunneth over the ground field.
    CHECK(homology_dims(*t.complex) == std::map<int, std::size_t>{{0, 1}, {1, 2}, {2, 1}});
    // Identity tensors to the identity.
    ChainMap id = tensor_maps(identity_map(c), identity_map(c), t, t);
    for (int i = 0; i <= 2; ++i) CHECK(id.component(i) == Matrix::identity(a->field(), t.complex->dim(i)));

    ChainMap f{c, c, 1, {}};
    f.components.emplace(0, mult(a, 2));
    ChainMap f1 = tensor_maps(f, identity_map(c), t, t);
    ChainMap f2 = tensor_maps(identity_map(c), f, t, t);
    CHECK(is_chain_map(f1));
    CHECK(is_chain_map(f2));
    CHECK_FALSE(is_chain_map(tensor_maps(identity_map(c), f, t, t, false)));

    CHECK_THROWS_AS(tensor_complex(c, c, TensorMode::diagonal, std::nullopt, 10), BudgetExceeded);
}

TEST_CASE("tensor over the algebra") {
    auto a = cyclic3();
    Envelope e = enveloping(a);
    Module reg = regular_bimodule(e);
    auto bim = std::make_shared<const ChainComplex>(ChainComplex::stalk(reg, 0));
    auto c = powers_complex(a, {1});
    TensorComplex t = tensor_complex(bim, c, TensorMode::over_algebra, e);
    CHECK(t.complex->algebra() == a);
    CHECK(homology_dims(*t.complex) == homology_dims(*c));
    CHECK_THROWS_AS(tensor_complex(bim, c, TensorMode::over_algebra), UnsupportedOperation);
}
