#include <doctest.h>

#include "homcx/resolution.hpp"

using namespace homcx;

namespace {

// Poincare series of Ext(k, k) over a complete intersection on c generators: 1/(1-t)^c.
std::size_t ci_betti(std::size_t c, std::size_t i) {
    std::size_t num = 1, den = 1;
    for (std::size_t j = 1; j < c; ++j) {
        num *= i + j;
        den *= j;
    }
    return num / den;
}

void check_resolution(const Resolution& r) {
    CHECK(is_exact(r));
    CHECK(is_minimal(r));
    for (std::size_t i = 1; i <= r.length(); ++i) {
        // 0 -> Omega^{i} -> P_{i-1} -> Omega^{i-1} -> 0
        std::size_t prev = i == 1 ? r.module.dim() : r.syzygies[i - 1].module.dim();
        CHECK(r.syzygies[i].module.dim() + prev == r.projectives[i - 1].dim());
    }
}

}  // namespace

TEST_CASE("Betti numbers of the trivial module") {
    struct Case {
        std::uint32_t p;
        std::vector<unsigned> exps;
        Elem q;
    };
    for (const Case& c : {Case{3, {3}, 1}, Case{3, {3, 3}, 1}, Case{5, {2, 3}, 2}, Case{3, {2, 2}, 2},
                          Case{2, {2, 2, 2}, 1}}) {
        auto a = qci_uniform(Field(c.p), c.exps, c.q);
        Resolution r = minimal_resolution(trivial_module(a), 4);
        check_resolution(r);
        for (std::size_t i = 0; i <= 4; ++i) CHECK(r.betti[i] == ci_betti(c.exps.size(), i));
    }
}

TEST_CASE("complexity estimate") {
    auto a1 = qci_uniform(Field(3), {3}, 1);
    auto a2 = qci_uniform(Field(3), {3, 3}, 1);
    CHECK(complexity_estimate(trivial_module(a1), 5) == 1);
    CHECK(complexity_estimate(trivial_module(a2), 5) == 2);
    CHECK(complexity_estimate(regular_module(a2), 5) == 0);
    CHECK(complexity_from_betti({1, 1, 1, 1, 1}) == 1);
    CHECK(complexity_from_betti({1, 2, 3, 4, 5}) == 2);
    CHECK_THROWS_AS(complexity_estimate(trivial_module(a1), 3), ContractError);
}

TEST_CASE("resolution of a non-trivial module") {
    auto a = qci_uniform(Field(3), {3, 3}, 1);
    // A / (x): one generator, Betti numbers 1, 1, 1, ...
    Module r = regular_module(a);
    Quotient q = quotient(r, r.action(0) * Matrix::identity(a->field(), 9));
    CHECK(q.module.dim() == 3);
    Resolution res = minimal_resolution(q.module, 4);
    check_resolution(res);
    for (auto b : res.betti) CHECK(b == 1);
}
