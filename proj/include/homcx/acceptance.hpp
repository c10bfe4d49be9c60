#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "homcx/certificate.hpp"
#include "homcx/chain.hpp"

namespace homcx {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  ///< 0 when untimed
};

struct AcceptanceOptions {
    std::uint64_t seed = 20261016;
    std::size_t property_cases = 240;
    /// Drop Koszul signs in the rank-2 run; the anticommutation check must then fail.
    bool corrupt_signs = false;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// Certificate for `selftest`. Leaves out wall-clock times so it stays reproducible.
Certificate selftest_certificate(const std::vector<CriterionResult>& results, const AcceptanceOptions& opts);

/// A random bounded complex of free modules: d_1 random, each later
/// differential sends generators into the kernel of the previous one.
ChainComplex random_free_complex(std::mt19937_64& rng, const AlgebraPtr& a, int max_objects = 3,
                                 std::size_t max_rank = 2);

}  // namespace homcx
