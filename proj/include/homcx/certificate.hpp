#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "homcx/algebra.hpp"
#include "homcx/construction.hpp"

namespace homcx {

enum class RunMode { chain, symbolic, crosscheck };
std::string to_string(RunMode m);
RunMode run_mode_from_string(const std::string& s);

enum class PipelinePath { tensor, bimodule };
std::string to_string(PipelinePath p);
PipelinePath pipeline_path_from_string(const std::string& s);

struct RunConfig {
    RunMode mode = RunMode::symbolic;
    std::uint32_t characteristic = 3;
    std::vector<unsigned> exponents{3, 3};
    /// Commutation parameters q_ij for i < j in row order; empty means all 1.
    std::vector<long long> commutators;
    Coproduct coproduct = Coproduct::primitive;
    PipelinePath path = PipelinePath::tensor;
    int rank = 8;
    int degree = 2;
    int power = 1;
    AdditiveFunction function = AdditiveFunction::dim;
    std::size_t budget_dim = 1u << 14;
    std::size_t budget_entries = 1u << 22;
    std::uint64_t seed = 0;
    /// Test hook: tensor chain maps without the Koszul sign.
    bool corrupt_signs = false;
};

/// Reads the key = value document (sections [algebra], [construction],
/// [budget], [run]); missing keys keep their defaults. Throws ContractError.
RunConfig load_config(const std::string& path);
/// Throws ContractError (usage) when the mode's preconditions fail.
void validate(const RunConfig& cfg);

AlgebraPtr build_algebra(const RunConfig& cfg);

using Certificate = nlohmann::json;

/// Runs every verification the config asks for. Deterministic: no clocks,
/// no unseeded randomness. Throws ContractError or BudgetExceeded.
Certificate run(const RunConfig& cfg);

/// True iff every recorded verdict passed.
bool all_verdicts_pass(const Certificate& cert);

/// Human-readable rendering of a certificate.
std::string render_summary(const Certificate& cert);

namespace exit_code {
constexpr int ok = 0;
constexpr int verdict_failed = 2;
constexpr int usage = 64;
constexpr int budget = 65;
}  // namespace exit_code

}  // namespace homcx
