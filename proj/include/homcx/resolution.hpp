#pragma once

#include <vector>

#include "homcx/module.hpp"

namespace homcx {

/// Minimal free resolution P_N -> ... -> P_0 -> M -> 0 by iterated projective covers.
///
/// Indexing: projectives[i] = P_i, differentials[i] = d_i : P_i -> P_{i-1}
/// (differentials[0] is unused and empty), syzygies[i] = Omega^i M as a
/// submodule of P_{i-1} (syzygies[0] is M itself with an empty inclusion),
/// covers[i] : P_i -> Omega^i M in syzygy coordinates.
struct Resolution {
    Module module;
    std::vector<Module> projectives;
    std::vector<std::size_t> betti;
    std::vector<Matrix> differentials;
    std::vector<Submodule> syzygies;
    std::vector<Matrix> covers;

    std::size_t length() const { return projectives.size() - 1; }
    /// P_0 -> M.
    const Matrix& augmentation() const { return covers[0]; }
    const Matrix& differential(std::size_t i) const { return differentials.at(i); }
    const Submodule& syzygy(std::size_t i) const { return syzygies.at(i); }
};

/// Resolves `m` through P_N; also materializes Omega^{N+1} so exactness at
/// P_N can be checked.
Resolution minimal_resolution(const Module& m, std::size_t n);

/// image(d_i) lies in rad P_{i-1} for every computed degree.
bool is_minimal(const Resolution& r);
/// rank d_i + rank d_{i+1} == dim P_i at every internal degree, and the
/// augmentation is onto.
bool is_exact(const Resolution& r);

/// Polynomial growth rate of the Betti numbers b_1..b_N: the number of
/// finite differences needed to reach the zero sequence. A heuristic
/// estimate of the complexity; requires N >= 4.
std::size_t complexity_estimate(const Module& m, std::size_t n);
std::size_t complexity_from_betti(const std::vector<std::size_t>& betti);

}  // namespace homcx
