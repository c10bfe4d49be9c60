#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcx/chain.hpp"
#include "homcx/resolution.hpp"

namespace homcx {

using ResolutionPtr = std::shared_ptr<const Resolution>;

/// A degree-n class represented on a minimal resolution.
///
/// `cocycle` is the module map P_n -> target (target is the unit module
/// for the tensor-category path, the regular bimodule for the Hochschild
/// path). `induced` is the map Omega^n -> target it factors through.
struct CohomologyClass {
    std::size_t degree = 0;
    ResolutionPtr resolution;
    Module target;
    Matrix cocycle;
    Matrix induced;
};

/// One class per generator of P_n (minimality makes every functional a
/// cocycle and none a coboundary). Requires the resolution to reach P_n.
std::vector<CohomologyClass> ext_classes(const ResolutionPtr& res, std::size_t n);
/// The class whose functional on the generators of P_n is `coefficients`.
CohomologyClass ext_class(const ResolutionPtr& res, std::size_t n, const std::vector<Elem>& coefficients);

/// z^s, by lifting z to a chain map of resolutions and composing.
CohomologyClass yoneda_power(const CohomologyClass& z, std::size_t s);

/// Hochschild classes of degree n over a bimodule resolution of A: maps
/// Omega^n -> A chosen greedily (Hom basis order) to be independent
/// modulo those that extend to Q_{n-1}.
std::vector<CohomologyClass> hochschild_classes(const ResolutionPtr& res, const Module& regular_bimodule,
                                                std::size_t n);

/// The pushout K of Omega^n -> P_{n-1} along the induced map, with
/// mu : target -> K and rho : K -> P_{n-2}.
struct Pushout {
    Module object;
    Matrix mu;
    Matrix rho;
    Matrix from_cover;  ///< P_{n-1} -> K
};
Pushout build_K(const CohomologyClass& z);

/// The complex K -> P_{n-2} -> ... -> P_0 of length n with its self map nu
/// of shift n-1 (single component mu o augmentation on degree 0).
struct ClassComplex {
    CohomologyClass cls;
    Pushout pushout;
    ComplexPtr complex;
    ChainMap nu;

    int odd_degree() const { return static_cast<int>(cls.degree) - 1; }
};
ClassComplex build_C(const CohomologyClass& z);

enum class SignConvention {
    koszul,
    naive,  ///< drops the Koszul sign on tensored maps; a negative control only
};

/// C_{z_1} (x) ... (x) C_{z_c} with the induced chain maps theta_i.
///
/// Diagonal mode associates to the left. Over-the-algebra mode builds
/// C_{z_c} (x)_A ( ... (x)_A (C_{z_1} (x)_A S)) for a left module S.
struct TensorFamily {
    std::vector<ClassComplex> factors;
    TensorMode mode = TensorMode::diagonal;
    std::vector<TensorComplex> stages;
    ComplexPtr total;
    std::vector<ChainMap> thetas;
    int odd_degree = 1;
};
TensorFamily build_tensor_family(const std::vector<ClassComplex>& factors, TensorMode mode,
                                 const std::optional<Envelope>& env = std::nullopt,
                                 const std::optional<Module>& right_module = std::nullopt,
                                 std::size_t max_dim = 1u << 14,
                                 SignConvention signs = SignConvention::koszul);

/// Induced maps of each theta on homology, keyed by source degree.
std::vector<std::map<int, Matrix>> homology_actions(const TensorFamily& family);
/// Every theta is a chain map, its square is zero on homology and distinct
/// thetas anticommute on homology.
bool thetas_anticommute_on_homology(const TensorFamily& family);
/// Products of the thetas with increasing indices carry a basis of H_0 to a
/// basis of the whole homology.
bool exterior_free_rank_one(const TensorFamily& family);

/// theta_1 theta_2 + theta_3 theta_4 + theta_5 theta_6 + theta_7 theta_8.
ChainMap lefschetz_w(const std::vector<ChainMap>& thetas);
/// The sum of theta_{2k-1} theta_{2k} over the available pairs (at most 4).
ChainMap pair_element(const std::vector<ChainMap>& thetas);

/// Checks that the diagonal tensor of the K's is projective.
bool verify_lemma_projective(const std::vector<ClassComplex>& factors, std::size_t max_dim);
bool verify_lemma_projective(const std::vector<Pushout>& ks, std::size_t max_dim);

struct ParameterSystem {
    std::vector<CohomologyClass> classes;
    std::vector<std::size_t> ext_indices;  ///< positions in the Ext basis
    bool projective_verified = false;
};

/// First tuple (lexicographic in Ext-basis indices, repetition allowed) of
/// degree-n classes whose K-tensor is projective. nullopt if none is.
std::optional<ParameterSystem> select_parameters(const ResolutionPtr& res, std::size_t count, std::size_t n,
                                                 std::size_t max_dim);

enum class AdditiveFunction { dim, length };
std::string to_string(AdditiveFunction f);
AdditiveFunction additive_function_from_string(const std::string& s);
std::size_t evaluate(AdditiveFunction f, const Module& m);

/// Outcome of building a complex D.
struct ConstructionReport {
    std::size_t rank = 0;         ///< c (or d)
    std::size_t degree = 0;       ///< n of the classes actually used (s * base degree)
    std::size_t power = 1;
    AdditiveFunction function = AdditiveFunction::dim;
    std::map<int, long long> homology;  ///< normalized by f(unit), keyed by concrete degree
    long long total = 0;
    long long bound = 0;          ///< 2^rank
    std::map<int, bool> projective;
    int lo = 0, hi = -1;
    std::size_t length() const { return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0; }
};

/// Cone of pair_element(thetas) on the tensor family; requires rank >= 2.
ConstructionReport chain_level_D(const TensorFamily& family, AdditiveFunction f, std::size_t power);

/// Length (d + 2)(s n - 1) + 2 of D^s.
long long family_length(long long d, long long n, long long s);

/// Hochschild-side pipeline at desk scale.
struct BimoduleReport {
    std::size_t rank = 0;
    std::size_t degree = 0;
    std::vector<std::map<int, std::size_t>> factor_homology;  ///< per C_eta
    bool homology_is_regular = false;    ///< H_0 and H_{n-1} of every C_eta iso to A
    bool one_sided_projective = false;   ///< every term, cycle and boundary of every C_eta
    bool top_projective = false;         ///< M_eta_c (x)_A ... (x)_A M_eta_1 (x)_A S
    std::map<int, std::size_t> module_complex_homology;  ///< of C' = C_eta... (x)_A S
    std::map<int, bool> module_complex_projective;
    std::optional<ConstructionReport> cone;  ///< when rank >= 2
    std::size_t complexity = 0;
};
BimoduleReport bimodule_pipeline(const AlgebraPtr& a, std::size_t rank, std::size_t n, const Module& s,
                                 std::size_t max_dim);

/// Budget guard shared by the pipelines.
void check_budget(const std::string& what, std::size_t dim, std::size_t max_dim);

}  // namespace homcx
