#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "homcx/module.hpp"

namespace homcx {

/// Bounded complex with homological indexing: d_i maps degree i to i-1.
///
/// Objects outside [lo, hi] are zero. An empty complex has hi < lo.
class ChainComplex {
public:
    /// `diffs[k]` is the differential leaving degree lo + k (diffs[0] is
    /// ignored and may be empty). Checks d^2 = 0 and A-linearity when `check`.
    static ChainComplex make(AlgebraPtr algebra, int lo, std::vector<Module> objects,
                             std::vector<Matrix> diffs, bool check = true);
    static ChainComplex stalk(const Module& m, int degree);

    const AlgebraPtr& algebra() const { return algebra_; }
    Field field() const { return algebra_->field(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(objects_.size()) - 1; }
    bool in_support(int i) const { return i >= lo_ && i <= hi(); }

    const Module& object(int i) const;
    std::size_t dim(int i) const { return in_support(i) ? object(i).dim() : 0; }
    /// d_i : C_i -> C_{i-1}; a correctly shaped zero matrix outside the support.
    Matrix differential(int i) const;

    std::size_t total_dim() const;
    /// Largest object dimension.
    std::size_t max_dim() const;

private:
    AlgebraPtr algebra_;
    int lo_ = 0;
    std::vector<Module> objects_;
    std::vector<Matrix> diffs_;
    Module zero_ = Module::trusted(nullptr, 0, {});
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// A chain map f : Sigma^shift X -> Y stored by components f_i : X_i -> Y_{i+shift}.
/// Condition: d^Y f_i = (-1)^shift f_{i-1} d^X.
struct ChainMap {
    ComplexPtr source;
    ComplexPtr target;
    int shift = 0;
    std::map<int, Matrix> components;

    /// f_i, or the zero matrix of the right shape.
    Matrix component(int i) const;
};

bool is_chain_map(const ChainMap& f);

ChainMap zero_map(const ComplexPtr& x, const ComplexPtr& y, int shift);
ChainMap identity_map(const ComplexPtr& c);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap scale(const ChainMap& f, Elem s);
/// f . g := f o Sigma^{f.shift}(g); shifts add.
ChainMap compose(const ChainMap& f, const ChainMap& g);

/// Objects re-indexed by +m, differentials multiplied by (-1)^m.
ChainComplex shift(const ChainComplex& c, int m);

struct Homology {
    int degree = 0;
    Module module;
    Echelon cycles;      ///< Z_i in C_i coordinates
    Quotient quotient;   ///< Z_i / B_i, in Z_i coordinates

    std::size_t dim() const { return module.dim(); }
    /// Cycle representatives of the homology basis (C_i x H_i).
    Matrix representatives() const { return cycles.basis * quotient.section; }
    /// Homology classes of cycles given as columns in C_i coordinates.
    Matrix classes_of(const Matrix& cycles_in_c) const {
        return quotient.projection * cycles.coordinates(cycles_in_c);
    }
};

Homology homology(const ChainComplex& c, int i);
/// Homology dimensions for every degree in the support.
std::map<int, std::size_t> homology_dims(const ChainComplex& c);
long long euler_characteristic(const ChainComplex& c);
long long homology_euler_characteristic(const ChainComplex& c);

/// Induced maps H_i(X) -> H_{i+shift}(Y) keyed by i.
std::map<int, Matrix> induced_on_homology(const ChainMap& f);

/// Cone of f : Sigma^s X -> Y. Degree j holds X_{j-1-s} (+) Y_j with
/// differential [[-(-1)^s d^X, 0], [-f, d^Y]].
ChainComplex mapping_cone(const ChainMap& f);

/// dim H_j(cone) == dim coker(H f into H_j(Y)) + dim ker(H f out of H_{j-1-s}(X)) for all j.
bool cone_les_holds(const ChainMap& f);

/// Searches for an A-linear homotopy h_i : X_i -> Y_{i+s+1} with
/// f_i = d h_i + (-1)^s h_{i-1} d. Returns the witness components when one exists.
std::optional<std::map<int, Matrix>> null_homotopy(const ChainMap& f, std::size_t max_unknowns = 20000);
bool is_null_homotopic(const ChainMap& f, std::size_t max_unknowns = 20000);

enum class TensorMode { diagonal, over_algebra };

/// C1 (x) C2 with object_n = (+)_{s+t=n} C1_s (x) C2_t ordered by s, and
/// d(x (x) y) = dx (x) y + (-1)^s x (x) dy.
struct TensorComplex {
    struct Piece {
        int s = 0, t = 0;
        std::size_t offset = 0;  ///< within object_{s+t}
        std::size_t dim = 0;
        std::optional<Quotient> over;  ///< quotient data in over_algebra mode
    };

    ComplexPtr complex;
    ComplexPtr left;
    ComplexPtr right;
    TensorMode mode = TensorMode::diagonal;
    std::optional<Envelope> envelope;
    std::map<int, std::vector<Piece>> pieces;

    const Piece* find(int s, int t) const;
};

/// Throws BudgetExceeded if any object would exceed `max_dim`.
TensorComplex tensor_complex(const ComplexPtr& c1, const ComplexPtr& c2, TensorMode mode,
                             const std::optional<Envelope>& env = std::nullopt,
                             std::size_t max_dim = 1u << 14);

/// (f (x) g)(x (x) y) = (-1)^{|g| |x|} f(x) (x) g(y) between tensor complexes
/// built with the same mode; `src` must be f.source (x) g.source and `dst`
/// f.target (x) g.target.
ChainMap tensor_maps(const ChainMap& f, const ChainMap& g, const TensorComplex& src,
                     const TensorComplex& dst, bool koszul_sign = true);

}  // namespace homcx
