#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "homcx/algebra.hpp"

namespace homcx {

/// A finite-dimensional left module: one action matrix per generator.
///
/// Copies are cheap; the action matrices are shared.
class Module {
public:
    /// Validates every defining relation of the algebra; throws ContractError otherwise.
    static Module make(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions);
    /// Skips the relation check. For results of constructions that preserve
    /// the relations by construction (submodules, quotients, tensors).
    static Module trusted(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions);

    const AlgebraPtr& algebra() const { return algebra_; }
    Field field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t g) const { return (*actions_)[g]; }
    const std::vector<Matrix>& actions() const { return *actions_; }
    std::size_t generator_count() const { return actions_->size(); }

    /// Rank when this module was built as a free module, else nullopt.
    std::optional<std::size_t> free_rank() const { return free_rank_; }
    Module with_free_rank(std::size_t r) const {
        Module m = *this;
        m.free_rank_ = r;
        return m;
    }

    /// Image of each vector (column of v) under the monomial with basis index `mono`.
    Matrix apply_monomial(std::size_t mono, const Matrix& v) const;

private:
    Module(AlgebraPtr a, std::size_t dim, std::shared_ptr<const std::vector<Matrix>> acts)
        : algebra_(std::move(a)), dim_(dim), actions_(std::move(acts)) {}

    AlgebraPtr algebra_;
    std::size_t dim_;
    std::shared_ptr<const std::vector<Matrix>> actions_;
    std::optional<std::size_t> free_rank_;
};

bool satisfies_relations(const AlgebraPtr& algebra, const std::vector<Matrix>& actions,
                         std::size_t dim);

/// A module map; `matrix` is target.dim x source.dim.
struct ModuleMorphism {
    Module source;
    Module target;
    Matrix matrix;

    /// Validates the intertwining condition.
    static ModuleMorphism make(Module source, Module target, Matrix matrix);
};

bool intertwines(const Module& source, const Module& target, const Matrix& m);

Module trivial_module(const AlgebraPtr& a);
Module regular_module(const AlgebraPtr& a);
Module free_module(const AlgebraPtr& a, std::size_t rank);
Module zero_module(const AlgebraPtr& a);
Module direct_sum(const Module& a, const Module& b);

/// The regular bimodule A as a module over the enveloping algebra.
Module regular_bimodule(const Envelope& e);

/// The A-linear map from the free module of rank images.cols() sending
/// generator j to images.column(j).
Matrix free_map(const Module& target, const Matrix& images);

/// rad M = sum of the images of the generators.
Echelon radical(const Module& m);

struct Submodule {
    Module module;
    Echelon inclusion;  ///< basis of the subspace, in ambient coordinates
};
/// The submodule spanned by the columns of `span` (must be invariant).
Submodule submodule(const Module& m, const Matrix& span);

struct Quotient {
    Module module;
    Matrix projection;  ///< quotient.dim x m.dim
    Matrix section;     ///< m.dim x quotient.dim; projection * section == I
};
Quotient quotient(const Module& m, const Matrix& span);

struct ProjectiveCover {
    Module projective;  ///< free of rank `rank`
    std::size_t rank;
    Matrix epi;         ///< m.dim x projective.dim
    Submodule kernel;   ///< inside `projective`
};
ProjectiveCover projective_cover(const Module& m);

/// For split local algebras: projective iff free iff dim M = dim(M/rad M) * dim A.
bool is_projective(const Module& m);

std::size_t composition_length(const Module& m);
std::size_t dimension(const Module& m);

/// Diagonal tensor product through the coproduct (Kronecker index pairing).
Module tensor_diagonal(const Module& a, const Module& b);
/// Action of a generator on M (x) N through the coproduct.
Matrix coproduct_action(Coproduct c, const Matrix& x, const Matrix& y);

/// B1 (x)_A X for a bimodule B1 and a bimodule or left module X, as a
/// quotient of B1 (x)_k X. Whether X is a bimodule is read off its algebra.
Quotient tensor_over(const Envelope& e, const Module& bimodule, const Module& x);

/// One-sided restrictions of a bimodule.
Module restrict_left(const Envelope& e, const Module& bimodule);
Module restrict_right(const Envelope& e, const Module& bimodule);

/// Basis of Hom_A(m, n) as matrices (n.dim x m.dim). Throws BudgetExceeded
/// when dim m * dim n exceeds `max_unknowns`.
std::vector<Matrix> hom_basis(const Module& m, const Module& n, std::size_t max_unknowns = 20000);

/// Searches the Hom basis for an isomorphism. Complete when `m` has a simple
/// top (then any surjective map is one); a sufficient test otherwise.
std::optional<Matrix> find_isomorphism(const Module& m, const Module& n);

}  // namespace homcx
