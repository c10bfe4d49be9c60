#include "homcx/module.hpp"

#include <string>

namespace homcx {

namespace {

Matrix power(const Matrix& x, unsigned e) {
    Matrix r = Matrix::identity(x.field(), x.rows());
    for (unsigned k = 0; k < e; ++k) r = x * r;
    return r;
}

}  // namespace

bool satisfies_relations(const AlgebraPtr& algebra, const std::vector<Matrix>& actions,
                         std::size_t dim) {
    const std::size_t c = algebra->generator_count();
    if (actions.size() != c) return false;
    for (const auto& x : actions)
        if (x.rows() != dim || x.cols() != dim) return false;
    for (std::size_t i = 0; i < c; ++i)
        if (!power(actions[i], algebra->exponents()[i]).is_zero()) return false;
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j) {
            Matrix lhs = actions[j] * actions[i];
            Matrix rhs = (actions[i] * actions[j]).scaled(algebra->q(i, j));
            if (lhs != rhs) return false;
        }
    return true;
}

Module Module::make(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions) {
    if (!satisfies_relations(algebra, actions, dim))
        throw ContractError("action matrices violate the defining relations of " + algebra->describe());
    return trusted(std::move(algebra), dim, std::move(actions));
}

Module Module::trusted(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions) {
    return Module(std::move(algebra), dim,
                  std::make_shared<const std::vector<Matrix>>(std::move(actions)));
}

Matrix Module::apply_monomial(std::size_t mono, const Matrix& v) const {
    const auto& e = algebra_->monomials()[mono];
    Matrix r = v;
    for (std::size_t i = e.size(); i-- > 0;)
        for (unsigned k = 0; k < e[i]; ++k) r = action(i) * r;
    return r;
}

bool intertwines(const Module& source, const Module& target, const Matrix& m) {
    if (m.rows() != target.dim() || m.cols() != source.dim()) return false;
    for (std::size_t g = 0; g < source.generator_count(); ++g)
        if (target.action(g) * m != m * source.action(g)) return false;
    return true;
}

ModuleMorphism ModuleMorphism::make(Module source, Module target, Matrix matrix) {
    if (!intertwines(source, target, matrix))
        throw ContractError("matrix does not intertwine the module actions");
    return ModuleMorphism{std::move(source), std::move(target), std::move(matrix)};
}

Module trivial_module(const AlgebraPtr& a) {
    std::vector<Matrix> acts(a->generator_count(), Matrix::zero(a->field(), 1, 1));
    return Module::trusted(a, 1, std::move(acts));
}

Module zero_module(const AlgebraPtr& a) {
    std::vector<Matrix> acts(a->generator_count(), Matrix::zero(a->field(), 0, 0));
    return Module::trusted(a, 0, std::move(acts)).with_free_rank(0);
}

Module regular_module(const AlgebraPtr& a) { return free_module(a, 1); }

Module free_module(const AlgebraPtr& a, std::size_t rank) {
    std::vector<Matrix> acts;
    for (std::size_t g = 0; g < a->generator_count(); ++g)
        acts.push_back(kronecker(Matrix::identity(a->field(), rank), a->left_generator(g)));
    return Module::trusted(a, rank * a->dim(), std::move(acts)).with_free_rank(rank);
}

Module direct_sum(const Module& a, const Module& b) {
    std::vector<Matrix> acts;
    for (std::size_t g = 0; g < a.generator_count(); ++g)
        acts.push_back(homcx::direct_sum(a.action(g), b.action(g)));
    Module m = Module::trusted(a.algebra(), a.dim() + b.dim(), std::move(acts));
    if (a.free_rank() && b.free_rank()) m = m.with_free_rank(*a.free_rank() + *b.free_rank());
    return m;
}

Module regular_bimodule(const Envelope& e) {
    std::vector<Matrix> acts;
    const std::size_t c = e.base->generator_count();
    for (std::size_t i = 0; i < c; ++i) acts.push_back(e.base->left_generator(i));
    for (std::size_t i = 0; i < c; ++i) acts.push_back(e.base->right_generator(i));
    return Module::trusted(e.env, e.base->dim(), std::move(acts));
}

Matrix free_map(const Module& target, const Matrix& images) {
    const AlgebraPtr& a = target.algebra();
    const std::size_t r = images.cols(), n = a->dim();
    const auto& monos = a->monomials();
    std::vector<Matrix> image_of(n, Matrix(target.field(), 0, 0));
    image_of[0] = images;
    Matrix out(target.field(), target.dim(), r * n);
    for (std::size_t e = 0; e < n; ++e) {
        if (e > 0) {
            // x^e = x_i * x^{e - unit_i} for the leftmost nonzero exponent i.
            std::size_t i = 0;
            while (monos[e][i] == 0) ++i;
            auto prev = monos[e];
            --prev[i];
            image_of[e] = target.action(i) * image_of[a->monomial_index(prev)];
        }
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t row = 0; row < target.dim(); ++row) out(row, j * n + e) = image_of[e](row, j);
    }
    return out;
}

Echelon radical(const Module& m) {
    Matrix span(m.field(), m.dim(), 0);
    for (const auto& x : m.actions()) span = hconcat(span, x);
    return column_echelon(span);
}

Submodule submodule(const Module& m, const Matrix& span) {
    Echelon e = column_echelon(span);
    std::vector<Matrix> acts;
    for (const auto& x : m.actions()) acts.push_back(e.coordinates(x * e.basis));
    Module sub = Module::trusted(m.algebra(), e.dim(), std::move(acts));
    return Submodule{std::move(sub), std::move(e)};
}

Quotient quotient(const Module& m, const Matrix& span) {
    Echelon e = column_echelon(span);
    const std::size_t n = m.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) rest.push_back(i);
    const Field f = m.field();
    Matrix proj(f, rest.size(), n), sect(f, n, rest.size());
    for (std::size_t k = 0; k < rest.size(); ++k) {
        proj(k, rest[k]) = 1;
        sect(rest[k], k) = 1;
        for (std::size_t j = 0; j < e.dim(); ++j) proj(k, e.pivots[j]) = f.neg(e.basis(rest[k], j));
    }
    std::vector<Matrix> acts;
    for (const auto& x : m.actions()) acts.push_back(proj * x * sect);
    Module q = Module::trusted(m.algebra(), rest.size(), std::move(acts));
    return Quotient{std::move(q), std::move(proj), std::move(sect)};
}

ProjectiveCover projective_cover(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    Echelon rad = radical(m);
    std::vector<bool> in_rad(m.dim(), false);
    for (auto p : rad.pivots) in_rad[p] = true;
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (!in_rad[i]) top.push_back(i);
    Matrix images(m.field(), m.dim(), top.size());
    for (std::size_t j = 0; j < top.size(); ++j) images(top[j], j) = 1;
    Module p = free_module(a, top.size());
    Matrix epi = free_map(m, images);
    Submodule ker = submodule(p, kernel_basis(epi));
    return ProjectiveCover{std::move(p), top.size(), std::move(epi), std::move(ker)};
}

bool is_projective(const Module& m) {
    if (m.dim() == 0) return true;
    std::size_t top = m.dim() - radical(m).dim();
    return top * m.algebra()->dim() == m.dim();
}

std::size_t composition_length(const Module& m) { return m.dim(); }
std::size_t dimension(const Module& m) { return m.dim(); }

Matrix coproduct_action(Coproduct c, const Matrix& x, const Matrix& y) {
    const Field f = x.field();
    Matrix ix = Matrix::identity(f, x.rows());
    Matrix iy = Matrix::identity(f, y.rows());
    switch (c) {
        case Coproduct::primitive: return kronecker(x, iy) + kronecker(ix, y);
        case Coproduct::group_shifted: return kronecker(x, iy) + kronecker(ix, y) + kronecker(x, y);
        case Coproduct::none: break;
    }
    throw UnsupportedOperation("diagonal tensor product needs coproduct data");
}

Module tensor_diagonal(const Module& a, const Module& b) {
    const AlgebraPtr& alg = a.algebra();
    if (alg->coproduct() == Coproduct::none)
        throw UnsupportedOperation("diagonal tensor product needs coproduct data on " + alg->describe());
    std::vector<Matrix> acts;
    for (std::size_t g = 0; g < alg->generator_count(); ++g)
        acts.push_back(coproduct_action(alg->coproduct(), a.action(g), b.action(g)));
    return Module::trusted(alg, a.dim() * b.dim(), std::move(acts));
}

Quotient tensor_over(const Envelope& e, const Module& bimodule, const Module& x) {
    const std::size_t c = e.base->generator_count();
    if (bimodule.algebra() != e.env)
        throw ContractError("tensor_over: left factor must be a bimodule");
    const bool x_is_bimodule = x.algebra() == e.env;
    if (!x_is_bimodule && x.algebra() != e.base)
        throw ContractError("tensor_over: right factor must be a bimodule or a left module");
    const Field f = e.base->field();
    const Matrix i1 = Matrix::identity(f, bimodule.dim());
    const Matrix i2 = Matrix::identity(f, x.dim());
    Matrix rel(f, bimodule.dim() * x.dim(), 0);
    for (std::size_t i = 0; i < c; ++i)
        rel = hconcat(rel, kronecker(bimodule.action(e.right(i)), i2) - kronecker(i1, x.action(i)));
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < c; ++i) acts.push_back(kronecker(bimodule.action(e.left(i)), i2));
    if (x_is_bimodule)
        for (std::size_t i = 0; i < c; ++i) acts.push_back(kronecker(i1, x.action(e.right(i))));
    Module big = Module::trusted(x_is_bimodule ? e.env : e.base, bimodule.dim() * x.dim(), std::move(acts));
    return quotient(big, rel);
}

Module restrict_left(const Envelope& e, const Module& bimodule) {
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < e.base->generator_count(); ++i) acts.push_back(bimodule.action(e.left(i)));
    return Module::trusted(e.base, bimodule.dim(), std::move(acts));
}

Module restrict_right(const Envelope& e, const Module& bimodule) {
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < e.base->generator_count(); ++i) acts.push_back(bimodule.action(e.right(i)));
    return Module::trusted(opposite(e.base), bimodule.dim(), std::move(acts));
}

std::vector<Matrix> hom_basis(const Module& m, const Module& n, std::size_t max_unknowns) {
    const std::size_t dm = m.dim(), dn = n.dim();
    if (dm * dn > max_unknowns)
        throw BudgetExceeded("Hom space with " + std::to_string(dm * dn) + " unknowns exceeds budget " +
                             std::to_string(max_unknowns));
    const Field f = m.field();
    std::vector<Matrix> out;
    if (dm == 0 || dn == 0) return out;
    // vec_row(N H - H M) = (N (x) I - I (x) M^T) vec_row(H)
    Matrix sys(f, 0, dm * dn);
    const Matrix im = Matrix::identity(f, dm), in = Matrix::identity(f, dn);
    for (std::size_t g = 0; g < m.generator_count(); ++g)
        sys = vconcat(sys, kronecker(n.action(g), im) - kronecker(in, m.action(g).transpose()));
    Matrix ker = sys.rows() ? kernel_basis(sys) : Matrix::identity(f, dm * dn);
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Matrix h(f, dn, dm);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) h(r, c) = ker(r * dm + c, k);
        out.push_back(std::move(h));
    }
    return out;
}

std::optional<Matrix> find_isomorphism(const Module& m, const Module& n) {
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Matrix(m.field(), 0, 0);
    auto basis = hom_basis(m, n);
    for (const auto& h : basis)
        if (rank(h) == m.dim()) return h;
    if (!basis.empty()) {
        Matrix sum = basis.front();
        for (std::size_t k = 1; k < basis.size(); ++k) sum = sum + basis[k];
        if (rank(sum) == m.dim()) return sum;
    }
    return std::nullopt;
}

}  // namespace homcx
