#include "homcx/chain.hpp"

#include <algorithm>
#include <string>

namespace homcx {

namespace {

Module direct_sum_all(const AlgebraPtr& a, const std::vector<Module>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim();
    std::vector<Matrix> acts(a->generator_count(), Matrix(a->field(), total, total));
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t g = 0; g < acts.size(); ++g) acts[g].set_block(off, off, p.action(g));
        off += p.dim();
    }
    return Module::trusted(a, total, std::move(acts));
}

}  // namespace

ChainComplex ChainComplex::make(AlgebraPtr algebra, int lo, std::vector<Module> objects,
                                std::vector<Matrix> diffs, bool check) {
    if (diffs.size() != objects.size())
        throw ContractError("complex needs one differential slot per object");
    ChainComplex c;
    c.algebra_ = std::move(algebra);
    c.lo_ = lo;
    c.objects_ = std::move(objects);
    c.diffs_ = std::move(diffs);
    c.zero_ = zero_module(c.algebra_);
    const Field f = c.algebra_->field();
    c.diffs_[0] = Matrix(f, 0, c.objects_.empty() ? 0 : c.objects_[0].dim());
    for (std::size_t k = 1; k < c.objects_.size(); ++k) {
        const Matrix& d = c.diffs_[k];
        if (d.rows() != c.objects_[k - 1].dim() || d.cols() != c.objects_[k].dim())
            throw ContractError("differential at degree " + std::to_string(lo + static_cast<int>(k)) +
                                " has the wrong shape");
        if (check && !intertwines(c.objects_[k], c.objects_[k - 1], d))
            throw ContractError("differential at degree " + std::to_string(lo + static_cast<int>(k)) +
                                " is not A-linear");
    }
    if (check)
        for (std::size_t k = 2; k < c.objects_.size(); ++k)
            if (!(c.diffs_[k - 1] * c.diffs_[k]).is_zero())
                throw ContractError("d^2 != 0 at degree " + std::to_string(lo + static_cast<int>(k)));
    return c;
}

ChainComplex ChainComplex::stalk(const Module& m, int degree) {
    return make(m.algebra(), degree, {m}, {Matrix(m.field(), 0, m.dim())});
}

const Module& ChainComplex::object(int i) const {
    if (!in_support(i)) return zero_;
    return objects_[static_cast<std::size_t>(i - lo_)];
}

Matrix ChainComplex::differential(int i) const {
    if (in_support(i) && in_support(i - 1)) return diffs_[static_cast<std::size_t>(i - lo_)];
    return Matrix(field(), dim(i - 1), dim(i));
}

std::size_t ChainComplex::total_dim() const {
    std::size_t t = 0;
    for (const auto& m : objects_) t += m.dim();
    return t;
}

std::size_t ChainComplex::max_dim() const {
    std::size_t t = 0;
    for (const auto& m : objects_) t = std::max(t, m.dim());
    return t;
}

Matrix ChainMap::component(int i) const {
    auto it = components.find(i);
    if (it != components.end()) return it->second;
    return Matrix(source->field(), target->dim(i + shift), source->dim(i));
}

bool is_chain_map(const ChainMap& f) {
    const Field fld = f.source->field();
    const Elem sign = fld.sign(f.shift);
    for (int i = f.source->lo(); i <= f.source->hi() + 1; ++i) {
        Matrix lhs = f.target->differential(i + f.shift) * f.component(i);
        Matrix rhs = (f.component(i - 1) * f.source->differential(i)).scaled(sign);
        if (lhs != rhs) return false;
    }
    for (const auto& [i, m] : f.components)
        if (!intertwines(f.source->object(i), f.target->object(i + f.shift), m)) return false;
    return true;
}

ChainMap zero_map(const ComplexPtr& x, const ComplexPtr& y, int shift) { return ChainMap{x, y, shift, {}}; }

ChainMap identity_map(const ComplexPtr& c) {
    ChainMap id{c, c, 0, {}};
    for (int i = c->lo(); i <= c->hi(); ++i) id.components.emplace(i, Matrix::identity(c->field(), c->dim(i)));
    return id;
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
    if (f.shift != g.shift) throw ContractError("cannot add chain maps of different shift");
    ChainMap out{f.source, f.target, f.shift, {}};
    for (int i = f.source->lo(); i <= f.source->hi(); ++i) {
        Matrix m = f.component(i) + g.component(i);
        if (!m.is_zero()) out.components.emplace(i, std::move(m));
    }
    return out;
}

ChainMap scale(const ChainMap& f, Elem s) {
    ChainMap out = f;
    for (auto& [i, m] : out.components) m = m.scaled(s);
    return out;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
    if (f.source.get() != g.target.get())
        throw ContractError("compose: source of the outer map must be the target of the inner map");
    ChainMap out{g.source, f.target, f.shift + g.shift, {}};
    for (const auto& [i, gi] : g.components) {
        Matrix m = f.component(i + g.shift) * gi;
        if (!m.is_zero()) out.components.emplace(i, std::move(m));
    }
    return out;
}

ChainComplex shift(const ChainComplex& c, int m) {
    std::vector<Module> objs;
    std::vector<Matrix> diffs;
    const Elem s = c.field().sign(m);
    for (int i = c.lo(); i <= c.hi(); ++i) {
        objs.push_back(c.object(i));
        diffs.push_back(c.differential(i).scaled(s));
    }
    return ChainComplex::make(c.algebra(), c.lo() + m, std::move(objs), std::move(diffs), false);
}

Homology homology(const ChainComplex& c, int i) {
    const Module& obj = c.object(i);
    Submodule z = submodule(obj, kernel_basis(c.differential(i)));
    Matrix boundaries = z.inclusion.coordinates(c.differential(i + 1));
    Quotient q = quotient(z.module, boundaries);
    Module h = q.module;
    return Homology{i, std::move(h), std::move(z.inclusion), std::move(q)};
}

std::map<int, std::size_t> homology_dims(const ChainComplex& c) {
    std::map<int, std::size_t> out;
    for (int i = c.lo(); i <= c.hi(); ++i)
        out[i] = c.dim(i) - rank(c.differential(i)) - rank(c.differential(i + 1));
    return out;
}

long long euler_characteristic(const ChainComplex& c) {
    long long chi = 0;
    for (int i = c.lo(); i <= c.hi(); ++i) chi += ((i % 2 == 0) ? 1 : -1) * static_cast<long long>(c.dim(i));
    return chi;
}

long long homology_euler_characteristic(const ChainComplex& c) {
    long long chi = 0;
    for (const auto& [i, d] : homology_dims(c)) chi += ((i % 2 == 0) ? 1 : -1) * static_cast<long long>(d);
    return chi;
}

std::map<int, Matrix> induced_on_homology(const ChainMap& f) {
    std::map<int, Matrix> out;
    for (int i = f.source->lo(); i <= f.source->hi(); ++i) {
        Homology hx = homology(*f.source, i);
        Homology hy = homology(*f.target, i + f.shift);
        if (hy.dim() == 0 || hx.dim() == 0) {
            out.emplace(i, Matrix(f.source->field(), hy.dim(), hx.dim()));
            continue;
        }
        out.emplace(i, hy.classes_of(f.component(i) * hx.representatives()));
    }
    return out;
}

ChainComplex mapping_cone(const ChainMap& f) {
    const ChainComplex& x = *f.source;
    const ChainComplex& y = *f.target;
    const int s = f.shift;
    const Field fld = x.field();
    int lo = std::min(x.lo() + 1 + s, y.lo());
    int hi = std::max(x.hi() + 1 + s, y.hi());
    std::vector<Module> objs;
    std::vector<Matrix> diffs;
    const Elem neg_sign = fld.neg(fld.sign(s));
    for (int j = lo; j <= hi; ++j) {
        const int xj = j - 1 - s;
        objs.push_back(direct_sum(x.object(xj), y.object(j)));
        Matrix d(fld, x.dim(xj - 1) + y.dim(j - 1), x.dim(xj) + y.dim(j));
        d.set_block(0, 0, x.differential(xj).scaled(neg_sign));
        d.set_block(x.dim(xj - 1), 0, -f.component(xj));
        d.set_block(x.dim(xj - 1), x.dim(xj), y.differential(j));
        diffs.push_back(std::move(d));
    }
    if (objs.empty()) return ChainComplex::make(x.algebra(), 0, {zero_module(x.algebra())}, {Matrix(fld, 0, 0)});
    return ChainComplex::make(x.algebra(), lo, std::move(objs), std::move(diffs), false);
}

bool cone_les_holds(const ChainMap& f) {
    ChainComplex cone = mapping_cone(f);
    auto cone_dims = homology_dims(cone);
    auto hf = induced_on_homology(f);
    auto hx = homology_dims(*f.source);
    auto hy = homology_dims(*f.target);
    auto get = [](const std::map<int, std::size_t>& m, int i) -> long long {
        auto it = m.find(i);
        return it == m.end() ? 0 : static_cast<long long>(it->second);
    };
    auto rank_at = [&](int i) -> long long {
        auto it = hf.find(i);
        return it == hf.end() ? 0 : static_cast<long long>(rank(it->second));
    };
    const int s = f.shift;
    for (int j = cone.lo() - 1; j <= cone.hi() + 1; ++j) {
        long long coker = get(hy, j) - rank_at(j - s);
        long long ker = get(hx, j - 1 - s) - rank_at(j - 1 - s);
        if (get(cone_dims, j) != coker + ker) return false;
    }
    return true;
}

std::optional<std::map<int, Matrix>> null_homotopy(const ChainMap& f, std::size_t max_unknowns) {
    const ChainComplex& x = *f.source;
    const ChainComplex& y = *f.target;
    const int s = f.shift;
    const Field fld = x.field();
    const Elem sign = fld.sign(s);

    // Equation blocks: one per source degree i, shape Y_{i+s} x X_i.
    std::vector<int> eq_deg;
    std::map<int, std::size_t> eq_off;
    std::size_t rows = 0;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        eq_deg.push_back(i);
        eq_off[i] = rows;
        rows += y.dim(i + s) * x.dim(i);
    }
    Matrix rhs(fld, rows, 1);
    for (int i : eq_deg) {
        Matrix fi = f.component(i);
        const std::size_t nc = x.dim(i);
        for (std::size_t r = 0; r < fi.rows(); ++r)
            for (std::size_t c = 0; c < nc; ++c) rhs(eq_off[i] + r * nc + c, 0) = fi(r, c);
    }

    struct Unknown {
        int degree;
        Matrix h;
    };
    std::vector<Unknown> unknowns;
    std::size_t budget_used = 0;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        if (y.dim(i + s + 1) == 0 || x.dim(i) == 0) continue;
        budget_used += y.dim(i + s + 1) * x.dim(i);
        if (budget_used > max_unknowns)
            throw BudgetExceeded("homotopy search needs more than " + std::to_string(max_unknowns) + " unknowns");
        for (auto& h : hom_basis(x.object(i), y.object(i + s + 1), max_unknowns)) unknowns.push_back({i, std::move(h)});
    }

    if (unknowns.empty()) {
        if (!rhs.is_zero()) return std::nullopt;
        return std::map<int, Matrix>{};
    }

    Matrix sys(fld, rows, unknowns.size());
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const int i = unknowns[k].degree;
        const Matrix& h = unknowns[k].h;
        // d^Y h_i lands in equation i.
        if (eq_off.count(i)) {
            Matrix t = y.differential(i + s + 1) * h;
            const std::size_t nc = x.dim(i);
            for (std::size_t r = 0; r < t.rows(); ++r)
                for (std::size_t c = 0; c < nc; ++c) sys(eq_off[i] + r * nc + c, k) = t(r, c);
        }
        // (-1)^s h_i d^X_{i+1} lands in equation i + 1.
        if (eq_off.count(i + 1)) {
            Matrix t = (h * x.differential(i + 1)).scaled(sign);
            const std::size_t nc = x.dim(i + 1);
            for (std::size_t r = 0; r < t.rows(); ++r)
                for (std::size_t c = 0; c < nc; ++c) {
                    Elem& e = sys(eq_off[i + 1] + r * nc + c, k);
                    e = fld.add(e, t(r, c));
                }
        }
    }
    auto coeffs = solve(sys, rhs);
    if (!coeffs) return std::nullopt;
    std::map<int, Matrix> witness;
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const int i = unknowns[k].degree;
        auto it = witness.find(i);
        if (it == witness.end())
            it = witness.emplace(i, Matrix(fld, y.dim(i + s + 1), x.dim(i))).first;
        it->second = it->second + unknowns[k].h.scaled((*coeffs)(k, 0));
    }
    return witness;
}

bool is_null_homotopic(const ChainMap& f, std::size_t max_unknowns) {
    return null_homotopy(f, max_unknowns).has_value();
}

const TensorComplex::Piece* TensorComplex::find(int s, int t) const {
    auto it = pieces.find(s + t);
    if (it == pieces.end()) return nullptr;
    for (const auto& p : it->second)
        if (p.s == s) return &p;
    return nullptr;
}

TensorComplex tensor_complex(const ComplexPtr& c1, const ComplexPtr& c2, TensorMode mode,
                             const std::optional<Envelope>& env, std::size_t max_dim) {
    if (mode == TensorMode::over_algebra && !env)
        throw UnsupportedOperation("tensor over the algebra needs bimodule (enveloping algebra) data");
    if (mode == TensorMode::diagonal && c1->algebra()->coproduct() == Coproduct::none)
        throw UnsupportedOperation("diagonal tensor of complexes needs coproduct data on " +
                                   c1->algebra()->describe());
    const AlgebraPtr result_algebra = mode == TensorMode::diagonal ? c1->algebra() : c2->algebra();
    const Field fld = c1->field();

    TensorComplex tc;
    tc.left = c1;
    tc.right = c2;
    tc.mode = mode;
    tc.envelope = env;

    const int lo = c1->lo() + c2->lo(), hi = c1->hi() + c2->hi();
    for (int n = lo; n <= hi; ++n) {
        std::size_t raw = 0;
        for (int s = c1->lo(); s <= c1->hi(); ++s)
            if (c2->in_support(n - s)) raw += c1->dim(s) * c2->dim(n - s);
        if (mode == TensorMode::diagonal && raw > max_dim)
            throw BudgetExceeded("tensor complex object in degree " + std::to_string(n) + " has dimension " +
                                 std::to_string(raw) + " > budget " + std::to_string(max_dim));
    }

    std::vector<Module> objs;
    for (int n = lo; n <= hi; ++n) {
        std::vector<Module> parts;
        std::vector<TensorComplex::Piece> ps;
        std::size_t off = 0;
        for (int s = c1->lo(); s <= c1->hi(); ++s) {
            const int t = n - s;
            if (!c2->in_support(t)) continue;
            TensorComplex::Piece piece;
            piece.s = s;
            piece.t = t;
            piece.offset = off;
            if (mode == TensorMode::diagonal) {
                parts.push_back(tensor_diagonal(c1->object(s), c2->object(t)));
            } else {
                if (c1->dim(s) * c2->dim(t) > max_dim * 8)
                    throw BudgetExceeded("tensor over the algebra in degree " + std::to_string(n) +
                                         " needs a raw space of dimension " +
                                         std::to_string(c1->dim(s) * c2->dim(t)));
                Quotient q = tensor_over(*env, c1->object(s), c2->object(t));
                parts.push_back(q.module);
                piece.over = std::move(q);
            }
            piece.dim = parts.back().dim();
            off += piece.dim;
            ps.push_back(std::move(piece));
        }
        if (off > max_dim)
            throw BudgetExceeded("tensor complex object in degree " + std::to_string(n) + " has dimension " +
                                 std::to_string(off) + " > budget " + std::to_string(max_dim));
        objs.push_back(direct_sum_all(result_algebra, parts));
        tc.pieces[n] = std::move(ps);
    }

    auto induced = [&](const TensorComplex::Piece& from, const TensorComplex::Piece& to, const Matrix& raw) {
        if (mode == TensorMode::diagonal) return raw;
        return to.over->projection * raw * from.over->section;
    };

    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        Matrix d(fld, n - 1 >= lo ? objs[static_cast<std::size_t>(n - 1 - lo)].dim() : 0,
                 objs[static_cast<std::size_t>(n - lo)].dim());
        if (n > lo) {
            for (const auto& p : tc.pieces[n]) {
                if (const auto* q = tc.find(p.s - 1, p.t)) {
                    Matrix raw = kronecker(c1->differential(p.s), Matrix::identity(fld, c2->dim(p.t)));
                    d.set_block(q->offset, p.offset, induced(p, *q, raw));
                }
                if (const auto* q = tc.find(p.s, p.t - 1)) {
                    Matrix raw = kronecker(Matrix::identity(fld, c1->dim(p.s)), c2->differential(p.t));
                    d.add_block(q->offset, p.offset, induced(p, *q, raw), fld.sign(p.s));
                }
            }
        }
        diffs.push_back(std::move(d));
    }
    tc.complex = std::make_shared<const ChainComplex>(
        ChainComplex::make(result_algebra, lo, std::move(objs), std::move(diffs), false));
    return tc;
}

ChainMap tensor_maps(const ChainMap& f, const ChainMap& g, const TensorComplex& src, const TensorComplex& dst,
                     bool koszul_sign) {
    const Field fld = src.complex->field();
    const int a = f.shift, b = g.shift;
    ChainMap out{src.complex, dst.complex, a + b, {}};
    for (const auto& [n, ps] : src.pieces) {
        Matrix comp(fld, dst.complex->dim(n + a + b), src.complex->dim(n));
        bool any = false;
        for (const auto& p : ps) {
            const auto* q = dst.find(p.s + a, p.t + b);
            if (!q || q->dim == 0 || p.dim == 0) continue;
            Matrix fs = f.component(p.s), gt = g.component(p.t);
            if (fs.is_zero() || gt.is_zero()) continue;
            Matrix raw = kronecker(fs, gt);
            if (src.mode == TensorMode::over_algebra) raw = q->over->projection * raw * p.over->section;
            Elem sign = koszul_sign ? fld.sign(static_cast<long long>(b) * p.s) : Elem{1};
            comp.add_block(q->offset, p.offset, raw, sign);
            any = true;
        }
        if (any && !comp.is_zero()) out.components.emplace(n, std::move(comp));
    }
    return out;
}

}  // namespace homcx
