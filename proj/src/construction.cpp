#include "homcx/construction.hpp"

#include <string>

namespace homcx {

namespace {

/// Columns of the free generators of a free module (copy-major layout).
Matrix generator_columns(const Module& free, const Matrix& m) {
    const std::size_t a = free.algebra()->dim();
    const std::size_t r = free.dim() / a;
    Matrix out(m.field(), m.rows(), r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, j * a);
    return out;
}

Matrix checked_solve(const Matrix& a, const Matrix& b, const char* what) {
    auto x = solve(a, b);
    if (!x) throw std::logic_error(std::string("inconsistent system while ") + what);
    return *x;
}

CohomologyClass from_cocycle(const ResolutionPtr& res, std::size_t n, Module target, Matrix cocycle) {
    const Matrix& cover = res->covers.at(n);
    Matrix induced = checked_solve(cover.transpose(), cocycle.transpose(), "factoring a cocycle").transpose();
    return CohomologyClass{n, res, std::move(target), std::move(cocycle), std::move(induced)};
}

void require_length(const ResolutionPtr& res, std::size_t n) {
    if (!res) throw ContractError("missing resolution");
    if (n > res->length())
        throw ContractError("degree " + std::to_string(n) + " exceeds the computed resolution length " +
                            std::to_string(res->length()));
}

Module unit_of(const ComplexPtr& c) { return trivial_module(c->algebra()); }

}  // namespace

void check_budget(const std::string& what, std::size_t dim, std::size_t max_dim) {
    if (dim > max_dim)
        throw BudgetExceeded(what + " has dimension " + std::to_string(dim) + ", above the budget " +
                             std::to_string(max_dim));
}

std::vector<CohomologyClass> ext_classes(const ResolutionPtr& res, std::size_t n) {
    require_length(res, n);
    std::vector<CohomologyClass> out;
    const std::size_t b = res->betti[n];
    for (std::size_t j = 0; j < b; ++j) {
        std::vector<Elem> coeffs(b, 0);
        coeffs[j] = 1;
        out.push_back(ext_class(res, n, coeffs));
    }
    return out;
}

CohomologyClass ext_class(const ResolutionPtr& res, std::size_t n, const std::vector<Elem>& coefficients) {
    require_length(res, n);
    const Module& target = res->module;
    if (target.dim() != 1) throw ContractError("ext_class expects a resolution of a one-dimensional module");
    if (coefficients.size() != res->betti[n]) throw ContractError("coefficient count differs from the Betti number");
    Matrix images(target.field(), 1, coefficients.size(), coefficients);
    return from_cocycle(res, n, target, free_map(target, images));
}

CohomologyClass yoneda_power(const CohomologyClass& z, std::size_t s) {
    if (s == 0) throw ContractError("power must be at least 1");
    if (s == 1) return z;
    const ResolutionPtr& res = z.resolution;
    const std::size_t n = z.degree;
    require_length(res, s * n);
    if (z.target.dim() != res->module.dim()) throw ContractError("class target is not the resolved module");

    // Lift z to f_i : P_{n+i} -> P_i with aug f_0 = z and d_i f_i = f_{i-1} d_{n+i}.
    std::vector<Matrix> lift;
    const std::size_t top = (s - 1) * n;
    for (std::size_t i = 0; i <= top; ++i) {
        const Module& src = res->projectives[n + i];
        Matrix rhs = (i == 0) ? z.cocycle : lift[i - 1] * res->differential(n + i);
        const Matrix& lhs = (i == 0) ? res->augmentation() : res->differential(i);
        Matrix gens = checked_solve(lhs, generator_columns(src, rhs), "lifting a cocycle");
        lift.push_back(free_map(res->projectives[i], gens));
    }
    Matrix power = z.cocycle;
    for (std::size_t k = 1; k < s; ++k) power = power * lift[k * n];
    if (power.is_zero()) throw std::logic_error("Yoneda power vanished");
    return from_cocycle(res, s * n, z.target, power);
}

std::vector<CohomologyClass> hochschild_classes(const ResolutionPtr& res, const Module& regular, std::size_t n) {
    require_length(res, n);
    if (n == 0) throw ContractError("Hochschild classes need positive degree");
    const Submodule& omega = res->syzygies[n];
    const Module& q = res->projectives[n - 1];
    const Field f = regular.field();

    // Coboundaries: restrictions of maps out of Q_{n-1}.
    const std::size_t a = q.algebra()->dim();
    const std::size_t r = q.dim() / a;
    Matrix coboundary_span(f, regular.dim() * omega.module.dim(), 0);
    auto vec = [&](const Matrix& m) {
        Matrix v(f, m.rows() * m.cols(), 1);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
        return v;
    };
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t e = 0; e < regular.dim(); ++e) {
            Matrix images(f, regular.dim(), r);
            images(e, j) = 1;
            Matrix phi = free_map(regular, images) * omega.inclusion.basis;
            coboundary_span = hconcat(coboundary_span, vec(phi));
        }
    std::size_t current = rank(coboundary_span);

    std::vector<CohomologyClass> out;
    for (const Matrix& h : hom_basis(omega.module, regular)) {
        Matrix grown = hconcat(coboundary_span, vec(h));
        std::size_t rk = rank(grown);
        if (rk == current) continue;
        coboundary_span = std::move(grown);
        current = rk;
        Matrix cocycle = h * res->covers[n];
        out.push_back(CohomologyClass{n, res, regular, std::move(cocycle), h});
    }
    return out;
}

Pushout build_K(const CohomologyClass& z) {
    if (z.degree < 2) throw ContractError("build_K needs degree at least 2");
    if (z.induced.is_zero()) throw ContractError("build_K rejects the zero class");
    const Resolution& res = *z.resolution;
    const std::size_t n = z.degree;
    const Module& cover = res.projectives[n - 1];
    const Matrix& iota = res.syzygies[n].inclusion.basis;
    const Field f = cover.field();
    const std::size_t t = z.target.dim();

    Module v = direct_sum(z.target, cover);
    Matrix relations = vconcat(z.induced, -iota);
    Quotient q = quotient(v, relations);

    Matrix into_target(f, v.dim(), t);
    into_target.set_block(0, 0, Matrix::identity(f, t));
    Matrix into_cover(f, v.dim(), cover.dim());
    into_cover.set_block(t, 0, Matrix::identity(f, cover.dim()));

    Matrix rho_raw(f, res.projectives[n - 2].dim(), v.dim());
    rho_raw.set_block(0, t, res.differential(n - 1));

    Pushout p{q.module, q.projection * into_target, rho_raw * q.section, q.projection * into_cover};
    if (rank(p.mu) != t) throw std::logic_error("mu is not injective");
    return p;
}

ClassComplex build_C(const CohomologyClass& z) {
    Pushout k = build_K(z);
    const Resolution& res = *z.resolution;
    const std::size_t n = z.degree;
    const AlgebraPtr& alg = k.object.algebra();

    std::vector<Module> objects;
    std::vector<Matrix> diffs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        objects.push_back(res.projectives[i]);
        diffs.push_back(i == 0 ? Matrix(alg->field(), 0, 0) : res.differential(i));
    }
    objects.push_back(k.object);
    diffs.push_back(k.rho);
    auto c = std::make_shared<const ChainComplex>(ChainComplex::make(alg, 0, objects, diffs));

    ChainMap nu{c, c, static_cast<int>(n) - 1, {}};
    nu.components.emplace(0, k.mu * res.augmentation());
    return ClassComplex{z, std::move(k), c, std::move(nu)};
}

TensorFamily build_tensor_family(const std::vector<ClassComplex>& factors, TensorMode mode,
                                 const std::optional<Envelope>& env, const std::optional<Module>& right_module,
                                 std::size_t max_dim, SignConvention signs) {
    if (factors.empty()) throw ContractError("tensor family needs at least one factor");
    const std::size_t n = factors.front().cls.degree;
    for (const auto& fc : factors)
        if (fc.cls.degree != n) throw ContractError("tensor family factors have mixed degrees");
    const bool koszul = signs == SignConvention::koszul;

    TensorFamily fam;
    fam.factors = factors;
    fam.mode = mode;
    fam.odd_degree = static_cast<int>(n) - 1;
    const std::size_t c = factors.size();

    if (mode == TensorMode::diagonal) {
        fam.total = factors[0].complex;
        // maps[i] is the current extension of theta_i to fam.total.
        std::vector<ChainMap> maps;
        for (std::size_t i = 0; i < c; ++i)
            maps.push_back(i == 0 ? factors[0].nu : identity_map(factors[0].complex));
        for (std::size_t k = 1; k < c; ++k) {
            TensorComplex st = tensor_complex(fam.total, factors[k].complex, mode, std::nullopt, max_dim);
            for (std::size_t i = 0; i < c; ++i) {
                ChainMap g = (i == k) ? factors[k].nu : identity_map(factors[k].complex);
                maps[i] = tensor_maps(maps[i], g, st, st, koszul);
            }
            fam.total = st.complex;
            fam.stages.push_back(std::move(st));
        }
        fam.thetas = std::move(maps);
        return fam;
    }

    if (!env || !right_module) throw ContractError("tensoring over the algebra needs the envelope and a module");
    fam.total = std::make_shared<const ChainComplex>(ChainComplex::stalk(*right_module, 0));
    std::vector<ChainMap> maps(c, identity_map(fam.total));
    for (std::size_t k = 0; k < c; ++k) {
        TensorComplex st = tensor_complex(factors[k].complex, fam.total, mode, env, max_dim);
        for (std::size_t i = 0; i < c; ++i) {
            ChainMap f = (i == k) ? factors[k].nu : identity_map(factors[k].complex);
            maps[i] = tensor_maps(f, maps[i], st, st, koszul);
        }
        fam.total = st.complex;
        fam.stages.push_back(std::move(st));
    }
    fam.thetas = std::move(maps);
    return fam;
}

std::vector<std::map<int, Matrix>> homology_actions(const TensorFamily& family) {
    std::vector<std::map<int, Matrix>> out;
    for (const auto& t : family.thetas) out.push_back(induced_on_homology(t));
    return out;
}

namespace {

/// The degree-`deg` block of a homology action, or a zero block.
Matrix action_at(const std::map<int, Matrix>& act, int deg, const std::map<int, std::size_t>& dims, int shift,
                 const Field& f) {
    auto it = act.find(deg);
    if (it != act.end()) return it->second;
    auto dim_of = [&](int i) {
        auto d = dims.find(i);
        return d == dims.end() ? std::size_t{0} : d->second;
    };
    return Matrix(f, dim_of(deg + shift), dim_of(deg));
}

}  // namespace

bool thetas_anticommute_on_homology(const TensorFamily& family) {
    for (const auto& t : family.thetas)
        if (!is_chain_map(t)) return false;
    const auto acts = homology_actions(family);
    const auto dims = homology_dims(*family.total);
    const Field f = family.total->field();
    const int m = family.odd_degree;
    for (std::size_t i = 0; i < acts.size(); ++i)
        for (std::size_t j = i; j < acts.size(); ++j)
            for (const auto& [deg, dim] : dims) {
                Matrix ij = action_at(acts[i], deg + m, dims, m, f) * action_at(acts[j], deg, dims, m, f);
                Matrix ji = action_at(acts[j], deg + m, dims, m, f) * action_at(acts[i], deg, dims, m, f);
                if (!(ij + ji).is_zero()) return false;
            }
    return true;
}

bool exterior_free_rank_one(const TensorFamily& family) {
    const auto acts = homology_actions(family);
    const auto dims = homology_dims(*family.total);
    const Field f = family.total->field();
    const int m = family.odd_degree;
    const std::size_t c = acts.size();
    if (c > 16) throw ContractError("too many thetas for the subset enumeration");
    auto h0 = dims.find(0);
    if (h0 == dims.end() || h0->second == 0) return false;
    std::map<int, Matrix> images;  // columns in H_{t m}
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        Matrix v = Matrix::identity(f, h0->second);
        int deg = 0;
        // Apply the highest index first so the product reads theta_{i1} ... theta_{it}.
        for (int i = static_cast<int>(c) - 1; i >= 0; --i) {
            if (!(mask & (1u << i))) continue;
            v = action_at(acts[i], deg, dims, m, f) * v;
            deg += m;
        }
        auto it = images.find(deg);
        if (it == images.end()) images.emplace(deg, v);
        else it->second = hconcat(it->second, v);
    }
    std::size_t covered = 0;
    for (const auto& [deg, dim] : dims) {
        if (dim == 0) continue;
        auto it = images.find(deg);
        if (it == images.end() || it->second.cols() != dim || rank(it->second) != dim) return false;
        covered += dim;
    }
    std::size_t produced = 0;
    for (const auto& [deg, v] : images) produced += v.cols();
    return covered == produced;
}

ChainMap pair_element(const std::vector<ChainMap>& thetas) {
    if (thetas.size() < 2) throw ContractError("pair_element needs at least two maps");
    const std::size_t pairs = std::min<std::size_t>(thetas.size() / 2, 4);
    ChainMap w = compose(thetas[0], thetas[1]);
    for (std::size_t k = 1; k < pairs; ++k) w = add(w, compose(thetas[2 * k], thetas[2 * k + 1]));
    return w;
}

ChainMap lefschetz_w(const std::vector<ChainMap>& thetas) {
    if (thetas.size() != 8)
        throw ContractError("the Lefschetz element needs exactly 8 maps, got " + std::to_string(thetas.size()));
    return pair_element(thetas);
}

bool verify_lemma_projective(const std::vector<Pushout>& ks, std::size_t max_dim) {
    if (ks.empty()) throw ContractError("no factors");
    std::size_t dim = 1;
    for (const auto& k : ks) dim *= k.object.dim();
    check_budget("tensor of the K objects", dim, max_dim);
    Module t = ks[0].object;
    for (std::size_t i = 1; i < ks.size(); ++i) t = tensor_diagonal(t, ks[i].object);
    return is_projective(t);
}

bool verify_lemma_projective(const std::vector<ClassComplex>& factors, std::size_t max_dim) {
    std::vector<Pushout> ks;
    for (const auto& f : factors) ks.push_back(f.pushout);
    return verify_lemma_projective(ks, max_dim);
}

std::optional<ParameterSystem> select_parameters(const ResolutionPtr& res, std::size_t count, std::size_t n,
                                                 std::size_t max_dim) {
    if (count == 0) throw ContractError("need at least one parameter");
    if (n < 2 || n % 2 != 0) throw ContractError("parameters must have even degree at least 2");
    std::vector<CohomologyClass> classes = ext_classes(res, n);
    if (classes.empty()) return std::nullopt;
    std::vector<Pushout> ks;
    for (const auto& z : classes) ks.push_back(build_K(z));

    std::vector<std::size_t> idx(count, 0);
    while (true) {
        std::vector<Pushout> pick;
        for (auto i : idx) pick.push_back(ks[i]);
        if (verify_lemma_projective(pick, max_dim)) {
            ParameterSystem ps;
            for (auto i : idx) ps.classes.push_back(classes[i]);
            ps.ext_indices = idx;
            ps.projective_verified = true;
            return ps;
        }
        std::size_t pos = count;
        while (pos > 0 && ++idx[pos - 1] == classes.size()) idx[--pos] = 0;
        if (pos == 0) return std::nullopt;
    }
}

std::string to_string(AdditiveFunction f) { return f == AdditiveFunction::dim ? "dim" : "length"; }

AdditiveFunction additive_function_from_string(const std::string& s) {
    if (s == "dim") return AdditiveFunction::dim;
    if (s == "length") return AdditiveFunction::length;
    throw ContractError("unknown additive function '" + s + "' (expected dim or length)");
}

std::size_t evaluate(AdditiveFunction f, const Module& m) {
    return f == AdditiveFunction::dim ? dimension(m) : composition_length(m);
}

ConstructionReport chain_level_D(const TensorFamily& family, AdditiveFunction f, std::size_t power) {
    if (family.thetas.size() < 2) throw ContractError("the cone needs rank at least 2");
    ChainMap w = pair_element(family.thetas);
    ChainComplex d = mapping_cone(w);

    ConstructionReport r;
    r.rank = family.thetas.size();
    r.degree = family.factors.front().cls.degree;
    r.power = power;
    r.function = f;
    r.bound = 1LL << r.rank;
    r.lo = d.lo();
    r.hi = d.hi();
    const long long unit = static_cast<long long>(evaluate(f, unit_of(family.total)));
    for (int i = d.lo(); i <= d.hi(); ++i) {
        r.projective[i] = is_projective(d.object(i));
        Homology h = homology(d, i);
        long long v = static_cast<long long>(evaluate(f, h.module));
        if (v % unit != 0) throw std::logic_error("homology value is not a multiple of the unit");
        if (v) r.homology[i] = v / unit;
        r.total += v / unit;
    }
    return r;
}

long long family_length(long long d, long long n, long long s) {
    if (d < 1 || n < 2 || s < 1) throw ContractError("family_length needs d >= 1, n >= 2, s >= 1");
    return (d + 2) * (s * n - 1) + 2;
}

BimoduleReport bimodule_pipeline(const AlgebraPtr& a, std::size_t rank, std::size_t n, const Module& s,
                                 std::size_t max_dim) {
    if (rank < 1 || rank > 2) throw ContractError("the bimodule pipeline runs at rank 1 or 2");
    if (n < 2 || n % 2 != 0) throw ContractError("Hochschild parameters must have even degree at least 2");
    Envelope env = enveloping(a);
    check_budget("enveloping algebra", env.env->dim(), max_dim);
    Module reg = regular_bimodule(env);
    auto res = std::make_shared<const Resolution>(minimal_resolution(reg, n));
    for (const auto& p : res->projectives) check_budget("bimodule resolution term", p.dim(), max_dim);
    std::vector<CohomologyClass> classes = hochschild_classes(res, reg, n);
    if (classes.empty()) throw ContractError("no Hochschild classes in degree " + std::to_string(n));

    std::vector<Pushout> ks;
    for (const auto& z : classes) ks.push_back(build_K(z));

    BimoduleReport r;
    r.rank = rank;
    r.degree = n;
    r.complexity = complexity_estimate(s, 5);

    auto top_of = [&](const std::vector<std::size_t>& idx) {
        Module x = s;
        for (auto i : idx) {
            check_budget("tensor over the algebra", ks[i].object.dim() * x.dim(), max_dim);
            x = tensor_over(env, ks[i].object, x).module;
        }
        return is_projective(x);
    };
    std::vector<std::size_t> idx(rank, 0);
    bool found = false;
    while (true) {
        if (top_of(idx)) {
            found = true;
            break;
        }
        std::size_t pos = rank;
        while (pos > 0 && ++idx[pos - 1] == classes.size()) idx[--pos] = 0;
        if (pos == 0) break;
    }
    r.top_projective = found;
    if (!found) idx.assign(rank, 0);

    std::vector<ClassComplex> factors;
    r.homology_is_regular = true;
    r.one_sided_projective = true;
    for (auto i : idx) {
        ClassComplex cc = build_C(classes[i]);
        r.factor_homology.push_back(homology_dims(*cc.complex));
        for (int deg : {0, static_cast<int>(n) - 1}) {
            Homology h = homology(*cc.complex, deg);
            if (!find_isomorphism(h.module, reg)) r.homology_is_regular = false;
        }
        for (int deg = cc.complex->lo(); deg <= cc.complex->hi(); ++deg) {
            const Module& term = cc.complex->object(deg);
            if (!is_projective(restrict_left(env, term)) || !is_projective(restrict_right(env, term)))
                r.one_sided_projective = false;
        }
        factors.push_back(std::move(cc));
    }

    TensorFamily fam = build_tensor_family(factors, TensorMode::over_algebra, env, s, max_dim);
    r.module_complex_homology = homology_dims(*fam.total);
    for (int deg = fam.total->lo(); deg <= fam.total->hi(); ++deg)
        r.module_complex_projective[deg] = is_projective(fam.total->object(deg));
    if (rank >= 2) r.cone = chain_level_D(fam, AdditiveFunction::dim, 1);
    return r;
}

}  // namespace homcx
