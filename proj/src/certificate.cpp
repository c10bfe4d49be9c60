#include "homcx/certificate.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <set>
#include <sstream>
#include <type_traits>

#include "homcx/lefschetz.hpp"

namespace homcx {

using nlohmann::json;

std::string to_string(RunMode m) {
    switch (m) {
        case RunMode::chain: return "chain";
        case RunMode::symbolic: return "symbolic";
        case RunMode::crosscheck: return "crosscheck";
    }
    return "?";
}

RunMode run_mode_from_string(const std::string& s) {
    if (s == "chain") return RunMode::chain;
    if (s == "symbolic") return RunMode::symbolic;
    if (s == "crosscheck") return RunMode::crosscheck;
    throw ContractError("unknown mode '" + s + "' (expected chain, symbolic or crosscheck)");
}

std::string to_string(PipelinePath p) { return p == PipelinePath::tensor ? "tensor" : "bimodule"; }

PipelinePath pipeline_path_from_string(const std::string& s) {
    if (s == "tensor") return PipelinePath::tensor;
    if (s == "bimodule") return PipelinePath::bimodule;
    throw ContractError("unknown path '" + s + "' (expected tensor or bimodule)");
}

namespace {

template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& key) {
    std::vector<std::string> parts;
    boost::split(parts, text, boost::is_any_of(", "), boost::token_compress_on);
    std::vector<T> out;
    for (auto& p : parts) {
        boost::trim(p);
        if (p.empty()) continue;
        try {
            if (p[0] == '-' && std::is_unsigned_v<T>) throw boost::bad_lexical_cast();
            out.push_back(boost::lexical_cast<T>(p));
        } catch (const boost::bad_lexical_cast&) {
            throw ContractError("config key " + key + ": '" + p + "' is not an integer");
        }
    }
    return out;
}

// ptree's typed getters return none on junk; we want junk to be an error.
template <class T>
std::optional<T> get_number(const boost::property_tree::ptree& tree, const std::string& key) {
    auto raw = tree.get_optional<std::string>(key);
    if (!raw) return std::nullopt;
    std::string text = boost::trim_copy(*raw);
    try {
        if (!text.empty() && text[0] == '-' && std::is_unsigned_v<T>) throw boost::bad_lexical_cast();
        return boost::lexical_cast<T>(text);
    } catch (const boost::bad_lexical_cast&) {
        throw ContractError("config key " + key + ": '" + text + "' is not a valid number");
    }
}

}  // namespace

RunConfig load_config(const std::string& path) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(path, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ContractError(std::string("cannot read config: ") + e.what());
    }
    RunConfig c;
    try {
        if (auto v = tree.get_optional<std::string>("mode")) c.mode = run_mode_from_string(*v);
        if (auto v = tree.get_optional<std::string>("run.mode")) c.mode = run_mode_from_string(*v);
        if (auto v = get_number<std::uint32_t>(tree, "algebra.characteristic")) c.characteristic = *v;
        if (auto v = tree.get_optional<std::string>("algebra.exponents"))
            c.exponents = parse_list<unsigned>(*v, "algebra.exponents");
        if (auto v = tree.get_optional<std::string>("algebra.commutators"))
            c.commutators = parse_list<long long>(*v, "algebra.commutators");
        if (auto v = tree.get_optional<std::string>("algebra.coproduct")) c.coproduct = coproduct_from_string(*v);
        if (auto v = tree.get_optional<std::string>("construction.path")) c.path = pipeline_path_from_string(*v);
        if (auto v = get_number<int>(tree, "construction.rank")) c.rank = *v;
        if (auto v = get_number<int>(tree, "construction.degree")) c.degree = *v;
        if (auto v = get_number<int>(tree, "construction.power")) c.power = *v;
        if (auto v = tree.get_optional<std::string>("construction.function"))
            c.function = additive_function_from_string(*v);
        if (auto v = get_number<std::size_t>(tree, "budget.max_dim")) c.budget_dim = *v;
        if (auto v = get_number<std::size_t>(tree, "budget.max_entries")) c.budget_entries = *v;
        if (auto v = get_number<std::uint64_t>(tree, "run.seed")) c.seed = *v;
    } catch (const pt::ptree_bad_data& e) {
        throw ContractError(std::string("malformed config value: ") + e.what());
    }
    return c;
}

void validate(const RunConfig& c) {
    if (!is_prime(c.characteristic) || c.characteristic >= 65536)
        throw ContractError("characteristic must be a prime below 65536");
    if (c.power < 1) throw ContractError("power must be at least 1");
    if (c.degree < 2 || c.degree % 2 != 0) throw ContractError("parameter degree must be even and at least 2");
    if (c.budget_dim == 0 || c.budget_entries == 0) throw ContractError("budgets must be positive");
    const bool symbolic_rank = c.rank >= 8;
    switch (c.mode) {
        case RunMode::symbolic:
            if (c.rank < 8)
                throw ContractError("symbolic mode needs rank d >= 8 (got " + std::to_string(c.rank) + ")");
            if (c.rank > 40) throw ContractError("symbolic mode supports rank up to 40");
            break;
        case RunMode::chain:
        case RunMode::crosscheck:
            if (c.rank < 1) throw ContractError("rank must be at least 1");
            if (c.rank >= 4 && c.rank <= 7)
                throw ContractError("rank " + std::to_string(c.rank) +
                                    " is unsupported: chain level stops at 3 and the Lefschetz bound needs 8");
            if (symbolic_rank && c.mode == RunMode::chain)
                throw ContractError("chain mode is limited to rank <= 3; use symbolic mode for rank >= 8");
            if (c.mode == RunMode::crosscheck && c.rank > 12)
                throw ContractError("crosscheck materializes the exterior model; rank must be at most 12");
            if (!symbolic_rank) {
                if (c.exponents.empty()) throw ContractError("the algebra needs at least one generator");
                if (c.path == PipelinePath::bimodule && c.rank > 2)
                    throw ContractError("the bimodule path runs at rank 1 or 2");
                if (c.path == PipelinePath::bimodule && c.power != 1)
                    throw ContractError("the bimodule path takes power 1; raise the degree instead");
            }
            break;
    }
}

AlgebraPtr build_algebra(const RunConfig& c) {
    Field f(c.characteristic);
    const std::size_t g = c.exponents.size();
    std::vector<std::vector<Elem>> q(g, std::vector<Elem>(g, 1));
    if (!c.commutators.empty()) {
        if (c.commutators.size() != g * (g - 1) / 2)
            throw ContractError("expected " + std::to_string(g * (g - 1) / 2) + " commutators");
        std::size_t k = 0;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i + 1; j < g; ++j) q[i][j] = f.from_int(c.commutators[k++]);
    }
    // The unit module pipelines tensor diagonally; only they need the coproduct.
    return qci_algebra(f, c.exponents, q, c.coproduct);
}

namespace {

json degree_table(const std::map<int, std::size_t>& dims) {
    json a = json::array();
    for (const auto& [d, v] : dims)
        if (v) a.push_back({{"degree", d}, {"dim", v}});
    return a;
}

json degree_table(const std::map<int, long long>& dims) {
    json a = json::array();
    for (const auto& [d, v] : dims)
        if (v) a.push_back({{"degree", d}, {"dim", v}});
    return a;
}

json symbolic_table(const ConeDimensionTable& t) {
    json a = json::array();
    for (const auto& [k, v] : t.entries)
        if (v) a.push_back({{"m_multiple", k.first}, {"offset", k.second}, {"dim", v}});
    return a;
}

json config_echo(const RunConfig& c) {
    return {{"mode", to_string(c.mode)},
            {"characteristic", c.characteristic},
            {"exponents", c.exponents},
            {"commutators", c.commutators},
            {"coproduct", to_string(c.coproduct)},
            {"path", to_string(c.path)},
            {"rank", c.rank},
            {"degree", c.degree},
            {"power", c.power},
            {"function", to_string(c.function)},
            {"budget_dim", c.budget_dim},
            {"budget_entries", c.budget_entries},
            {"seed", c.seed},
            {"corrupt_signs", c.corrupt_signs}};
}

json conventions(const RunConfig& c) {
    return {
        {"monomial_basis", "lexicographic exponent vectors, first generator most significant"},
        {"kronecker_pairing", "(i, k) -> i * dim(second) + k"},
        {"free_module_layout", "copy-major: generator j, monomial e -> j * dim A + e"},
        {"chain_map", "f_i : X_i -> Y_{i+s}, d f = (-1)^s f d"},
        {"tensor_differential", "d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy, left associated"},
        {"tensor_of_maps", c.corrupt_signs ? "(f (x) g)(x (x) y) = f(x) (x) g(y) [corrupted: no sign]"
                                           : "(f (x) g)(x (x) y) = (-1)^{|g||x|} f(x) (x) g(y)"},
        {"cone", "X_{j-1-s} (+) Y_j with d = [[-(-1)^s dX, 0], [-f, dY]]"},
        {"exterior_basis", "subsets as bitmasks in increasing order within each grade"},
        {"parameter_selection", "first tuple, lexicographic in Ext-basis indices, whose K-tensor is projective"},
        {"normalization", "values divided by f(unit)"},
    };
}

void record(json& cert, const std::string& name, bool pass) { cert["verdicts"][name] = pass; }

std::map<int, long long> expected_hypercube(int c, int m) {
    std::map<int, long long> out;
    for (int t = 0; t <= c; ++t) out[t * m] = binomial(c, t);
    return out;
}

std::map<int, long long> normalized(const std::map<int, std::size_t>& dims) {
    std::map<int, long long> out;
    for (const auto& [d, v] : dims)
        if (v) out[d] = static_cast<long long>(v);
    return out;
}

std::map<int, long long> to_int_keys(const std::map<long long, long long>& m) {
    std::map<int, long long> out;
    for (const auto& [k, v] : m)
        if (v) out[static_cast<int>(k)] = v;
    return out;
}

void run_symbolic(const RunConfig& c, json& cert) {
    const Field f(c.characteristic);
    const int d = c.rank;
    LefschetzModel model(f, 8);
    ProfileResult prof = verify_lefschetz_profile(model);
    cert["lefschetz_profile"] = {{"ranks", prof.ranks}, {"ok", prof.ok}};
    if (prof.failing_grade) cert["lefschetz_profile"]["failing_grade"] = *prof.failing_grade;
    record(cert, "lefschetz_profile", prof.ok);

    ConeDimensionTable sub = cone_dimensions(model);
    ConeDimensionTable full = d_table(f, d);
    const int m = c.degree * c.power - 1;
    cert["cone_rank8"] = {{"table", symbolic_table(sub)}, {"total", sub.total}};
    cert["homology"] = degree_table(to_int_keys(full.concrete(m)));
    cert["symbolic_table"] = symbolic_table(full);
    cert["total"] = full.total;
    cert["bound"] = full.bound;
    cert["odd_degree"] = m;
    record(cert, "total_below_bound", full.total < full.bound);
    const long long closed = (1LL << d) - (1LL << (d - 6));
    record(cert, "total_closed_form", full.total == closed);
    record(cert, "total_ratio_63_64", 64 * full.total == 63 * (1LL << d));

    json lengths = json::array();
    std::set<long long> seen;
    for (int s = 1; s <= c.power; ++s) {
        long long len = family_length(d, c.degree, s);
        lengths.push_back({{"power", s}, {"length", len}});
        seen.insert(len);
    }
    cert["family_lengths"] = lengths;
    record(cert, "family_lengths_distinct", seen.size() == static_cast<std::size_t>(c.power));
    // The cone table spans degrees 0 .. (d + 2) m + 1.
    auto conc = full.concrete(m);
    long long span = conc.empty() ? 0 : conc.rbegin()->first - conc.begin()->first + 1;
    record(cert, "length_matches_table", span == family_length(d, c.degree, c.power));
}

void run_crosscheck_symbolic(const RunConfig& c, json& cert) {
    run_symbolic(c, cert);
    const Field f(c.characteristic);
    check_budget("exterior model", std::size_t{1} << c.rank, c.budget_dim);
    LefschetzModel model(f, c.rank);
    ConeDimensionTable direct = cone_dimensions(model);
    ConeDimensionTable split = d_table(f, c.rank);
    cert["direct_total"] = direct.total;
    record(cert, "kunneth_matches_direct", direct.entries == split.entries);
}

void run_tensor_chain(const RunConfig& c, const AlgebraPtr& a, json& cert) {
    const std::size_t n = c.degree, s = c.power, rank = c.rank;
    const std::size_t top = n * s;
    auto res = std::make_shared<const Resolution>(minimal_resolution(trivial_module(a), top));
    for (const auto& p : res->projectives) check_budget("resolution term", p.dim(), c.budget_dim);
    cert["betti"] = res->betti;

    auto ps = select_parameters(res, rank, n, c.budget_dim);
    if (!ps) {
        record(cert, "parameters_found", false);
        return;
    }
    record(cert, "parameters_found", true);
    cert["parameter_indices"] = ps->ext_indices;

    std::vector<ClassComplex> factors;
    for (const auto& z : ps->classes) factors.push_back(build_C(yoneda_power(z, s)));
    record(cert, "lemma_projective", verify_lemma_projective(factors, c.budget_dim));

    const int m = static_cast<int>(top) - 1;
    const std::map<int, long long> two_units{{0, 1}, {m, 1}};
    bool homology_ok = true, nu_ok = true, nu_sq_ok = true, nu_iso = true;
    json fjs = json::array();
    for (const auto& fc : factors) {
        auto dims = homology_dims(*fc.complex);
        homology_ok = homology_ok && normalized(dims) == two_units;
        nu_ok = nu_ok && is_chain_map(fc.nu) && !is_null_homotopic(fc.nu, c.budget_entries);
        nu_sq_ok = nu_sq_ok && is_null_homotopic(compose(fc.nu, fc.nu), c.budget_entries);
        auto ind = induced_on_homology(fc.nu);
        nu_iso = nu_iso && ind.count(0) && ind.at(0).rows() == ind.at(0).cols() && homcx::rank(ind.at(0)) == ind.at(0).rows();
        // a single K need not be projective once rank > 1; only the tensor is
        fjs.push_back({{"dim_K", fc.pushout.object.dim()},
                       {"K_projective", is_projective(fc.pushout.object)},
                       {"homology", degree_table(dims)}});
    }
    cert["factors"] = fjs;
    record(cert, "factor_homology_two_units", homology_ok);
    record(cert, "nu_not_null_homotopic", nu_ok);
    record(cert, "nu_square_null_homotopic", nu_sq_ok);
    record(cert, "nu_bar_iso", nu_iso);
    if (rank == 1) return;

    const SignConvention signs = c.corrupt_signs ? SignConvention::naive : SignConvention::koszul;
    TensorFamily fam =
        build_tensor_family(factors, TensorMode::diagonal, std::nullopt, std::nullopt, c.budget_dim, signs);
    auto tdims = homology_dims(*fam.total);
    cert["tensor_homology"] = degree_table(tdims);
    record(cert, "hypercube_homology", normalized(tdims) == expected_hypercube(static_cast<int>(rank), m));
    record(cert, "thetas_anticommute", thetas_anticommute_on_homology(fam));
    record(cert, "exterior_free_rank_one", exterior_free_rank_one(fam));

    ConstructionReport d = chain_level_D(fam, c.function, s);
    cert["homology"] = degree_table(d.homology);
    cert["total"] = d.total;
    cert["bound"] = d.bound;
    json proj = json::array();
    bool all_proj = true;
    for (const auto& [deg, p] : d.projective) {
        proj.push_back({{"degree", deg}, {"projective", p}});
        all_proj = all_proj && p;
    }
    cert["projective"] = proj;
    cert["length"] = d.length();
    record(cert, "cone_terms_projective", all_proj);
    record(cert, "length_formula", static_cast<long long>(d.length()) == family_length(rank, n, s));

    LefschetzModel model(a->field(), static_cast<int>(rank), m);
    ConeDimensionTable oracle = cone_oracle(model, ExteriorElement::pair_sum(static_cast<int>(rank / 2)));
    record(cert, "oracle_equivalence", to_int_keys(oracle.concrete(m)) == d.homology);
}

void run_bimodule_chain(const RunConfig& c, const AlgebraPtr& a, json& cert) {
    BimoduleReport r = bimodule_pipeline(a, c.rank, c.degree, trivial_module(a), c.budget_dim);
    const int m = c.degree - 1;
    json fh = json::array();
    for (const auto& h : r.factor_homology) fh.push_back(degree_table(h));
    cert["factor_homology"] = fh;
    cert["complexity_estimate"] = r.complexity;
    cert["tensor_homology"] = degree_table(r.module_complex_homology);
    record(cert, "homology_is_regular_bimodule", r.homology_is_regular);
    record(cert, "terms_one_sided_projective", r.one_sided_projective);
    record(cert, "top_term_projective", r.top_projective);
    record(cert, "hypercube_homology",
           normalized(r.module_complex_homology) == expected_hypercube(c.rank, m));
    bool all_proj = true;
    for (const auto& [deg, p] : r.module_complex_projective) all_proj = all_proj && p;
    record(cert, "module_complex_projective", all_proj);
    if (r.cone) {
        cert["homology"] = degree_table(r.cone->homology);
        cert["total"] = r.cone->total;
        cert["bound"] = r.cone->bound;
        bool cone_proj = true;
        for (const auto& [deg, p] : r.cone->projective) cone_proj = cone_proj && p;
        record(cert, "cone_terms_projective", cone_proj);
        LefschetzModel model(a->field(), c.rank, m);
        ConeDimensionTable oracle = cone_oracle(model, ExteriorElement::pair_sum(c.rank / 2));
        record(cert, "oracle_equivalence", to_int_keys(oracle.concrete(m)) == r.cone->homology);
    }
}

}  // namespace

Certificate run(const RunConfig& cfg) {
    validate(cfg);
    json cert;
    cert["config"] = config_echo(cfg);
    cert["conventions"] = conventions(cfg);
    cert["verdicts"] = json::object();

    if (cfg.rank >= 8) {
        if (cfg.mode == RunMode::crosscheck) run_crosscheck_symbolic(cfg, cert);
        else run_symbolic(cfg, cert);
    } else {
        AlgebraPtr a = build_algebra(cfg);
        cert["algebra"] = a->describe();
        check_budget("algebra", a->dim(), cfg.budget_dim);
        if (cfg.path == PipelinePath::tensor) run_tensor_chain(cfg, a, cert);
        else run_bimodule_chain(cfg, a, cert);
    }
    cert["status"] = all_verdicts_pass(cert) ? "pass" : "fail";
    return cert;
}

bool all_verdicts_pass(const Certificate& cert) {
    if (!cert.contains("verdicts")) return false;
    for (const auto& [k, v] : cert["verdicts"].items())
        if (!v.get<bool>()) return false;
    return true;
}

std::string render_summary(const Certificate& cert) {
    std::ostringstream out;
    if (cert.contains("config")) {
        const auto& c = cert["config"];
        out << "mode " << c.value("mode", "?") << ", rank " << c.value("rank", 0) << ", degree "
            << c.value("degree", 0) << ", power " << c.value("power", 0) << ", char "
            << c.value("characteristic", 0) << "\n";
    }
    if (cert.contains("algebra")) out << "algebra: " << cert["algebra"].get<std::string>() << "\n";
    if (cert.contains("homology")) {
        out << "homology:";
        for (const auto& e : cert["homology"]) out << " H" << e["degree"] << "=" << e["dim"];
        out << "\n";
    }
    if (cert.contains("total"))
        out << "total " << cert["total"] << " against bound " << cert.value("bound", json(0)) << "\n";
    if (cert.contains("family_lengths")) {
        out << "family lengths:";
        for (const auto& e : cert["family_lengths"]) out << " " << e["length"];
        out << "\n";
    }
    if (cert.contains("verdicts"))
        for (const auto& [k, v] : cert["verdicts"].items())
            out << (v.get<bool>() ? "  pass  " : "  FAIL  ") << k << "\n";
    if (cert.contains("status")) out << "status: " << cert["status"].get<std::string>() << "\n";
    return out.str();
}

}  // namespace homcx
