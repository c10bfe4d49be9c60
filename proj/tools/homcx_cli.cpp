// Command-line front end: certify a configuration, run the self test, or
// re-render a stored certificate.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "homcx/acceptance.hpp"
#include "homcx/certificate.hpp"

using namespace homcx;

namespace {

int emit(const Certificate& cert, const std::string& out_path) {
    const std::string text = cert.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return exit_code::usage;
        }
        out << text;
        std::cout << render_summary(cert);
    }
    return all_verdicts_pass(cert) ? exit_code::ok : exit_code::verdict_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified cone and tensor constructions over finite-dimensional algebras"};
    app.require_subcommand(1);

    std::string config_path, out_path, mode, function;
    std::optional<std::uint32_t> characteristic;
    std::optional<int> rank, power;
    std::optional<std::size_t> budget_dim;
    std::optional<std::uint64_t> seed;
    bool corrupt = false;

    auto* certify = app.add_subcommand("certify", "run the pipeline described by a configuration");
    certify->add_option("--config", config_path, "configuration file (key = value with sections)")
        ->check(CLI::ExistingFile);
    certify->add_option("--mode", mode, "chain, symbolic or crosscheck");
    certify->add_option("--char", characteristic, "field characteristic");
    certify->add_option("--rank", rank, "number of parameters c (or d)");
    certify->add_option("--power", power, "Yoneda power s");
    certify->add_option("--function", function, "additive function: dim or length");
    certify->add_option("--budget-dim", budget_dim, "largest module dimension allowed");
    certify->add_option("--out", out_path, "write the certificate here instead of stdout");
    certify->add_option("--seed", seed, "recorded in the certificate");
    certify->add_flag("--corrupt-signs", corrupt, "drop Koszul signs (negative control)")->group("");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--seed", seed, "seed of the randomized property suites");
    selftest->add_option("--out", out_path, "write the certificate here instead of stdout");
    selftest->add_flag("--corrupt-signs", corrupt, "drop Koszul signs (negative control)")->group("");

    std::string report_path;
    auto* report = app.add_subcommand("report", "print a summary of a stored certificate");
    report->add_option("certificate", report_path, "certificate file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (*certify) {
            RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
            if (!mode.empty()) cfg.mode = run_mode_from_string(mode);
            if (characteristic) cfg.characteristic = *characteristic;
            if (rank) cfg.rank = *rank;
            if (power) cfg.power = *power;
            if (!function.empty()) cfg.function = additive_function_from_string(function);
            if (budget_dim) cfg.budget_dim = *budget_dim;
            if (seed) cfg.seed = *seed;
            cfg.corrupt_signs = corrupt;
            return emit(run(cfg), out_path);
        }
        if (*selftest) {
            AcceptanceOptions opts;
            if (seed) opts.seed = *seed;
            opts.corrupt_signs = corrupt;
            auto results = run_acceptance(opts);
            for (const auto& r : results)
                std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ("
                          << r.seconds << " s) " << r.detail << "\n";
            return emit(selftest_certificate(results, opts), out_path);
        }
        if (*report) {
            std::ifstream in(report_path);
            Certificate cert = Certificate::parse(in);
            std::cout << render_summary(cert);
            return all_verdicts_pass(cert) ? exit_code::ok : exit_code::verdict_failed;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_code::budget;
    } catch (const ContractError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const UnsupportedOperation& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed certificate: " << e.what() << "\n";
        return exit_code::usage;
    }
    return exit_code::usage;
}
