#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "homcx/acceptance.hpp"
#include "homcx/certificate.hpp"

using namespace homcx;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / ("homcx_test_" + name);
    std::ofstream(p) << text;
    return p;
}

int cli(const std::string& args) {
    std::string cmd = std::string(HOMCX_CLI) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config parsing") {
    auto p = temp_file("chain.ini",
                       "mode = chain\n"
                       "[algebra]\ncharacteristic = 3\nexponents = 3, 3\ncoproduct = group_shifted\n"
                       "[construction]\nrank = 2\ndegree = 2\nfunction = length\n"
                       "[budget]\nmax_dim = 4096\n");
    RunConfig c = load_config(p.string());
    CHECK(c.mode == RunMode::chain);
    CHECK(c.exponents == std::vector<unsigned>{3, 3});
    CHECK(c.coproduct == Coproduct::group_shifted);
    CHECK(c.rank == 2);
    CHECK(c.function == AdditiveFunction::length);
    CHECK(c.budget_dim == 4096);
    auto bad = temp_file("bad.ini", "[construction]\nrank = two\n");
    CHECK_THROWS_AS(load_config(bad.string()), ContractError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), ContractError);
}

TEST_CASE("mode preconditions") {
    RunConfig c;
    c.mode = RunMode::symbolic;
    c.rank = 7;
    CHECK_THROWS_AS(validate(c), ContractError);
    c.mode = RunMode::chain;
    c.rank = 5;
    CHECK_THROWS_AS(validate(c), ContractError);
    c.rank = 9;
    CHECK_THROWS_AS(validate(c), ContractError);
    c.rank = 2;
    c.degree = 3;
    CHECK_THROWS_AS(validate(c), ContractError);
    c.degree = 2;
    c.path = PipelinePath::bimodule;
    c.rank = 3;
    CHECK_THROWS_AS(validate(c), ContractError);
}

TEST_CASE("symbolic certificate") {
    RunConfig c;
    c.rank = 10;
    Certificate cert = run(c);
    CHECK(cert["total"] == 1008);
    CHECK(cert["bound"] == 1024);
    CHECK(cert["status"] == "pass");
    CHECK(run(c).dump() == cert.dump());
    c.characteristic = 2;
    Certificate c2 = run(c);
    CHECK(c2["verdicts"]["lefschetz_profile"] == false);
    CHECK(c2["status"] == "fail");
}

TEST_CASE("chain certificate at rank 2") {
    RunConfig c;
    c.mode = RunMode::chain;
    c.rank = 2;
    Certificate cert = run(c);
    CHECK(cert["status"] == "pass");
    CHECK(cert["tensor_homology"].size() == 3);
    CHECK(cert["tensor_homology"][1]["dim"] == 2);
    CHECK(cert["verdicts"]["lemma_projective"] == true);
    CHECK(cert["verdicts"]["oracle_equivalence"] == true);
    CHECK(run(c).dump() == cert.dump());

    c.corrupt_signs = true;
    Certificate bad = run(c);
    CHECK(bad["verdicts"]["thetas_anticommute"] == false);

    RunConfig cc;
    cc.mode = RunMode::crosscheck;
    cc.rank = 9;
    Certificate x = run(cc);
    CHECK(x["verdicts"]["kunneth_matches_direct"] == true);
}

TEST_CASE("bimodule certificate and budget") {
    RunConfig c;
    c.mode = RunMode::chain;
    c.rank = 1;
    c.exponents = {3};
    c.path = PipelinePath::bimodule;
    Certificate cert = run(c);
    CHECK(cert["status"] == "pass");
    c.budget_dim = 5;
    CHECK_THROWS_AS(run(c), BudgetExceeded);
}

TEST_CASE("selftest negative control") {
    AcceptanceOptions opts;
    opts.corrupt_signs = true;
    opts.property_cases = 20;
    auto results = run_acceptance(opts);
    REQUIRE(results.size() == 9);
    CHECK_FALSE(results[4].pass);
    Certificate cert = selftest_certificate(results, opts);
    CHECK(cert["status"] == "fail");
}

TEST_CASE("exit codes") {
    CHECK(cli("certify --mode symbolic --rank 8") == 0);
    CHECK(cli("certify --mode symbolic --rank 7") == 64);
    CHECK(cli("certify --mode symbolic --rank 8 --char 2") == 2);
    CHECK(cli("certify --mode chain --rank 2 --budget-dim 20") == 65);
    CHECK(cli("certify --mode chain --rank 2 --corrupt-signs") == 2);
    CHECK(cli("frobnicate") == 64);
    auto out = std::filesystem::temp_directory_path() / "homcx_test_cert.json";
    CHECK(cli("certify --mode chain --rank 2 --out " + out.string()) == 0);
    CHECK(cli("report " + out.string()) == 0);
    auto out2 = std::filesystem::temp_directory_path() / "homcx_test_cert2.json";
    CHECK(cli("certify --mode chain --rank 2 --out " + out2.string()) == 0);
    std::ifstream a(out), b(out2);
    std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(sa == sb);
}
