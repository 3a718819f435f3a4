#include "hurwitzlab/report.hpp"

#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
    const char* path = std::getenv("HURWITZ_LAB_CLI");
    REQUIRE(path != nullptr);
    std::string cmd = std::string(path) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        r.stdout_text.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

hwl::json parse_report(const CliResult& r) { return hwl::json::parse(r.stdout_text); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("hurwitz subcommand reproduces textbook values") {
    auto two_cycles = run_cli("hurwitz --euler 2 --profiles \"[3] [3]\"");
    CHECK(two_cycles.exit_code == 0);
    auto report = parse_report(two_cycles);
    CHECK(report["results"]["value"] == "1/3");

    auto rp2_unbranched = run_cli("hurwitz --euler 1 --degree 3");
    CHECK(parse_report(rp2_unbranched)["results"]["value"] == "2/3");

    auto rp2_cycle = run_cli("hurwitz --euler 1 --profiles \"[3]\"");
    CHECK(parse_report(rp2_cycle)["results"]["value"] == "1/3");
}

TEST_CASE("oracle subcommand verdicts") {
    auto rp2 = run_cli("oracle --surface rp2 --degree 3");
    CHECK(rp2.exit_code == 0);
    auto report = parse_report(rp2);
    CHECK(report["results"]["count"] == 4);
    CHECK(report["results"]["value"] == "2/3");
    CHECK(report["verdict"] == "PASS");

    auto sphere = run_cli("oracle --surface sphere --profiles \"[4] [4]\"");
    CHECK(parse_report(sphere)["results"]["value"] == "1/4");
    CHECK(sphere.exit_code == 0);

    auto klein = run_cli("oracle --surface klein --degree 2");
    CHECK(parse_report(klein)["results"]["value"] == "2");
    CHECK(klein.exit_code == 0);
}

TEST_CASE("series subcommand dumps exact coefficients") {
    auto bkp = run_cli("series --kind bkp --degree 3");
    CHECK(bkp.exit_code == 0);
    auto report = parse_report(bkp);
    CHECK(report["results"]["coefficients"]["3:1:[3]"] == "1/3");

    auto two_kp = run_cli("series --kind 2kp --degree 2");
    CHECK(parse_report(two_kp)["results"]["coefficients"]["2:2:[2]|[2]"] == "1/2");

    auto constant = run_cli("series --kind bkp --degree 0");
    auto creport = parse_report(constant);
    CHECK(creport["results"]["coefficients"]["0:0:[]"] == "1");
    CHECK(creport["results"]["coefficients"].size() == 1);
}

TEST_CASE("usage and validation errors exit with code 2") {
    CHECK(run_cli("hurwitz").exit_code == 2);
    CHECK(run_cli("hurwitz --euler 2").exit_code == 2);  // no degree, no profiles
    CHECK(run_cli("hurwitz --euler 2 --profiles \"[3] [2]\"").exit_code == 2);
    CHECK(run_cli("oracle --surface blob --degree 2").exit_code == 2);
    CHECK(run_cli("oracle --surface sphere --degree 9").exit_code == 2);
    CHECK(run_cli("series --kind bkp --degree 11").exit_code == 2);
    CHECK(run_cli("mc --config /nonexistent.json").exit_code == 2);
}

TEST_CASE("mc subcommand passes against the exact reference") {
    std::string cfg = "/tmp/hwl_mc_product.json";
    write_file(cfg, R"({"estimand":"moment_product","n":1,"N":4,"t":0,
                        "lambda":[2],"seed":4242,"samples":120000})");
    auto r = run_cli("mc --config " + cfg);
    CHECK(r.exit_code == 0);
    auto report = parse_report(r);
    CHECK(report["results"]["exact_reference"] == "128");
    CHECK(report["results"]["z_score"].get<double>() <= 4.0);
    CHECK(report["verdict"] == "PASS");

    // vanishing configuration: |lambda| != |mu|
    std::string cfg2 = "/tmp/hwl_mc_pair.json";
    write_file(cfg2, R"({"estimand":"moment_pair","n":2,"N":4,"t":1,
                         "lambda":[1],"mu":[2],"seed":7,"samples":60000})");
    auto r2 = run_cli("mc --config " + cfg2);
    CHECK(r2.exit_code == 0);
    CHECK(parse_report(r2)["results"]["exact_reference"] == "0");

    // lemma check with identity matrices at N = 3
    std::string cfg3 = "/tmp/hwl_mc_lemma.json";
    write_file(cfg3, R"({"estimand":"lemma_one","N":3,"A":"identity","B":"identity",
                         "lambda":[1],"seed":11,"samples":60000})");
    auto r3 = run_cli("mc --config " + cfg3);
    CHECK(r3.exit_code == 0);
    CHECK(parse_report(r3)["results"]["exact_reference"] == "9");
}

TEST_CASE("reports are byte-identical apart from timing") {
    std::string cfg = "/tmp/hwl_mc_repeat.json";
    write_file(cfg, R"({"estimand":"moment_product","n":2,"N":3,"t":0,
                        "lambda":[1],"seed":99,"samples":40000})");
    auto first = run_cli("mc --config " + cfg);
    auto second = run_cli("mc --config " + cfg);
    REQUIRE(first.exit_code == 0);
    auto a = hwl::strip_timing(parse_report(first));
    auto b = hwl::strip_timing(parse_report(second));
    CHECK(a.dump() == b.dump());
}

TEST_CASE("csv output") {
    auto r = run_cli("hurwitz --euler 2 --degree 3 --output csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("value") != std::string::npos);
    CHECK(r.stdout_text.find("1/6") != std::string::npos);
    CHECK(r.stdout_text.find("verdict,PASS") != std::string::npos);
}
