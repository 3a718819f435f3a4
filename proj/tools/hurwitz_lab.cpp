// Batch front end: exact Hurwitz numbers, permutation-relator oracles,
// tau-series coefficient dumps, and Monte Carlo validation of the
// Ginibre-chain moment identities.

#include "hurwitzlab/hurwitzlab.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using hwl::json;
using hwl::Partition;
using hwl::Rational;

std::string decimal12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<Partition> parse_profile_list(const std::string& text) {
    std::vector<Partition> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '[')
            throw std::invalid_argument("profiles: expected bracketed partitions like \"[3] [2,1]\"");
        auto close = text.find(']', pos);
        if (close == std::string::npos) throw std::invalid_argument("profiles: missing ']'");
        out.push_back(hwl::parse_partition(text.substr(pos, close - pos + 1)));
        pos = close + 1;
    }
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const json& report, const std::string& output) {
    if (output == "csv") {
        const json& results = report["results"];
        if (results.contains("coefficients")) {
            std::cout << "key,value\n";
            for (auto it = results["coefficients"].begin(); it != results["coefficients"].end(); ++it)
                std::cout << it.key() << "," << it.value().get<std::string>() << "\n";
        } else {
            std::string header, row;
            for (auto it = results.begin(); it != results.end(); ++it) {
                if (!it->is_primitive()) continue;
                if (!header.empty()) {
                    header += ",";
                    row += ",";
                }
                header += it.key();
                row += it->is_string() ? it->get<std::string>() : it->dump();
            }
            std::cout << header << "\n" << row << "\n";
        }
        std::cout << "verdict," << report["verdict"].get<std::string>() << "\n";
        return;
    }
    std::cout << report.dump(2) << "\n";
}

int run_hurwitz(int euler, std::optional<int> degree, const std::string& profile_text,
                const std::string& output) {
    Timer timer;
    std::vector<Partition> profiles = parse_profile_list(profile_text);
    int d;
    if (!profiles.empty()) {
        d = profiles.front().weight();
        if (degree && *degree != d)
            throw std::invalid_argument("--degree disagrees with the profile weights");
    } else if (degree) {
        d = *degree;
    } else {
        throw std::invalid_argument("need --degree or --profiles");
    }

    json config{{"euler", euler}, {"degree", d}};
    json profile_names = json::array();
    for (const auto& p : profiles) profile_names.push_back(hwl::to_string(p));
    config["profiles"] = profile_names;

    Rational value = hwl::hurwitz_frobenius(hwl::CoveringSpec(euler, d, profiles));
    json results{{"euler", euler},
                 {"degree", d},
                 {"profiles", profile_names},
                 {"value", hwl::rational_to_string(value)},
                 {"value_decimal", decimal12(hwl::rational_to_double(value))},
                 {"euler_cover", hwl::riemann_hurwitz_euler(euler, d, profiles)},
                 {"provenance", "formula"}};
    emit(hwl::make_report("hurwitz", config, results, json::array(), true, timer.ms()), output);
    return 0;
}

int run_oracle(const std::string& surface, std::optional<int> degree,
               const std::string& profile_text, const std::string& output) {
    Timer timer;
    std::vector<Partition> profiles = parse_profile_list(profile_text);
    int d;
    if (!profiles.empty()) {
        d = profiles.front().weight();
        if (degree && *degree != d)
            throw std::invalid_argument("--degree disagrees with the profile weights");
    } else if (degree) {
        d = *degree;
    } else {
        throw std::invalid_argument("need --degree or --profiles");
    }

    hwl::OracleResult oracle;
    int euler;
    if (surface == "sphere") {
        euler = 2;
        oracle = hwl::oracle_orientable(0, profiles, d);
    } else if (surface == "torus") {
        euler = 0;
        oracle = hwl::oracle_orientable(1, profiles, d);
    } else if (surface == "rp2") {
        euler = 1;
        oracle = hwl::oracle_nonorientable(1, profiles, d);
    } else if (surface == "klein") {
        euler = 0;
        oracle = hwl::oracle_nonorientable(2, profiles, d);
    } else {
        throw std::invalid_argument("surface must be sphere, torus, rp2 or klein");
    }

    Rational formula = hwl::hurwitz_frobenius(hwl::CoveringSpec(euler, d, profiles));
    bool match = oracle.value == formula;

    json profile_names = json::array();
    for (const auto& p : profiles) profile_names.push_back(hwl::to_string(p));
    json config{{"surface", surface}, {"degree", d}, {"profiles", profile_names}};
    json results{{"surface", surface},
                 {"degree", d},
                 {"profiles", profile_names},
                 {"count", oracle.count},
                 {"value", hwl::rational_to_string(oracle.value)},
                 {"value_decimal", decimal12(hwl::rational_to_double(oracle.value))},
                 {"formula_value", hwl::rational_to_string(formula)},
                 {"provenance", "oracle"},
                 {"formula_provenance", "formula"}};
    json checks = json::array({json{{"name", "oracle-matches-formula"}, {"pass", match}}});
    emit(hwl::make_report("oracle", config, results, checks, match, timer.ms()), output);
    return match ? 0 : 1;
}

int run_series(const std::string& kind, int degree, const std::string& output) {
    Timer timer;
    if (degree < 0 || degree > 10)
        throw std::invalid_argument("series degree bound must be between 0 and 10");
    hwl::GradedSeries tau =
        kind == "2kp" ? hwl::tau_2kp_series(degree) : hwl::tau_bkp_series(degree);

    json coeffs = json::object();
    for (const auto& [key, c] : tau.terms())
        coeffs[hwl::series_key_text(key)] = hwl::rational_to_string(c);

    json config{{"kind", kind}, {"degree", degree}};
    json results{{"kind", kind},
                 {"degree_bound", degree},
                 {"terms", coeffs.size()},
                 {"provenance", "formula"},
                 {"coefficients", coeffs}};
    emit(hwl::make_report("series", config, results, json::array(), true, timer.ms()), output);
    return 0;
}

std::vector<std::vector<double>> parse_insertions(const json& cfg, int n, int N) {
    std::vector<std::vector<double>> insertions;
    if (!cfg.contains("insertions")) return insertions;
    for (const auto& item : cfg["insertions"]) {
        if (item.is_string() && item.get<std::string>() == "identity") {
            insertions.push_back({});
        } else {
            std::vector<double> d = item.get<std::vector<double>>();
            if (static_cast<int>(d.size()) != N)
                throw std::invalid_argument("mc config: insertion size differs from N");
            insertions.push_back(std::move(d));
        }
    }
    if (static_cast<int>(insertions.size()) != n)
        throw std::invalid_argument("mc config: need one insertion per factor");
    return insertions;
}

hwl::Matrix diagonal_from_json(const json& entry, int N) {
    hwl::Matrix m = hwl::Matrix::Identity(N, N);
    if (entry.is_string() && entry.get<std::string>() == "identity") return m;
    std::vector<double> d = entry.get<std::vector<double>>();
    if (static_cast<int>(d.size()) != N)
        throw std::invalid_argument("mc config: matrix diagonal size differs from N");
    for (int i = 0; i < N; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

int run_mc(const std::string& config_path, std::optional<std::uint64_t> seed_override,
           std::optional<long long> samples_override, double tolerance_z,
           const std::string& output) {
    Timer timer;
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("mc: cannot open config file " + config_path);
    json cfg = json::parse(in);

    std::string estimand = cfg.at("estimand").get<std::string>();
    std::uint64_t seed = seed_override ? *seed_override : cfg.value("seed", 1ULL);
    long long samples = samples_override ? *samples_override : cfg.value("samples", 200000LL);

    json results;
    hwl::McEstimate estimate;
    std::string reference_text;
    double reference_value = 0.0;

    if (estimand == "moment_product" || estimand == "moment_pair" || estimand == "moment_bkp") {
        hwl::GinibreChainConfig chain;
        chain.n = cfg.at("n").get<int>();
        chain.N = cfg.at("N").get<int>();
        chain.t = cfg.value("t", 0);
        chain.seed = seed;
        chain.samples = samples;
        chain.insertions = parse_insertions(cfg, chain.n, chain.N);
        chain.validate();

        Partition lambda = Partition(cfg.at("lambda").get<std::vector<int>>());
        int g = chain.t / 2;

        hwl::TheoremCase tc;
        tc.lambda = lambda;
        tc.n = chain.n;
        tc.g = g;
        tc.N = chain.N;
        tc.insertions = chain.insertions;

        if (estimand == "moment_product") {
            tc.branch = chain.t % 2 == 0 ? hwl::TheoremBranch::T1A : hwl::TheoremBranch::T1B;
            estimate = hwl::estimate_moment_product(chain, lambda);
        } else if (estimand == "moment_pair") {
            Partition mu = Partition(cfg.at("mu").get<std::vector<int>>());
            tc.branch = chain.t % 2 == 0 ? hwl::TheoremBranch::T2C : hwl::TheoremBranch::T2B;
            tc.mu = mu;
            estimate = hwl::estimate_moment_pair(chain, lambda, mu);
            results["mu"] = hwl::to_string(mu);
        } else {
            tc.branch = chain.t % 2 == 0 ? hwl::TheoremBranch::T3B : hwl::TheoremBranch::T3A;
            estimate = hwl::estimate_moment_bkp(chain, lambda);
        }

        Rational reference = hwl::theorem_rhs_characters(tc);
        reference_text = hwl::rational_to_string(reference);
        reference_value = hwl::rational_to_double(reference);
        results["lambda"] = hwl::to_string(lambda);
        results["theorem_branch"] = hwl::to_string(tc.branch);
        if (lambda.weight() > chain.N)
            results["degree_warning"] =
                "|lambda| exceeds N: no Hurwitz interpretation for this moment";
    } else if (estimand == "lemma_one" || estimand == "lemma_two") {
        int N = cfg.at("N").get<int>();
        hwl::Matrix a = diagonal_from_json(cfg.value("A", json("identity")), N);
        hwl::Matrix b = diagonal_from_json(cfg.value("B", json("identity")), N);
        Partition lambda = Partition(cfg.at("lambda").get<std::vector<int>>());
        std::complex<double> reference;
        if (estimand == "lemma_one") {
            estimate = hwl::lemma_mc_one(a, b, lambda, samples, seed);
            reference = hwl::lemma_reference_one(a, b, lambda);
        } else {
            Partition mu = Partition(cfg.at("mu").get<std::vector<int>>());
            estimate = hwl::lemma_mc_two(a, b, lambda, mu, samples, seed);
            reference = hwl::lemma_reference_two(a, b, lambda, mu);
            results["mu"] = hwl::to_string(mu);
        }
        reference_text = decimal12(reference.real());
        reference_value = reference.real();
        results["lambda"] = hwl::to_string(lambda);
    } else {
        throw std::invalid_argument("mc: unknown estimand " + estimand);
    }

    double z = estimate.std_error > 0.0
                   ? std::abs(estimate.mean - std::complex<double>(reference_value)) /
                         estimate.std_error
                   : 0.0;
    bool pass = z <= tolerance_z;

    results["estimand"] = estimand;
    results["mean_re"] = estimate.mean.real();
    results["mean_im"] = estimate.mean.imag();
    results["std_error"] = estimate.std_error;
    results["samples"] = estimate.samples;
    results["exact_reference"] = reference_text;
    results["z_score"] = z;
    results["provenance"] = "monte-carlo";

    json config_echo = cfg;
    config_echo["seed"] = seed;
    config_echo["samples"] = samples;
    json checks = json::array(
        {json{{"name", "z-score-within-tolerance"}, {"pass", pass}, {"tolerance", tolerance_z}}});
    emit(hwl::make_report("mc", config_echo, results, checks, pass, timer.ms()), output);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hurwitz numbers of Riemann and Klein covers, cross-checked by "
                 "permutation-relator counting and Ginibre-chain Monte Carlo"};
    app.require_subcommand(1);

    std::string output = "json";

    auto* cmd_hurwitz = app.add_subcommand("hurwitz", "Frobenius-formula Hurwitz number");
    int euler = 2;
    std::optional<int> degree;
    std::string profile_text;
    cmd_hurwitz->add_option("--euler", euler, "base Euler characteristic (<= 2)")->required();
    cmd_hurwitz->add_option("--degree", degree, "covering degree (required without profiles)");
    cmd_hurwitz->add_option("--profiles", profile_text, "branch profiles, e.g. \"[3] [3]\"");
    cmd_hurwitz->add_option("--output", output, "json or csv");

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force relator count vs formula");
    std::string surface;
    std::optional<int> odegree;
    std::string oprofiles;
    cmd_oracle->add_option("--surface", surface, "sphere, torus, rp2 or klein")->required();
    cmd_oracle->add_option("--degree", odegree, "covering degree (<= 6)");
    cmd_oracle->add_option("--profiles", oprofiles, "branch profiles");
    cmd_oracle->add_option("--output", output, "json or csv");

    auto* cmd_series = app.add_subcommand("series", "tau-series coefficient dump");
    std::string kind;
    int sdegree = 5;
    cmd_series->add_option("--kind", kind, "2kp or bkp")
        ->required()
        ->check(CLI::IsMember({"2kp", "bkp"}));
    cmd_series->add_option("--degree", sdegree, "degree bound (<= 10)")->required();
    cmd_series->add_option("--output", output, "json or csv");

    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo vs exact theorem value");
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<long long> samples;
    double tolerance_z = 4.0;
    cmd_mc->add_option("--config", config_path, "experiment config JSON")->required();
    cmd_mc->add_option("--seed", seed, "override config seed");
    cmd_mc->add_option("--samples", samples, "override config sample count");
    cmd_mc->add_option("--tolerance-z", tolerance_z, "pass threshold on |z| (default 4.0)");
    cmd_mc->add_option("--output", output, "json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_hurwitz->parsed()) return run_hurwitz(euler, degree, profile_text, output);
        if (cmd_oracle->parsed()) return run_oracle(surface, odegree, oprofiles, output);
        if (cmd_series->parsed()) return run_series(kind, sdegree, output);
        if (cmd_mc->parsed()) return run_mc(config_path, seed, samples, tolerance_z, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
