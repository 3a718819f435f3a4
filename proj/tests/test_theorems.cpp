#include "hurwitzlab/theorems.hpp"

#include "hurwitzlab/ginibre.hpp"
#include "wick_oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace hwl;
using Catch::Matchers::WithinAbs;

namespace {

// distinct, well-conditioned diagonals to break every index symmetry
std::vector<std::vector<double>> skew_insertions(int n, int N) {
    std::vector<std::vector<double>> out;
    for (int a = 0; a < n; ++a) {
        std::vector<double> d;
        for (int j = 0; j < N; ++j) d.push_back(0.6 + 0.25 * a + 0.2 * j);
        out.push_back(std::move(d));
    }
    return out;
}

wick::DiagSet to_diag_set(const std::vector<std::vector<double>>& ins, int n, int N) {
    wick::DiagSet ds = wick::identity_insertions(n, N);
    for (std::size_t a = 0; a < ins.size(); ++a)
        if (!ins[a].empty()) ds.diags[a] = ins[a];
    return ds;
}

double wick_reference(const TheoremCase& tc) {
    int t = theorem_split_t(tc.branch, tc.g);
    auto ds = to_diag_set(tc.insertions, tc.n, tc.N);
    switch (tc.branch) {
        case TheoremBranch::T1A:
        case TheoremBranch::T1B:
            return wick::moment_product(tc.lambda, tc.n, t, ds, tc.N);
        case TheoremBranch::T2B:
        case TheoremBranch::T2C:
            return wick::moment_pair(tc.lambda, *tc.mu, tc.n, t, ds, tc.N);
        case TheoremBranch::T3A:
        case TheoremBranch::T3B: {
            // E P_lambda(X) s_mu(Y_t) expanded over power sums:
            // s_mu = sum_Delta chi_mu(Delta)/z_Delta p_Delta.
            double total = 0.0;
            for (const auto& mu : enumerate_partitions(tc.lambda.weight())) {
                if (mu.length() > tc.N) continue;
                for (const auto& delta : enumerate_partitions(mu.weight())) {
                    double coeff = rational_to_double(Rational(chi(mu, delta), z_factor(delta)));
                    total += coeff * wick::moment_pair(tc.lambda, delta, tc.n, t, ds, tc.N);
                }
            }
            return total;
        }
    }
    return 0.0;
}

}  // namespace

TEST_CASE("theorem 1A identity-insertion values from the Wick oracle") {
    // (n, lambda) -> z_lambda sum H N^{...}; frozen against direct pairings
    TheoremCase tc;
    tc.N = 4;

    tc.branch = TheoremBranch::T1A;
    tc.lambda = Partition{1};
    tc.n = 1;
    CHECK(theorem_rhs_profiles(tc) == Rational(16));  // N^2

    tc.lambda = Partition{2};
    CHECK(theorem_rhs_profiles(tc) == Rational(128));  // 2 N^3

    tc.lambda = Partition{1};
    tc.n = 2;
    CHECK(theorem_rhs_profiles(tc) == Rational(64));  // N^{n+1}

    tc.n = 3;
    CHECK(theorem_rhs_profiles(tc) == Rational(256));

    for (int n = 1; n <= 3; ++n) {
        for (int N = 2; N <= 4; ++N) {
            for (const auto& lambda : {Partition{1}, Partition{2}, Partition{1, 1}}) {
                TheoremCase c;
                c.branch = TheoremBranch::T1A;
                c.lambda = lambda;
                c.n = n;
                c.N = N;
                double wickv = wick::moment_product(lambda, n, 0, wick::identity_insertions(n, N), N);
                CHECK_THAT(rational_to_double(theorem_rhs_profiles(c)), WithinAbs(wickv, 1e-9));
            }
        }
    }
}

TEST_CASE("profile and character paths agree everywhere both run") {
    for (auto branch : {TheoremBranch::T1A, TheoremBranch::T1B, TheoremBranch::T2B,
                        TheoremBranch::T2C, TheoremBranch::T3A, TheoremBranch::T3B}) {
        for (int n = 1; n <= 3; ++n) {
            for (int g : {0, 1}) {
                if (!theorem_branch_valid(branch, n, g)) continue;
                bool pair = branch == TheoremBranch::T2B || branch == TheoremBranch::T2C;
                for (int d = 1; d <= 3; ++d) {
                    for (const auto& lambda : enumerate_partitions(d)) {
                        TheoremCase tc;
                        tc.branch = branch;
                        tc.lambda = lambda;
                        if (pair) tc.mu = lambda;
                        tc.n = n;
                        tc.g = g;
                        tc.N = 3;
                        CHECK(theorem_rhs_profiles(tc) == theorem_rhs_characters(tc));

                        TheoremCase skew = tc;
                        skew.insertions = skew_insertions(n, 3);
                        CHECK(theorem_rhs_profiles(skew) == theorem_rhs_characters(skew));
                    }
                }
            }
        }
    }
}

TEST_CASE("theorem 2A: weight mismatch gives exactly zero") {
    TheoremCase tc;
    tc.branch = TheoremBranch::T2C;
    tc.lambda = Partition{2};
    tc.mu = Partition{1};
    tc.n = 2;
    tc.N = 3;
    CHECK(theorem_rhs_profiles(tc) == 0);
    CHECK(theorem_rhs_characters(tc) == 0);
}

TEST_CASE("resolved grouping matches the Gaussian integrals exactly") {
    // Exact cross-check against the Wick oracle at non-identity insertions;
    // the as-printed citation grouping fails on the pair/BKP branches.
    struct Probe {
        TheoremBranch branch;
        int n, g;
    };
    std::vector<Probe> probes{
        {TheoremBranch::T1A, 2, 0}, {TheoremBranch::T1A, 3, 1}, {TheoremBranch::T1B, 3, 0},
        {TheoremBranch::T1B, 4, 1}, {TheoremBranch::T2B, 3, 0}, {TheoremBranch::T2B, 4, 0},
        {TheoremBranch::T2C, 2, 0}, {TheoremBranch::T2C, 4, 1}, {TheoremBranch::T3A, 3, 0},
        {TheoremBranch::T3B, 2, 0}, {TheoremBranch::T3B, 3, 0},
    };
    for (const auto& probe : probes) {
        bool pair = probe.branch == TheoremBranch::T2B || probe.branch == TheoremBranch::T2C;
        for (int d = 1; d <= 2; ++d) {
            for (const auto& lambda : enumerate_partitions(d)) {
                TheoremCase tc;
                tc.branch = probe.branch;
                tc.lambda = lambda;
                if (pair) tc.mu = lambda;
                tc.n = probe.n;
                tc.g = probe.g;
                tc.N = 3;
                tc.insertions = skew_insertions(probe.n, 3);

                double truth = wick_reference(tc);
                double resolved = rational_to_double(theorem_rhs_characters(tc));
                CHECK_THAT(resolved, WithinAbs(truth, 1e-8 * std::max(1.0, std::abs(truth))));
            }
        }
    }
}

TEST_CASE("as-printed citation grouping disagrees on the swapped branches") {
    // T2B printed citation drops C_{2g+1}; T2C printed citation counts it
    // twice. Either way the value moves.
    TheoremCase tc;
    tc.lambda = Partition{1};
    tc.mu = Partition{1};
    tc.N = 3;

    tc.branch = TheoremBranch::T2B;
    tc.n = 3;
    tc.g = 0;
    tc.insertions = skew_insertions(3, 3);
    double truth_b = wick_reference(tc);
    CHECK_THAT(rational_to_double(theorem_rhs_characters(tc, GroupingConvention::Resolved)),
               WithinAbs(truth_b, 1e-8 * std::abs(truth_b)));
    CHECK(std::abs(rational_to_double(theorem_rhs_characters(tc, GroupingConvention::AsPrinted)) -
                   truth_b) > 1e-3 * std::abs(truth_b));

    tc.branch = TheoremBranch::T2C;
    tc.n = 2;
    tc.insertions = skew_insertions(2, 3);
    tc.mu = Partition{1};
    double truth_c = wick_reference(tc);
    CHECK_THAT(rational_to_double(theorem_rhs_characters(tc, GroupingConvention::Resolved)),
               WithinAbs(truth_c, 1e-8 * std::abs(truth_c)));
    CHECK(std::abs(rational_to_double(theorem_rhs_characters(tc, GroupingConvention::AsPrinted)) -
                   truth_c) > 1e-3 * std::abs(truth_c));
}

TEST_CASE("corollary 1 closed form matches the character fast path") {
    for (int n = 1; n <= 3; ++n)
        for (int g : {0, 1}) {
            if (!theorem_branch_valid(TheoremBranch::T1A, n, g)) continue;
            for (int N = 1; N <= 5; ++N)
                for (int d = 1; d <= 3; ++d)
                    for (const auto& lambda : enumerate_partitions(d)) {
                        TheoremCase tc;
                        tc.branch = TheoremBranch::T1A;
                        tc.lambda = lambda;
                        tc.n = n;
                        tc.g = g;
                        tc.N = N;
                        CHECK(corollary_one_rhs(lambda, n, g, N) == theorem_rhs_characters(tc));
                    }
        }
}

TEST_CASE("theorem-3 right-hand sides at d <= 2") {
    // frozen small values: n = 2, t = 0, identity insertions, N = 4
    TheoremCase tc;
    tc.branch = TheoremBranch::T3B;
    tc.n = 2;
    tc.N = 4;

    tc.lambda = Partition{1};
    CHECK(theorem_rhs_profiles(tc) == Rational(16));  // N^2

    tc.lambda = Partition{2};
    CHECK(theorem_rhs_profiles(tc) == Rational(256));  // 4 N^3

    tc.lambda = Partition{1, 1};
    CHECK(theorem_rhs_profiles(tc) == Rational(544));  // 2 N^4 + 2 N^2

    // the same cases against direct Wick pairings
    for (const auto& lambda : {Partition{1}, Partition{2}, Partition{1, 1}}) {
        tc.lambda = lambda;
        CHECK_THAT(rational_to_double(theorem_rhs_profiles(tc)), WithinAbs(wick_reference(tc), 1e-9));
    }
}

TEST_CASE("enumeration guard") {
    TheoremCase tc;
    tc.branch = TheoremBranch::T1A;
    tc.lambda = Partition{5};
    tc.n = 1;
    tc.N = 6;
    CHECK_THROWS_AS(theorem_rhs_profiles(tc), std::invalid_argument);
    CHECK(theorem_rhs_characters(tc) >= 0);  // no guard on the character path
}

TEST_CASE("branch validity") {
    CHECK(theorem_branch_valid(TheoremBranch::T1A, 1, 0));
    CHECK(!theorem_branch_valid(TheoremBranch::T1B, 1, 0));
    CHECK(!theorem_branch_valid(TheoremBranch::T1A, 2, 1));
    CHECK(theorem_branch_valid(TheoremBranch::T1A, 3, 1));
    TheoremCase tc;
    tc.branch = TheoremBranch::T1B;
    tc.lambda = Partition{1};
    tc.n = 1;
    CHECK_THROWS_AS(theorem_rhs_profiles(tc), std::invalid_argument);
}
