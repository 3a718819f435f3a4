#pragma once

#include "hurwitzlab/characters.hpp"
#include "hurwitzlab/hurwitz.hpp"
#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/schur.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwl {

/// Which moment identity a right-hand side belongs to: P(XY_t) with t even
/// (1A) or odd (1B), P(X)P(Y_t) with t odd (2B) or even (2C), and the BKP
/// pairings P(X)tau(Y_t) with t odd (3A) or even (3B).
enum class TheoremBranch { T1A, T1B, T2B, T2C, T3A, T3B };

/// How the insertion matrices C_1..C_n are grouped into the spectral-
/// invariant factors of the sum. `Resolved` is the grouping that matches the
/// Gaussian integrals (verified by the convention-resolution tests);
/// `AsPrinted` follows the equation citations literally, which swaps the
/// groupings of the pair/BKP branches.
enum class GroupingConvention { Resolved, AsPrinted };

inline std::string to_string(TheoremBranch b) {
    switch (b) {
        case TheoremBranch::T1A: return "1A";
        case TheoremBranch::T1B: return "1B";
        case TheoremBranch::T2B: return "2B";
        case TheoremBranch::T2C: return "2C";
        case TheoremBranch::T3A: return "3A";
        case TheoremBranch::T3B: return "3B";
    }
    return "?";
}

inline int theorem_split_t(TheoremBranch b, int g) {
    switch (b) {
        case TheoremBranch::T1A:
        case TheoremBranch::T2C:
        case TheoremBranch::T3B: return 2 * g;
        default: return 2 * g + 1;
    }
}

inline int theorem_base_euler(TheoremBranch b, int g) {
    switch (b) {
        case TheoremBranch::T3A:
        case TheoremBranch::T3B: return 1 - 2 * g;
        default: return 2 - 2 * g;
    }
}

inline bool theorem_branch_valid(TheoremBranch b, int n, int g) {
    if (g < 0 || n < 1) return false;
    return theorem_split_t(b, g) < n;
}

namespace detail {

inline std::vector<int> range_indices(int first, int last) {  // inclusive, 0-based
    std::vector<int> v;
    for (int i = first; i <= last; ++i) v.push_back(i);
    return v;
}

inline std::vector<int> odd_indices_upto(int last_one_based) {  // C_1, C_3, ...
    std::vector<int> v;
    for (int c = 1; c <= last_one_based; c += 2) v.push_back(c - 1);
    return v;
}

inline std::vector<int> even_indices_upto(int last_one_based) {  // C_2, C_4, ...
    std::vector<int> v;
    for (int c = 2; c <= last_one_based; c += 2) v.push_back(c - 1);
    return v;
}

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace detail

/// Insertion-index groups, one per profile slot of the theorem sum, in the
/// Delta-index order of the statement. Indices are 0-based positions into
/// the chain C_1..C_n; a group may be empty (identity factor), and the
/// as-printed readings of the swapped citations drop or duplicate an index.
inline std::vector<std::vector<int>> factor_groups(TheoremBranch b, int n, int g,
                                                   GroupingConvention conv) {
    using detail::concat;
    using detail::even_indices_upto;
    using detail::odd_indices_upto;
    using detail::range_indices;
    if (!theorem_branch_valid(b, n, g))
        throw std::invalid_argument("factor_groups: branch requires t < n");

    std::vector<std::vector<int>> groups;
    switch (b) {
        case TheoremBranch::T1A:
            // Singles C_{2g+1}..C_n, then the merged block C_1..C_{2g}.
            for (int i = 2 * g; i < n; ++i) groups.push_back({i});
            groups.push_back(range_indices(0, 2 * g - 1));
            break;
        case TheoremBranch::T1B:
            // Singles C_{2g+2}..C_n, then odd block to C_{2g+1}, then even
            // block to C_{2g}.
            for (int i = 2 * g + 1; i < n; ++i) groups.push_back({i});
            groups.push_back(odd_indices_upto(2 * g + 1));
            groups.push_back(even_indices_upto(2 * g));
            break;
        case TheoremBranch::T2B:
        case TheoremBranch::T3A:
            // Singles C_{2g+2}..C_{n-1}, then the odd block, then C_n times
            // the even block. The printed citation uses the even-split
            // equation, which loses C_{2g+1}.
            for (int i = 2 * g + 1; i < n - 1; ++i) groups.push_back({i});
            groups.push_back(conv == GroupingConvention::Resolved ? odd_indices_upto(2 * g + 1)
                                                                  : odd_indices_upto(2 * g - 1));
            groups.push_back(concat({n - 1}, even_indices_upto(2 * g)));
            break;
        case TheoremBranch::T2C:
        case TheoremBranch::T3B:
            // Singles C_{2g+1}..C_{n-1}, then one merged block
            // C_1..C_{2g} C_n. The printed citation uses the odd-split
            // equation, which counts C_{2g+1} twice.
            for (int i = 2 * g; i < n - 1; ++i) groups.push_back({i});
            if (conv == GroupingConvention::Resolved)
                groups.push_back(concat(range_indices(0, 2 * g - 1), {n - 1}));
            else
                groups.push_back(concat(range_indices(0, 2 * g), {n - 1}));
            break;
    }
    return groups;
}

/// One theorem right-hand side to evaluate exactly. Insertions follow the
/// Monte Carlo config: empty vector (or empty list) = identity diagonal.
struct TheoremCase {
    TheoremBranch branch = TheoremBranch::T1A;
    Partition lambda;
    std::optional<Partition> mu;  // T2 branches only
    int n = 1;
    int g = 0;
    int N = 2;
    std::vector<std::vector<double>> insertions;

    int degree() const { return lambda.weight(); }

    bool identity_insertions() const {
        for (const auto& c : insertions)
            for (double v : c)
                if (v != 1.0) return false;
        return true;
    }

    std::vector<Rational> group_diagonal(const std::vector<int>& group) const {
        std::vector<Rational> diag(static_cast<std::size_t>(N), Rational(1));
        for (int idx : group) {
            if (insertions.empty() || insertions[static_cast<std::size_t>(idx)].empty()) continue;
            const auto& c = insertions[static_cast<std::size_t>(idx)];
            for (int j = 0; j < N; ++j)
                diag[static_cast<std::size_t>(j)] *= Rational(c[static_cast<std::size_t>(j)]);
        }
        return diag;
    }

    void validate() const {
        if (!theorem_branch_valid(branch, n, g))
            throw std::invalid_argument("TheoremCase: t must satisfy t < n");
        bool needs_mu = branch == TheoremBranch::T2B || branch == TheoremBranch::T2C;
        if (needs_mu != mu.has_value())
            throw std::invalid_argument("TheoremCase: mu is for theorem-2 branches only");
        if (!insertions.empty() && static_cast<int>(insertions.size()) != n)
            throw std::invalid_argument("TheoremCase: need one insertion per factor");
        for (const auto& c : insertions)
            if (!c.empty() && static_cast<int>(c.size()) != N)
                throw std::invalid_argument("TheoremCase: insertion size differs from N");
    }
};

namespace detail {

inline Rational p_delta_of_diagonal(const Partition& delta, const std::vector<Rational>& diag) {
    Rational acc = 1;
    for (int part : delta.parts()) {
        Rational s = 0;
        for (const Rational& c : diag) s += rational_pow(c, part);
        acc *= s;
    }
    return acc;
}

inline std::vector<Rational> powersum_values_of_diagonal(const std::vector<Rational>& diag,
                                                         int max_m) {
    std::vector<Rational> out(static_cast<std::size_t>(max_m), Rational(0));
    for (int m = 1; m <= max_m; ++m)
        for (const Rational& c : diag) out[static_cast<std::size_t>(m - 1)] += rational_pow(c, m);
    return out;
}

}  // namespace detail

/// Corollary-1 closed form for identity insertions:
///   z_lambda N^{nd - l(lambda)} sum_{E'} N^{E'} S^{E'}_E(lambda).
inline Rational corollary_one_rhs(const Partition& lambda, int n, int g, int N) {
    int d = lambda.weight();
    int slots = n + (2 - 2 * g) - 1;
    Rational total = 0;
    int base = lambda.length() - n * d;  // E' = base + sum of profile lengths
    for (int len = std::max(0, slots); len <= slots * d; ++len) {
        Rational s = corollary_sum(lambda, n, g, base + len);
        // N^{nd - l(lambda)} N^{E'} = N^{len}
        if (s != 0) total += s * Rational(int_pow(Int(N), static_cast<unsigned>(len)));
    }
    return Rational(z_factor(lambda)) * total;
}

/// Theorem RHS by direct enumeration of profile tuples:
///   z_lambda (z_mu) sum_{Delta^1..Delta^K} H^{E,n+E}(d; leading, Delta...)
///       prod_j P_{Delta^j}(C-group_j).
/// Exact rational (insertion entries are binary doubles, hence rational).
/// For identity insertions the theorem-1 branches are checked against the
/// Corollary-1 closed form.
inline Rational theorem_rhs_profiles(const TheoremCase& tc,
                                     GroupingConvention conv = GroupingConvention::Resolved) {
    tc.validate();
    int d = tc.degree();
    if (d > 4 || tc.n > 4)
        throw std::invalid_argument("theorem_rhs_profiles: enumeration guard (d <= 4, n <= 4)");
    if (tc.mu && tc.mu->weight() != d) return Rational(0);  // Theorem 2(A)

    int euler = theorem_base_euler(tc.branch, tc.g);
    auto groups = factor_groups(tc.branch, tc.n, tc.g, conv);
    std::vector<std::vector<Rational>> diags;
    diags.reserve(groups.size());
    for (const auto& grp : groups) diags.push_back(tc.group_diagonal(grp));

    std::vector<Partition> leading{tc.lambda};
    if (tc.mu) leading.push_back(*tc.mu);

    std::vector<Partition> all = enumerate_partitions(d);
    Rational total = 0;
    std::vector<Partition> tuple(groups.size());
    auto rec = [&](auto&& self, std::size_t slot, const Rational& weight) -> void {
        if (slot == groups.size()) {
            std::vector<Partition> profiles = leading;
            profiles.insert(profiles.end(), tuple.begin(), tuple.end());
            Rational h = hurwitz_frobenius(CoveringSpec(euler, d, std::move(profiles)));
            if (h != 0) total += h * weight;
            return;
        }
        for (const Partition& p : all) {
            tuple[slot] = p;
            self(self, slot + 1, weight * detail::p_delta_of_diagonal(p, diags[slot]));
        }
    };
    rec(rec, 0, Rational(1));

    Rational z(z_factor(tc.lambda));
    if (tc.mu) z *= Rational(z_factor(*tc.mu));
    Rational value = z * total;

    bool theorem_one =
        tc.branch == TheoremBranch::T1A || tc.branch == TheoremBranch::T1B;
    if (theorem_one && tc.identity_insertions() && conv == GroupingConvention::Resolved) {
        if (value != corollary_one_rhs(tc.lambda, tc.n, tc.g, tc.N))
            throw std::logic_error("theorem_rhs_profiles: Corollary-1 cross-check failed");
    }
    return value;
}

/// Same right-hand side with the profile sums folded through the
/// characteristic map:
///   z_lambda (z_mu) sum_{alpha |- d} (dim alpha/d!)^E phi_alpha(lambda)
///       [phi_alpha(mu)] prod_j (d!/dim alpha) s_alpha(C-group_j).
/// No tuple-enumeration guard.
inline Rational theorem_rhs_characters(const TheoremCase& tc,
                                       GroupingConvention conv = GroupingConvention::Resolved) {
    tc.validate();
    int d = tc.degree();
    if (tc.mu && tc.mu->weight() != d) return Rational(0);  // Theorem 2(A)

    int euler = theorem_base_euler(tc.branch, tc.g);
    auto groups = factor_groups(tc.branch, tc.n, tc.g, conv);
    std::vector<std::vector<Rational>> pvals;
    pvals.reserve(groups.size());
    for (const auto& grp : groups)
        pvals.push_back(detail::powersum_values_of_diagonal(tc.group_diagonal(grp), d));

    Rational d_fact(factorial(d));
    Rational total = 0;
    for (const Partition& alpha : enumerate_partitions(d)) {
        Rational dim_ratio = Rational(dimension(alpha)) / d_fact;
        Rational term = rational_pow(dim_ratio, euler) * phi(alpha, tc.lambda);
        if (tc.mu) term *= phi(alpha, *tc.mu);
        if (term == 0) continue;
        PowerSumPolynomial s_alpha = schur_in_powersums(alpha, d);
        for (const auto& pv : pvals)
            term *= s_alpha.evaluate_rational(pv) / dim_ratio;
        total += term;
    }
    Rational z(z_factor(tc.lambda));
    if (tc.mu) z *= Rational(z_factor(*tc.mu));
    return z * total;
}

}  // namespace hwl
