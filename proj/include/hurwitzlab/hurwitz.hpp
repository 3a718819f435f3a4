#pragma once

#include "hurwitzlab/characters.hpp"
#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/series.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace hwl {

using HurwitzValue = Rational;

/// Base Euler characteristic plus the ordered branch profiles of a covering
/// count. Trivial profiles (1^d) are admitted.
struct CoveringSpec {
    int euler_base = 2;
    int degree = 1;
    std::vector<Partition> profiles;

    CoveringSpec(int euler, int d, std::vector<Partition> prof)
        : euler_base(euler), degree(d), profiles(std::move(prof)) {
        validate();
    }

    void validate() const {
        if (degree < 1) throw std::invalid_argument("CoveringSpec: degree must be positive");
        if (euler_base > 2) throw std::invalid_argument("CoveringSpec: base Euler characteristic > 2");
        for (const auto& p : profiles)
            if (p.weight() != degree)
                throw std::invalid_argument("CoveringSpec: profile weight differs from degree");
    }

    friend bool operator<(const CoveringSpec& a, const CoveringSpec& b) {
        if (a.euler_base != b.euler_base) return a.euler_base < b.euler_base;
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.profiles < b.profiles;
    }
};

/// Frobenius-type character formula:
///   H^{E,k}(d; Delta^1..Delta^k) = sum_lambda (dim lambda/d!)^E prod_i phi_lambda(Delta^i).
inline HurwitzValue hurwitz_frobenius(const CoveringSpec& spec) {
    spec.validate();
    int d = spec.degree;
    Rational total = 0;
    Rational d_fact(factorial(d));
    for (const Partition& lambda : enumerate_partitions(d)) {
        Rational term = rational_pow(Rational(dimension(lambda)) / d_fact, spec.euler_base);
        for (const Partition& delta : spec.profiles) {
            if (term == 0) break;
            term *= phi(lambda, delta);
        }
        total += term;
    }
    return total;
}

/// Riemann-Hurwitz: Euler characteristic of the cover,
///   E' = d E + sum_i (l(Delta^i) - d).
inline int riemann_hurwitz_euler(int euler_base, int degree,
                                 const std::vector<Partition>& profiles) {
    int e = degree * euler_base;
    for (const auto& p : profiles) e += p.length() - degree;
    return e;
}

/// S^{E'}_E(lambda): sum of H^{E,n+E}(d; lambda, Delta^1..Delta^{n+E-1}) over
/// profile tuples whose lengths add up to -l(lambda) + n d + E'. E = 2 - 2g.
inline Rational corollary_sum(const Partition& lambda, int n, int g, int euler_cover) {
    int d = lambda.weight();
    if (d < 1) throw std::invalid_argument("corollary_sum: |lambda| must be >= 1");
    int euler_base = 2 - 2 * g;
    int slots = n + euler_base - 1;
    if (slots < 0) return Rational(0);
    long long target = -lambda.length() + static_cast<long long>(n) * d + euler_cover;
    if (slots == 0) {
        if (target != 0) return Rational(0);
        return hurwitz_frobenius(CoveringSpec(euler_base, d, {lambda}));
    }
    std::vector<Partition> all = enumerate_partitions(d);
    Rational total = 0;
    std::vector<Partition> tuple(static_cast<std::size_t>(slots), Partition{});
    auto rec = [&](auto&& self, int slot, long long length_so_far) -> void {
        if (slot == slots) {
            if (length_so_far != target) return;
            std::vector<Partition> profiles;
            profiles.reserve(static_cast<std::size_t>(slots) + 1);
            profiles.push_back(lambda);
            profiles.insert(profiles.end(), tuple.begin(), tuple.end());
            total += hurwitz_frobenius(CoveringSpec(euler_base, d, std::move(profiles)));
            return;
        }
        for (const Partition& p : all) {
            long long next = length_so_far + p.length();
            if (next > target) continue;  // lengths only grow
            tuple[static_cast<std::size_t>(slot)] = p;
            self(self, slot + 1, next);
        }
    };
    rec(rec, 0, 0);
    return total;
}

/// Disconnected generating series assembled from the Frobenius formula:
/// arity branch points over a base of the given Euler characteristic, Euler
/// grade = sum of profile lengths (Riemann-Hurwitz with the other terms
/// cancelling at F = arity, E = euler_base only when arity + ... matches; the
/// grade stored is E' = d*euler_base + sum(l - d)).
inline GradedSeries disconnected_series_from_frobenius(int euler_base, int arity,
                                                       int degree_bound) {
    GradedSeries s = GradedSeries::one(arity, degree_bound);
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Partition> all = enumerate_partitions(d);
        std::vector<Partition> tuple(static_cast<std::size_t>(arity), Partition{});
        auto rec = [&](auto&& self, int slot) -> void {
            if (slot == arity) {
                Rational h = hurwitz_frobenius(CoveringSpec(euler_base, d, tuple));
                if (h != 0)
                    s.add_term(SeriesKey{riemann_hurwitz_euler(euler_base, d, tuple), tuple}, h);
                return;
            }
            for (const Partition& p : all) {
                tuple[static_cast<std::size_t>(slot)] = p;
                self(self, slot + 1);
            }
        };
        rec(rec, 0);
    }
    return s;
}

/// Connected Hurwitz numbers extracted by the formal logarithm of a
/// disconnected series. Returns the full map for every degree <= d.
inline std::map<CoveringSpec, Rational> connected_hurwitz(const GradedSeries& disconnected,
                                                          int d, int euler_base) {
    if (disconnected.degree_bound() < d)
        throw std::invalid_argument("connected_hurwitz: series truncated below requested degree");
    GradedSeries f = disconnected.log();
    std::map<CoveringSpec, Rational> out;
    for (const auto& [key, c] : f.terms()) {
        int deg = 0;
        for (const auto& p : key.profiles) {
            if (p.weight() != key.profiles.front().weight())
                throw std::logic_error("connected_hurwitz: mixed-degree monomial");
            deg = p.weight();
        }
        if (deg == 0 || deg > d) continue;
        out.emplace(CoveringSpec(euler_base, deg, key.profiles), c);
    }
    return out;
}

}  // namespace hwl
