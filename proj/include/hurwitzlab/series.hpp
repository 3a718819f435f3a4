#pragma once

#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwl {

/// Monomial key of a graded generating series: one power-sum monomial per
/// alphabet plus the integer Euler grade standing in for the paper-style
/// h^{-E'} marker.
struct SeriesKey {
    int euler = 0;
    std::vector<Partition> profiles;  // size = series arity

    int degree() const {
        int d = 0;
        for (const auto& p : profiles) d = std::max(d, p.weight());
        return d;
    }

    friend bool operator<(const SeriesKey& a, const SeriesKey& b) {
        if (a.euler != b.euler) return a.euler < b.euler;
        return a.profiles < b.profiles;
    }
    friend bool operator==(const SeriesKey& a, const SeriesKey& b) {
        return a.euler == b.euler && a.profiles == b.profiles;
    }
};

/// Truncated formal series in one or two power-sum alphabets with an additive
/// Euler grade. Multiplication merges monomials partition-wise, so exp/log
/// implement the disconnected <-> connected transform.
class GradedSeries {
public:
    GradedSeries(int arity, int degree_bound) : arity_(arity), bound_(degree_bound) {
        if (arity < 1) throw std::invalid_argument("GradedSeries: arity must be >= 1");
        if (degree_bound < 0) throw std::invalid_argument("GradedSeries: negative degree bound");
    }

    static GradedSeries one(int arity, int bound) {
        GradedSeries s(arity, bound);
        s.add_term(SeriesKey{0, std::vector<Partition>(static_cast<std::size_t>(arity))}, 1);
        return s;
    }

    int arity() const { return arity_; }
    int degree_bound() const { return bound_; }
    const std::map<SeriesKey, Rational>& terms() const { return terms_; }

    Rational coefficient(const SeriesKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Coefficient of the monomial regardless of grade storage: grade is a
    /// function of the monomial in every series built here, so this sums the
    /// (at most one) matching slice.
    Rational coefficient(const std::vector<Partition>& profiles) const {
        Rational total = 0;
        for (const auto& [key, c] : terms_)
            if (key.profiles == profiles) total += c;
        return total;
    }

    void add_term(const SeriesKey& key, const Rational& c) {
        if (c == 0) return;
        if (static_cast<int>(key.profiles.size()) != arity_)
            throw std::invalid_argument("GradedSeries: arity mismatch");
        if (key.degree() > bound_) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GradedSeries& operator+=(const GradedSeries& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    GradedSeries operator*(const GradedSeries& o) const {
        GradedSeries out(arity_, bound_);
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) {
                SeriesKey key;
                key.euler = ka.euler + kb.euler;
                key.profiles.reserve(static_cast<std::size_t>(arity_));
                bool keep = true;
                for (int a = 0; a < arity_; ++a) {
                    std::vector<int> parts = ka.profiles[static_cast<std::size_t>(a)].parts();
                    const auto& more = kb.profiles[static_cast<std::size_t>(a)].parts();
                    parts.insert(parts.end(), more.begin(), more.end());
                    Partition merged(std::move(parts));
                    if (merged.weight() > bound_) { keep = false; break; }
                    key.profiles.push_back(std::move(merged));
                }
                if (keep) out.add_term(key, ca * cb);
            }
        }
        return out;
    }

    GradedSeries operator*(const Rational& c) const {
        GradedSeries out(arity_, bound_);
        if (c == 0) return out;
        for (const auto& [k, coeff] : terms_) out.terms_.emplace(k, coeff * c);
        return out;
    }

    bool has_constant_term() const {
        return terms_.contains(SeriesKey{0, std::vector<Partition>(static_cast<std::size_t>(arity_))});
    }

    /// exp of a series with no constant term.
    GradedSeries exp() const {
        if (has_constant_term())
            throw std::invalid_argument("GradedSeries::exp: nonzero constant term");
        GradedSeries out = one(arity_, bound_);
        GradedSeries power = one(arity_, bound_);
        Rational inv_factorial = 1;
        for (int k = 1; k <= bound_; ++k) {
            power = power * (*this);
            if (power.terms_.empty()) break;
            inv_factorial /= k;
            out += power * inv_factorial;
        }
        return out;
    }

    /// log of a series with constant term 1.
    GradedSeries log() const {
        SeriesKey unit{0, std::vector<Partition>(static_cast<std::size_t>(arity_))};
        if (coefficient(unit) != 1)
            throw std::invalid_argument("GradedSeries::log: constant term must be 1");
        GradedSeries g = *this;
        g.terms_.erase(unit);
        GradedSeries out(arity_, bound_);
        GradedSeries power = one(arity_, bound_);
        for (int k = 1; k <= bound_; ++k) {
            power = power * g;
            if (power.terms_.empty()) break;
            Rational c = Rational(k % 2 == 1 ? 1 : -1, k);
            out += power * c;
        }
        return out;
    }

private:
    int arity_;
    int bound_;
    std::map<SeriesKey, Rational> terms_;
};

/// tau^2KP: exp(sum_{d<=D} p_d^(1) p_d^(2) / d) with Euler grade
/// l(Delta^1)+l(Delta^2) per monomial. Coefficients are the two-branch-point
/// sphere Hurwitz numbers H^{2,2}(d; Delta^1, Delta^2).
inline GradedSeries tau_2kp_series(int degree_bound) {
    GradedSeries f(2, degree_bound);
    for (int d = 1; d <= degree_bound; ++d)
        f.add_term(SeriesKey{2, {Partition{d}, Partition{d}}}, Rational(1, d));
    return f.exp();
}

/// tau^BKP: exp(sum_m p_m^2/(2m) + sum_{m odd} p_m/m); the quadratic term
/// carries grade 2, the odd linear term grade 1. Coefficient of p_Delta at
/// grade l(Delta) is the single-branch-point RP^2 Hurwitz number.
inline GradedSeries tau_bkp_series(int degree_bound) {
    GradedSeries f(1, degree_bound);
    for (int m = 1; 2 * m <= degree_bound; ++m)
        f.add_term(SeriesKey{2, {Partition{m, m}}}, Rational(1, 2 * m));
    for (int m = 1; m <= degree_bound; m += 2)
        f.add_term(SeriesKey{1, {Partition{m}}}, Rational(1, m));
    return f.exp();
}

/// Dump key "d:E':[...]" or "d:E':[...]|[...]" used by the series JSON format.
inline std::string series_key_text(const SeriesKey& key) {
    std::string s = std::to_string(key.degree()) + ":" + std::to_string(key.euler) + ":";
    for (std::size_t a = 0; a < key.profiles.size(); ++a) {
        if (a) s += "|";
        s += to_string(key.profiles[a]);
    }
    return s;
}

}  // namespace hwl
