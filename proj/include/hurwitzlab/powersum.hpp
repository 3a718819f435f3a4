#pragma once

#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/rational.hpp"

#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace hwl {

/// Graded polynomial in the power sums p_1, p_2, ... with exact rational
/// coefficients. Monomials p_Delta are keyed by the partition Delta; terms
/// above the degree bound are dropped by every operation.
class PowerSumPolynomial {
public:
    explicit PowerSumPolynomial(int degree_bound) : bound_(degree_bound) {
        if (degree_bound < 0) throw std::invalid_argument("PowerSumPolynomial: negative bound");
    }

    static PowerSumPolynomial zero(int bound) { return PowerSumPolynomial(bound); }

    static PowerSumPolynomial constant(const Rational& c, int bound) {
        PowerSumPolynomial p(bound);
        p.add_term(Partition{}, c);
        return p;
    }

    static PowerSumPolynomial monomial(const Partition& delta, const Rational& c, int bound) {
        PowerSumPolynomial p(bound);
        p.add_term(delta, c);
        return p;
    }

    int degree_bound() const { return bound_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Partition& delta) const {
        auto it = terms_.find(delta);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& delta, const Rational& c) {
        if (c == 0 || delta.weight() > bound_) return;
        auto [it, inserted] = terms_.emplace(delta, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PowerSumPolynomial& operator+=(const PowerSumPolynomial& o) {
        for (const auto& [delta, c] : o.terms_) add_term(delta, c);
        return *this;
    }

    PowerSumPolynomial& operator-=(const PowerSumPolynomial& o) {
        for (const auto& [delta, c] : o.terms_) add_term(delta, -c);
        return *this;
    }

    friend PowerSumPolynomial operator+(PowerSumPolynomial a, const PowerSumPolynomial& b) {
        return a += b;
    }

    friend PowerSumPolynomial operator-(PowerSumPolynomial a, const PowerSumPolynomial& b) {
        return a -= b;
    }

    PowerSumPolynomial operator*(const PowerSumPolynomial& o) const {
        PowerSumPolynomial out(bound_);
        for (const auto& [da, ca] : terms_) {
            for (const auto& [db, cb] : o.terms_) {
                if (da.weight() + db.weight() > bound_) continue;
                out.add_term(merge(da, db), ca * cb);
            }
        }
        return out;
    }

    PowerSumPolynomial operator*(const Rational& c) const {
        PowerSumPolynomial out(bound_);
        if (c == 0) return out;
        for (const auto& [delta, coeff] : terms_) out.terms_.emplace(delta, coeff * c);
        return out;
    }

    /// Multiply by a single power sum p_m.
    PowerSumPolynomial times_p(int m) const {
        PowerSumPolynomial out(bound_);
        for (const auto& [delta, c] : terms_) {
            if (delta.weight() + m > bound_) continue;
            std::vector<int> parts = delta.parts();
            parts.push_back(m);
            out.add_term(Partition(std::move(parts)), c);
        }
        return out;
    }

    /// Flip p_m -> -p_m: each monomial picks up (-1)^{length}.
    PowerSumPolynomial negate_variables() const {
        PowerSumPolynomial out(bound_);
        for (const auto& [delta, c] : terms_)
            out.terms_.emplace(delta, delta.length() % 2 == 0 ? c : -c);
        return out;
    }

    /// Evaluate at numeric power sums; values[m-1] is the value of p_m.
    std::complex<double> evaluate(std::span<const std::complex<double>> values) const {
        std::complex<double> total = 0.0;
        for (const auto& [delta, c] : terms_) {
            std::complex<double> term = rational_to_double(c);
            for (int part : delta.parts()) {
                if (part > static_cast<int>(values.size()))
                    throw std::invalid_argument("PowerSumPolynomial::evaluate: missing p_m value");
                term *= values[static_cast<std::size_t>(part - 1)];
            }
            total += term;
        }
        return total;
    }

    /// Exact evaluation at rational power-sum values.
    Rational evaluate_rational(std::span<const Rational> values) const {
        Rational total = 0;
        for (const auto& [delta, c] : terms_) {
            Rational term = c;
            for (int part : delta.parts()) {
                if (part > static_cast<int>(values.size()))
                    throw std::invalid_argument("PowerSumPolynomial::evaluate_rational: missing p_m value");
                term *= values[static_cast<std::size_t>(part - 1)];
            }
            total += term;
        }
        return total;
    }

    /// Exact evaluation at p = p_infinity = (1, 0, 0, ...): only the
    /// monomials with all parts equal to 1 survive.
    Rational evaluate_at_p_infinity() const {
        Rational total = 0;
        for (const auto& [delta, c] : terms_)
            if (delta.empty() || delta.part(0) == 1) total += c;
        return total;
    }

    bool operator==(const PowerSumPolynomial& o) const { return terms_ == o.terms_; }

private:
    static Partition merge(const Partition& a, const Partition& b) {
        std::vector<int> parts = a.parts();
        parts.insert(parts.end(), b.parts().begin(), b.parts().end());
        return Partition(std::move(parts));
    }

    int bound_;
    std::map<Partition, Rational> terms_;
};

}  // namespace hwl
