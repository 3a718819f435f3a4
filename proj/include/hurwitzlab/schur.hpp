#pragma once

#include "hurwitzlab/characters.hpp"
#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/powersum.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace hwl {

/// One-row Schur polynomials h_0..h_k in power sums, from the generating
/// relation e^{sum p_m z^m / m} = sum h_i z^i, i.e. k h_k = sum_m p_m h_{k-m}.
inline std::vector<PowerSumPolynomial> complete_homogeneous_basis(int k, int bound) {
    std::vector<PowerSumPolynomial> h;
    h.reserve(static_cast<std::size_t>(k) + 1);
    h.push_back(PowerSumPolynomial::constant(1, bound));
    for (int i = 1; i <= k; ++i) {
        PowerSumPolynomial acc(bound);
        for (int m = 1; m <= i; ++m) acc += h[static_cast<std::size_t>(i - m)].times_p(m);
        h.push_back(acc * Rational(1, i));
    }
    return h;
}

namespace detail {

// Determinant over the polynomial ring by last-row expansion, memoized on the
// surviving column mask.
inline PowerSumPolynomial poly_det(const std::vector<std::vector<const PowerSumPolynomial*>>& m,
                                   int bound) {
    int n = static_cast<int>(m.size());
    std::unordered_map<std::uint32_t, PowerSumPolynomial> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> PowerSumPolynomial {
        int k = std::popcount(mask);
        if (k == 0) return PowerSumPolynomial::constant(1, bound);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        PowerSumPolynomial acc(bound);
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const PowerSumPolynomial* entry = m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
            if (entry && !entry->is_zero()) {
                PowerSumPolynomial sub = self(self, mask & ~(1u << j));
                PowerSumPolynomial term = sub * (*entry);
                if ((k - 1 + pos) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, n == 32 ? ~0u : ((1u << n) - 1u));
}

}  // namespace detail

/// Schur polynomial s_lambda in power sums via the Jacobi-Trudi determinant
/// det[h_{lambda_i - i + j}]. Homogeneous of degree |lambda|.
inline PowerSumPolynomial schur_in_powersums(const Partition& lambda, int bound) {
    if (lambda.weight() > bound)
        throw std::invalid_argument("schur_in_powersums: weight exceeds degree bound");
    int len = lambda.length();
    if (len == 0) return PowerSumPolynomial::constant(1, bound);
    int hmax = lambda.part(0) + len - 1;
    std::vector<PowerSumPolynomial> h = complete_homogeneous_basis(hmax, bound);
    std::vector<std::vector<const PowerSumPolynomial*>> m(
        static_cast<std::size_t>(len), std::vector<const PowerSumPolynomial*>(static_cast<std::size_t>(len), nullptr));
    for (int i = 0; i < len; ++i)
        for (int j = 0; j < len; ++j) {
            int idx = lambda.part(i) - i + j;
            if (idx >= 0) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = &h[static_cast<std::size_t>(idx)];
        }
    return detail::poly_det(m, bound);
}

/// s_lambda through the characteristic map: coefficient of p_Delta is
/// chi_lambda(Delta)/z_Delta. Must agree with the Jacobi-Trudi route.
inline PowerSumPolynomial characteristic_map(const Partition& lambda, int bound) {
    int d = lambda.weight();
    if (d > bound) throw std::invalid_argument("characteristic_map: weight exceeds degree bound");
    PowerSumPolynomial out(bound);
    for (const Partition& delta : enumerate_partitions(d))
        out.add_term(delta, Rational(chi(lambda, delta), z_factor(delta)));
    return out;
}

/// s_lambda(p_infinity) = dim lambda / d!.
inline Rational schur_at_p_infinity(const Partition& lambda) {
    return Rational(dimension(lambda), factorial(lambda.weight()));
}

/// Pochhammer content product (N)_lambda = prod_{(i,j) in lambda} (N + j - i).
inline Int pochhammer(int n, const Partition& lambda) {
    Int acc = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) acc *= Int(n) + j - i;
    return acc;
}

namespace detail {

// In-place LU determinant with partial pivoting; n stays small here.
inline std::complex<double> complex_det(std::vector<std::vector<std::complex<double>>> a) {
    std::size_t n = a.size();
    std::complex<double> det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
        if (a[pivot][c] == std::complex<double>(0.0)) return 0.0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            std::complex<double> f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace detail

/// s_lambda evaluated on eigenvalues by the bialternant ratio
/// det[x_j^{lambda_i - i + N}] / det[x_j^{N - i}]; exactly 0 when
/// length(lambda) > N. Falls back to the power-sum expansion when the
/// Vandermonde denominator nearly vanishes (coinciding eigenvalues).
inline std::complex<double> schur_from_eigenvalues(const Partition& lambda,
                                                   std::span<const std::complex<double>> x) {
    int n = static_cast<int>(x.size());
    if (lambda.length() > n) return 0.0;
    if (n == 0) return lambda.empty() ? 1.0 : 0.0;

    auto alternant = [&](auto exponent_of_row) {
        std::vector<std::vector<std::complex<double>>> m(
            static_cast<std::size_t>(n), std::vector<std::complex<double>>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    std::pow(x[static_cast<std::size_t>(j)], exponent_of_row(i));
        return detail::complex_det(std::move(m));
    };

    std::complex<double> num = alternant([&](int i) {
        int li = i < lambda.length() ? lambda.part(i) : 0;
        return li - i + n - 1;
    });
    std::complex<double> den = alternant([&](int i) { return n - 1 - i; });

    if (std::abs(den) < 1e-8 * std::max(1.0, std::abs(num)) || std::abs(den) < 1e-300) {
        // Removable singularity at coinciding eigenvalues: use the power-sum
        // expansion instead.
        std::vector<std::complex<double>> pvals(static_cast<std::size_t>(std::max(1, lambda.weight())));
        for (int m = 1; m <= static_cast<int>(pvals.size()); ++m) {
            std::complex<double> s = 0.0;
            for (auto xi : x) s += std::pow(xi, m);
            pvals[static_cast<std::size_t>(m - 1)] = s;
        }
        return schur_in_powersums(lambda, std::max(1, lambda.weight())).evaluate(pvals);
    }
    return num / den;
}

/// Checks s_lambda(p) = (-1)^{|lambda|} s_{lambda^tr}(-p) coefficient-wise.
inline bool schur_conjugation_identity_check(const Partition& lambda, int bound) {
    PowerSumPolynomial lhs = schur_in_powersums(lambda, bound);
    PowerSumPolynomial rhs = schur_in_powersums(lambda.conjugate(), bound).negate_variables();
    if (lambda.weight() % 2 != 0) rhs = rhs * Rational(-1);
    return lhs == rhs;
}

}  // namespace hwl
