#pragma once

#include "hurwitzlab/matrixfn.hpp"
#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/rng.hpp"
#include "hurwitzlab/schur.hpp"

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hwl {

/// One Monte Carlo experiment over a chain of independent complex Ginibre
/// matrices: X = (Z_1 C_1)...(Z_n C_n), Y_t = Z+_n...Z+_{t+1} Z+_1...Z+_t.
/// An empty insertion vector stands for the identity.
struct GinibreChainConfig {
    int n = 1;
    int N = 2;
    int t = 0;
    std::vector<std::vector<double>> insertions;  // n diagonals, or empty
    std::uint64_t seed = 1;
    long long samples = 100000;

    void validate() const {
        if (n < 1) throw std::invalid_argument("GinibreChainConfig: n must be >= 1");
        if (N < 1) throw std::invalid_argument("GinibreChainConfig: N must be >= 1");
        if (t < 0 || t >= n) throw std::invalid_argument("GinibreChainConfig: need 0 <= t < n");
        if (samples < 1) throw std::invalid_argument("GinibreChainConfig: samples must be >= 1");
        if (!insertions.empty()) {
            if (static_cast<int>(insertions.size()) != n)
                throw std::invalid_argument("GinibreChainConfig: need one insertion per factor");
            for (const auto& c : insertions)
                if (!c.empty() && static_cast<int>(c.size()) != N)
                    throw std::invalid_argument("GinibreChainConfig: insertion size differs from N");
        }
    }

    bool identity_insertions() const {
        for (const auto& c : insertions)
            if (!c.empty())
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (c[i] != 1.0) return false;
        return true;
    }

    std::vector<double> insertion_diag(int index) const {
        if (insertions.empty() || insertions[static_cast<std::size_t>(index)].empty())
            return std::vector<double>(static_cast<std::size_t>(N), 1.0);
        return insertions[static_cast<std::size_t>(index)];
    }
};

struct McEstimate {
    std::complex<double> mean{0.0, 0.0};
    double std_error = 0.0;
    long long samples = 0;
};

namespace detail {

struct WelfordAccumulator {
    long long count = 0;
    std::complex<double> mean{0.0, 0.0};
    double m2 = 0.0;

    void add(std::complex<double> x) {
        ++count;
        std::complex<double> delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += (std::conj(delta) * (x - mean)).real();
    }

    /// Chan's pairwise merge; applied in fixed block order for determinism.
    void merge(const WelfordAccumulator& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        std::complex<double> delta = o.mean - mean;
        long long total = count + o.count;
        mean += delta * (static_cast<double>(o.count) / static_cast<double>(total));
        m2 += o.m2 + std::norm(delta) * static_cast<double>(count) * static_cast<double>(o.count) /
                         static_cast<double>(total);
        count = total;
    }

    McEstimate estimate() const {
        McEstimate e;
        e.mean = mean;
        e.samples = count;
        e.std_error = count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1) /
                                            static_cast<double>(count))
                                : 0.0;
        return e;
    }
};

inline int worker_count() {
    if (const char* env = std::getenv("HURWITZ_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

inline constexpr long long kSamplesPerBlock = 8192;

}  // namespace detail

/// One draw of (X, Y_t). Matrices are consumed in a fixed order so a block's
/// substream fully determines its samples.
inline std::pair<Matrix, Matrix> sample_chain(const GinibreChainConfig& cfg, SubstreamRng& rng) {
    const int n = cfg.n, N = cfg.N;
    std::vector<Matrix> z(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        Matrix m(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = rng.complex_gaussian();
        z[static_cast<std::size_t>(a)] = std::move(m);
    }

    Matrix x = Matrix::Identity(N, N);
    for (int a = 0; a < n; ++a) {
        Matrix zc = z[static_cast<std::size_t>(a)];
        std::vector<double> diag = cfg.insertion_diag(a);
        for (int j = 0; j < N; ++j) zc.col(j) *= diag[static_cast<std::size_t>(j)];
        x = x * zc;
    }

    // Y_t = Z+_n ... Z+_{t+1} Z+_1 ... Z+_t; t = 0 is the empty-suffix case.
    Matrix y = Matrix::Identity(N, N);
    for (int a = n; a > cfg.t; --a) y = y * z[static_cast<std::size_t>(a - 1)].adjoint();
    for (int a = 1; a <= cfg.t; ++a) y = y * z[static_cast<std::size_t>(a - 1)].adjoint();
    return {std::move(x), std::move(y)};
}

/// Runs the estimand over sample blocks with per-block RNG substreams; the
/// merged estimate is independent of the worker count and bit-identical for
/// a fixed (config, estimand).
template <typename Estimand>
McEstimate run_monte_carlo(const GinibreChainConfig& cfg, Estimand&& estimand) {
    cfg.validate();
    const long long blocks =
        (cfg.samples + detail::kSamplesPerBlock - 1) / detail::kSamplesPerBlock;
    std::vector<detail::WelfordAccumulator> acc(static_cast<std::size_t>(blocks));

    auto run_block = [&](long long b) {
        long long begin = b * detail::kSamplesPerBlock;
        long long end = std::min(cfg.samples, begin + detail::kSamplesPerBlock);
        SubstreamRng rng(cfg.seed, static_cast<std::uint64_t>(b));
        detail::WelfordAccumulator w;
        for (long long s = begin; s < end; ++s) {
            auto [x, y] = sample_chain(cfg, rng);
            w.add(estimand(x, y));
        }
        acc[static_cast<std::size_t>(b)] = w;
    };

    int workers = std::min<long long>(detail::worker_count(), blocks);
    if (workers <= 1) {
        for (long long b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<long long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (long long b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) run_block(b);
            });
        for (auto& th : pool) th.join();
    }

    detail::WelfordAccumulator total;
    for (const auto& w : acc) total.merge(w);
    return total.estimate();
}

/// E(P_lambda(X Y_t)). The Hurwitz interpretation needs |lambda| <= N; larger
/// weights still estimate, callers surface the warning.
inline McEstimate estimate_moment_product(const GinibreChainConfig& cfg, const Partition& lambda) {
    return run_monte_carlo(cfg, [&lambda](const Matrix& x, const Matrix& y) {
        return spectral_invariant(lambda, x * y);
    });
}

/// E(P_lambda(X) P_mu(Y_t)).
inline McEstimate estimate_moment_pair(const GinibreChainConfig& cfg, const Partition& lambda,
                                       const Partition& mu) {
    return run_monte_carlo(cfg, [&lambda, &mu](const Matrix& x, const Matrix& y) {
        return spectral_invariant(lambda, x) * spectral_invariant(mu, y);
    });
}

/// E(P_lambda(X) tau^BKP slice), where the slice is sum_{mu |- d, l(mu)<=N}
/// s_mu(Y_t): the only part of the tau series with nonvanishing pairing
/// against a degree-d observable, and the full series diverges on unbounded
/// spectra.
inline McEstimate estimate_moment_bkp(const GinibreChainConfig& cfg, const Partition& lambda) {
    int d = lambda.weight();
    std::vector<PowerSumPolynomial> slice;
    for (const Partition& mu : enumerate_partitions(d))
        if (mu.length() <= cfg.N) slice.push_back(schur_in_powersums(mu, d));
    return run_monte_carlo(cfg, [&lambda, &slice, d](const Matrix& x, const Matrix& y) {
        auto p = power_sum_profile(y, d);
        std::complex<double> tau_slice = 0.0;
        for (const auto& poly : slice) tau_slice += poly.evaluate(p);
        return spectral_invariant(lambda, x) * tau_slice;
    });
}

/// Monte Carlo side of the Gaussian Schur integral
/// int s_lambda(A Z B Z+) dmu(Z): one Ginibre factor, A and B normal.
inline McEstimate lemma_mc_one(const Matrix& a, const Matrix& b, const Partition& lambda,
                               long long samples, std::uint64_t seed) {
    GinibreChainConfig cfg;
    cfg.n = 1;
    cfg.N = static_cast<int>(a.rows());
    cfg.t = 0;
    cfg.samples = samples;
    cfg.seed = seed;
    return run_monte_carlo(cfg, [&](const Matrix& x, const Matrix&) {
        // x is Z itself here (identity insertions).
        return schur_of_matrix(lambda, a * x * b * x.adjoint());
    });
}

/// Monte Carlo side of int s_mu(A Z) s_lambda(Z+ B) dmu(Z).
inline McEstimate lemma_mc_two(const Matrix& a, const Matrix& b, const Partition& lambda,
                               const Partition& mu, long long samples, std::uint64_t seed) {
    GinibreChainConfig cfg;
    cfg.n = 1;
    cfg.N = static_cast<int>(a.rows());
    cfg.t = 0;
    cfg.samples = samples;
    cfg.seed = seed;
    return run_monte_carlo(cfg, [&](const Matrix& x, const Matrix&) {
        return schur_of_matrix(mu, a * x) * schur_of_matrix(lambda, x.adjoint() * b);
    });
}

/// Exact reference s_lambda(A) s_lambda(B) / s_lambda(p_infinity).
inline std::complex<double> lemma_reference_one(const Matrix& a, const Matrix& b,
                                                const Partition& lambda) {
    Rational s_inf = schur_at_p_infinity(lambda);
    return schur_of_matrix(lambda, a) * schur_of_matrix(lambda, b) / rational_to_double(s_inf);
}

/// Exact reference delta_{mu,lambda} s_lambda(A B) / s_lambda(p_infinity).
inline std::complex<double> lemma_reference_two(const Matrix& a, const Matrix& b,
                                                const Partition& lambda, const Partition& mu) {
    if (!(lambda == mu)) return 0.0;
    Rational s_inf = schur_at_p_infinity(lambda);
    return schur_of_matrix(lambda, a * b) / rational_to_double(s_inf);
}

}  // namespace hwl
