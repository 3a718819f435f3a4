#pragma once

#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/schur.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <stdexcept>
#include <vector>

namespace hwl {

using Matrix = Eigen::MatrixXcd;

/// p_m(X) = tr X^m, by repeated multiplication (no eigendecomposition).
inline std::complex<double> power_sum_of_matrix(int m, const Matrix& x) {
    if (m < 1) throw std::invalid_argument("power_sum_of_matrix: m must be >= 1");
    if (x.rows() != x.cols()) throw std::invalid_argument("power_sum_of_matrix: non-square input");
    Matrix acc = x;
    for (int k = 1; k < m; ++k) acc = acc * x;
    return acc.trace();
}

/// First max_m power-sum traces of X: result[m-1] = tr X^m.
inline std::vector<std::complex<double>> power_sum_profile(const Matrix& x, int max_m) {
    if (x.rows() != x.cols()) throw std::invalid_argument("power_sum_profile: non-square input");
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(max_m));
    Matrix acc = Matrix::Identity(x.rows(), x.cols());
    for (int m = 1; m <= max_m; ++m) {
        acc = acc * x;
        out.push_back(acc.trace());
    }
    return out;
}

/// P_Delta(X) = prod_i p_{delta_i}(X).
inline std::complex<double> spectral_invariant(const Partition& delta, const Matrix& x) {
    if (delta.empty()) return 1.0;
    auto p = power_sum_profile(x, delta.part(0));
    std::complex<double> acc = 1.0;
    for (int part : delta.parts()) acc *= p[static_cast<std::size_t>(part - 1)];
    return acc;
}

/// Schur function of a matrix through its power sums; equals the bialternant
/// in the eigenvalues, and vanishes identically when length(lambda) exceeds
/// the matrix size.
inline std::complex<double> schur_of_matrix(const Partition& lambda, const Matrix& x) {
    if (lambda.empty()) return 1.0;
    auto p = power_sum_profile(x, lambda.weight());
    return schur_in_powersums(lambda, lambda.weight()).evaluate(p);
}

inline double spectral_radius(const Matrix& x) {
    Eigen::ComplexEigenSolver<Matrix> es(x, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

/// Product form of the simplest BKP tau function evaluated on eigenvalues:
/// prod (1-x_i)^{-1} prod_{i<j} (1-x_i x_j)^{-1}.
inline std::complex<double> tau_bkp_eigenvalue_product(const Matrix& x) {
    Eigen::ComplexEigenSolver<Matrix> es(x, false);
    auto ev = es.eigenvalues();
    std::complex<double> acc = 1.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        acc /= (1.0 - ev[i]);
        for (Eigen::Index j = i + 1; j < ev.size(); ++j) acc /= (1.0 - ev[i] * ev[j]);
    }
    return acc;
}

namespace detail {

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace detail

/// det^{1/2}((1+X)/(1-X)) / det^{1/2}(I (x) I - X (x) X), the closed form of
/// the simplest BKP tau function. The square-root branches are fixed by
/// continuity along t X, t in [0,1], from the value 1 at X = 0. Requires
/// spectral radius < 1 - tolerance.
inline std::complex<double> tau_bkp_matrix(const Matrix& x, double tolerance = 1e-6) {
    if (x.rows() != x.cols()) throw std::invalid_argument("tau_bkp_matrix: non-square input");
    if (spectral_radius(x) >= 1.0 - tolerance)
        throw std::domain_error("tau_bkp_matrix: spectral radius too close to 1");

    const Eigen::Index n = x.rows();
    const Matrix eye = Matrix::Identity(n, n);
    const Matrix big_eye = Matrix::Identity(n * n, n * n);

    auto det_pair = [&](double t) {
        Matrix tx = t * x;
        std::complex<double> a = ((eye + tx) * (eye - tx).inverse()).determinant();
        std::complex<double> b = (big_eye - detail::kron(tx, tx)).determinant();
        return std::pair{a, b};
    };

    // Walk t from 0 to 1, keeping each square root on the branch nearest the
    // previous step.
    const int steps = 64;
    std::complex<double> sa = 1.0, sb = 1.0;
    for (int k = 1; k <= steps; ++k) {
        auto [a, b] = det_pair(static_cast<double>(k) / steps);
        std::complex<double> ra = std::sqrt(a);
        std::complex<double> rb = std::sqrt(b);
        sa = (std::abs(ra - sa) <= std::abs(-ra - sa)) ? ra : -ra;
        sb = (std::abs(rb - sb) <= std::abs(-rb - sb)) ? rb : -rb;
    }
    return sa / sb;
}

}  // namespace hwl
