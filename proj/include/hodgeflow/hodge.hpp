/**
 * Metric-weighted Hodge Laplacians and the orthogonal decomposition of edge
 * flows into gradient, curl and harmonic components.
 *
 * With inner product <u, v> = u^T M1 v on edges and identity inner products
 * on vertices and faces, the adjoints of d0 = B1^T and d1 = B2^T are
 * d0* = B1 M1 and d1* = M1^{-1} B2. The gradient space is im(B1^T), the curl
 * space is im(M1^{-1} B2), and the two are M1-orthogonal because B1 B2 = 0.
 * The harmonic residual h satisfies B1 M1 h = 0 and B2^T h = 0.
 *
 * The literal normal equations published for the weighted projections
 * (M1^{-1} inside both solves, curl component B2 psi) do not produce mutually
 * orthogonal components under any single inner product; they remain available
 * as ProjectionConvention::PaperLiteral for comparison runs, and reports can
 * measure the resulting non-orthogonality.
 */

#ifndef HODGEFLOW_HODGE_HPP
#define HODGEFLOW_HODGE_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgeflow/cochain.hpp"
#include "hodgeflow/complex.hpp"

namespace hodgeflow {

inline constexpr double kDefaultRankTol = 1e-10;

enum class ProjectionConvention {
    Consistent,    // single M1 inner product, mutually orthogonal components
    PaperLiteral,  // published normal equations, kept for comparison runs
};

struct Laplacians {
    Eigen::MatrixXd L0;  // B1 M1 B1^T
    Eigen::MatrixXd L1;  // B1^T B1 M1 + M1^{-1} B2 B2^T (self-adjoint under M1)
    Eigen::MatrixXd L2;  // B2^T M1^{-1} B2
};

struct HodgeDecomposition {
    Cochain phi;     // node potential (0-cochain)
    Cochain psi;     // face potential (2-cochain)
    Cochain f_grad;  // B1^T phi
    Cochain f_curl;  // M1^{-1} B2 psi (Consistent) or B2 psi (PaperLiteral)
    Cochain f_harm;  // residual
    double energy_grad = 0.0;  // ||f_grad||^2_{M1}
    double energy_curl = 0.0;
    double energy_harm = 0.0;
};

struct BettiNumbers {
    int beta0 = 0;
    int beta1 = 0;
    int beta2 = 0;

    bool operator==(const BettiNumbers&) const = default;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    double gap = 0.0;                 // smallest eigenvalue above the kernel tolerance
    int kernel_dim = 0;
};

namespace detail {

/// Minimum-norm least-squares solve via SVD with a relative rank threshold.
inline Eigen::VectorXd minimum_norm_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                          double rank_tol) {
    if (A.rows() == 0 || A.cols() == 0)
        return Eigen::VectorXd::Zero(A.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(rank_tol);
    return svd.solve(b);
}

inline Eigen::Index numerical_rank(const Eigen::MatrixXd& A, double rank_tol) {
    if (A.rows() == 0 || A.cols() == 0)
        return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    svd.setThreshold(rank_tol);
    return svd.rank();
}

}  // namespace detail

/// Weighted Hodge Laplacians under the consistent M1 convention.
inline Laplacians laplacians(const IncidenceMatrices& B, const EdgeMetric& M1) {
    const Eigen::Index m = B.B1.cols();
    if (M1.size() != m)
        throw std::invalid_argument("laplacians: metric has " + std::to_string(M1.size()) +
                                    " weights for " + std::to_string(m) + " edges");
    const Eigen::MatrixXd B1 = B.B1d();
    const Eigen::MatrixXd B2 = B.B2d();
    const Eigen::VectorXd& w = M1.weights();
    const Eigen::VectorXd winv = M1.inverse_weights();

    Laplacians L;
    L.L0 = B1 * w.asDiagonal() * B1.transpose();
    L.L1 = B1.transpose() * B1 * w.asDiagonal() +
           winv.asDiagonal() * (B2 * B2.transpose());
    L.L2 = B2.transpose() * winv.asDiagonal() * B2;
    return L;
}

/**
 * Decompose a 1-cochain into gradient, curl and harmonic components.
 *
 * phi is the minimum-norm solution of B1 M1 B1^T phi = B1 M1 f and psi the
 * minimum-norm solution of B2^T M1^{-1} B2 psi = B2^T f; the harmonic part is
 * the reconstruction residual. Complexes without faces skip the curl solve.
 */
inline HodgeDecomposition hodge_decompose(
    const Cochain& f, const IncidenceMatrices& B, const EdgeMetric& M1,
    ProjectionConvention convention = ProjectionConvention::Consistent,
    double rank_tol = kDefaultRankTol) {
    const Eigen::Index m = B.B1.cols();
    const Eigen::Index nf = B.B2.cols();

    if (f.dimension != 1)
        throw std::invalid_argument("hodge_decompose expects a 1-cochain, got dimension " +
                                    std::to_string(f.dimension));
    if (f.size() != m)
        throw std::invalid_argument("hodge_decompose: flow has " + std::to_string(f.size()) +
                                    " values for " + std::to_string(m) + " edges");
    if (M1.size() != m)
        throw std::invalid_argument("hodge_decompose: metric has " + std::to_string(M1.size()) +
                                    " weights for " + std::to_string(m) + " edges");
    if (!f.all_finite())
        throw std::invalid_argument("hodge_decompose: flow contains non-finite values");

    const Eigen::MatrixXd B1 = B.B1d();
    const Eigen::MatrixXd B2 = B.B2d();
    const Eigen::VectorXd& w = M1.weights();
    const Eigen::VectorXd winv = M1.inverse_weights();

    HodgeDecomposition dec;

    Eigen::VectorXd phi;
    if (convention == ProjectionConvention::Consistent) {
        const Eigen::MatrixXd A = B1 * w.asDiagonal() * B1.transpose();
        phi = detail::minimum_norm_solve(A, B1 * w.cwiseProduct(f.values), rank_tol);
    } else {
        const Eigen::MatrixXd A = B1 * winv.asDiagonal() * B1.transpose();
        phi = detail::minimum_norm_solve(A, B1 * winv.cwiseProduct(f.values), rank_tol);
    }
    Eigen::VectorXd f_grad = B1.transpose() * phi;

    Eigen::VectorXd psi = Eigen::VectorXd::Zero(nf);
    Eigen::VectorXd f_curl = Eigen::VectorXd::Zero(m);
    if (nf > 0) {
        const Eigen::MatrixXd A = B2.transpose() * winv.asDiagonal() * B2;
        if (convention == ProjectionConvention::Consistent) {
            psi = detail::minimum_norm_solve(A, B2.transpose() * f.values, rank_tol);
            f_curl = winv.cwiseProduct(B2 * psi);
        } else {
            psi = detail::minimum_norm_solve(A, B2.transpose() * winv.cwiseProduct(f.values),
                                             rank_tol);
            f_curl = B2 * psi;
        }
    }

    dec.phi = Cochain(0, std::move(phi));
    dec.psi = Cochain(2, std::move(psi));
    dec.f_harm = Cochain(1, f.values - f_grad - f_curl);
    dec.f_grad = Cochain(1, std::move(f_grad));
    dec.f_curl = Cochain(1, std::move(f_curl));
    dec.energy_grad = M1.norm_sq(dec.f_grad.values);
    dec.energy_curl = M1.norm_sq(dec.f_curl.values);
    dec.energy_harm = M1.norm_sq(dec.f_harm.values);
    return dec;
}

/// Largest pairwise M1-inner product between components, relative to
/// ||f||^2_{M1}. Zero flows report zero.
inline double orthogonality_residual(const HodgeDecomposition& dec, const EdgeMetric& M1) {
    const Eigen::VectorXd f = dec.f_grad.values + dec.f_curl.values + dec.f_harm.values;
    const double scale = M1.norm_sq(f);
    if (scale == 0.0)
        return 0.0;
    const double gc = std::abs(M1.inner(dec.f_grad.values, dec.f_curl.values));
    const double gh = std::abs(M1.inner(dec.f_grad.values, dec.f_harm.values));
    const double ch = std::abs(M1.inner(dec.f_curl.values, dec.f_harm.values));
    return std::max({gc, gh, ch}) / scale;
}

/**
 * Betti numbers as kernel dimensions of the unweighted Laplacians,
 * beta_k = size(L_k) - numerical_rank(L_k). Ranks use singular values at or
 * above rank_tol times the largest. The result is metric-independent, so the
 * computation is pinned to M1 = I.
 */
inline BettiNumbers betti(const IncidenceMatrices& B, double rank_tol = kDefaultRankTol) {
    if (!(rank_tol > 0.0 && rank_tol < 1.0))
        throw std::invalid_argument("betti: rank_tol must lie in (0, 1)");
    const Laplacians L = laplacians(B, EdgeMetric::identity(B.B1.cols()));
    BettiNumbers bn;
    bn.beta0 = static_cast<int>(L.L0.rows() - detail::numerical_rank(L.L0, rank_tol));
    bn.beta1 = static_cast<int>(L.L1.rows() - detail::numerical_rank(L.L1, rank_tol));
    bn.beta2 = static_cast<int>(L.L2.rows() - detail::numerical_rank(L.L2, rank_tol));
    return bn;
}

/// dim ker of a (possibly M1-self-adjoint, hence non-symmetric) operator.
inline int kernel_dimension(const Eigen::MatrixXd& L, double rank_tol = kDefaultRankTol) {
    return static_cast<int>(L.rows() - detail::numerical_rank(L, rank_tol));
}

/**
 * Sorted eigenvalue list and spectral gap of a Laplacian.
 *
 * Accepts symmetric matrices and matrices that are self-adjoint under some
 * metric (real spectrum, e.g. the weighted L1); the latter go through the
 * general eigensolver and must come back with negligible imaginary parts.
 * The gap is the first eigenvalue above rank_tol times the largest magnitude.
 */
inline Spectrum spectrum(const Eigen::MatrixXd& L, double rank_tol = kDefaultRankTol) {
    if (L.rows() != L.cols())
        throw std::invalid_argument("spectrum: matrix is not square (" +
                                    std::to_string(L.rows()) + "x" + std::to_string(L.cols()) +
                                    ")");
    Spectrum s;
    if (L.rows() == 0)
        return s;

    const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
    const bool symmetric = (L - L.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
    Eigen::VectorXd evals;
    if (symmetric) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("spectrum: eigensolver failed to converge");
        evals = solver.eigenvalues();
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> solver(L);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("spectrum: eigensolver failed to converge");
        const Eigen::VectorXcd ev = solver.eigenvalues();
        if (ev.imag().cwiseAbs().maxCoeff() > 1e-8 * scale)
            throw std::invalid_argument("spectrum: matrix has a genuinely complex spectrum; "
                                        "expected a symmetric or self-adjoint operator");
        evals = ev.real();
        std::sort(evals.begin(), evals.end());
    }

    s.eigenvalues.assign(evals.begin(), evals.end());
    const double max_mag = std::max(std::abs(evals(0)), std::abs(evals(evals.size() - 1)));
    const double kernel_tol = rank_tol * max_mag;
    for (double ev : s.eigenvalues) {
        if (ev > kernel_tol) {
            s.gap = ev;
            break;
        }
        ++s.kernel_dim;
    }
    return s;
}

}  // namespace hodgeflow

#endif  // HODGEFLOW_HODGE_HPP
