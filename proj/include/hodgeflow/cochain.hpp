/**
 * Cochains and edge metrics.
 *
 * A k-cochain is a real-valued function on the k-cells of a complex; observed
 * inter-function flows are 1-cochains. An EdgeMetric is the positive diagonal
 * mass matrix M1 defining the inner product on edge cochains.
 */

#ifndef HODGEFLOW_COCHAIN_HPP
#define HODGEFLOW_COCHAIN_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hodgeflow {

struct Cochain {
    int dimension = 1;  // 0 = vertices, 1 = edges, 2 = faces
    Eigen::VectorXd values;

    Cochain() = default;
    Cochain(int k, Eigen::VectorXd v) : dimension(k), values(std::move(v)) {
        if (k < 0 || k > 2)
            throw std::invalid_argument("cochain dimension must be 0, 1 or 2");
    }

    static Cochain zero(int k, Eigen::Index cells) {
        return Cochain(k, Eigen::VectorXd::Zero(cells));
    }

    Eigen::Index size() const { return values.size(); }
    double operator[](Eigen::Index i) const { return values(i); }

    bool all_finite() const { return values.allFinite(); }
};

/// Diagonal edge mass matrix M1 = diag(m_e), m_e > 0.
class EdgeMetric {
public:
    EdgeMetric() = default;

    explicit EdgeMetric(Eigen::VectorXd weights) : weights_(std::move(weights)) {
        for (Eigen::Index i = 0; i < weights_.size(); ++i) {
            if (!std::isfinite(weights_(i)) || weights_(i) <= 0.0)
                throw std::invalid_argument("edge metric weight " + std::to_string(i) +
                                            " is not strictly positive");
        }
    }

    static EdgeMetric identity(Eigen::Index edges) {
        return EdgeMetric(Eigen::VectorXd::Ones(edges));
    }

    static EdgeMetric uniform(Eigen::Index edges, double value) {
        return EdgeMetric(Eigen::VectorXd::Constant(edges, value));
    }

    Eigen::Index size() const { return weights_.size(); }
    const Eigen::VectorXd& weights() const { return weights_; }
    double operator[](Eigen::Index e) const { return weights_(e); }

    Eigen::VectorXd inverse_weights() const { return weights_.cwiseInverse(); }

    /// <u, v> = u^T M1 v
    double inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
        check_size(u.size());
        check_size(v.size());
        return u.dot(weights_.cwiseProduct(v));
    }

    /// ||u||^2_{M1}
    double norm_sq(const Eigen::VectorXd& u) const { return inner(u, u); }

private:
    Eigen::VectorXd weights_;

    void check_size(Eigen::Index n) const {
        if (n != weights_.size())
            throw std::invalid_argument("edge metric dimension mismatch: metric has " +
                                        std::to_string(weights_.size()) + " weights, vector has " +
                                        std::to_string(n));
    }
};

}  // namespace hodgeflow

#endif  // HODGEFLOW_COCHAIN_HPP
