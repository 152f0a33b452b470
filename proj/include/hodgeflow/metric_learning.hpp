/**
 * Alternating metric learning for harmonic-flow localization.
 *
 * The cost J(M1) = ||h||^2_{M1} + lambda tr(M1) + beta ||M1 - M_ref||^2 is
 * minimized by alternating two steps: decompose the flow under the current
 * metric to get the harmonic component h, then minimize J over the metric
 * with h held fixed. The fixed-h subproblem is convex and separable per edge;
 * its KKT conditions give the clamped closed form
 *
 *     m_e = max(m_min, m_ref_e - (h_e^2 + lambda) / (2 beta)).
 *
 * Iteration stops when the relative Euclidean change of the weight vector
 * drops below epsilon, or after max_iters updates.
 */

#ifndef HODGEFLOW_METRIC_LEARNING_HPP
#define HODGEFLOW_METRIC_LEARNING_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

#include "hodgeflow/cochain.hpp"
#include "hodgeflow/complex.hpp"
#include "hodgeflow/hodge.hpp"

namespace hodgeflow {

struct MetricLearningConfig {
    double lambda = 0.01;  // trace penalty
    double beta = 1.0;     // deviation penalty
    double m_min = 1e-3;   // weight floor
    double epsilon = 1e-6; // relative-change stopping tolerance
    int max_iters = 100;

    // Reference metric M_ref: per-edge weights when set, otherwise uniform
    // m_ref_uniform on every edge.
    Eigen::VectorXd m_ref;
    double m_ref_uniform = 1.0;

    // Recorded in reports for provenance; not used by any computation here.
    double alpha = 1e-3;

    Eigen::VectorXd reference_weights(Eigen::Index edges) const {
        if (m_ref.size() == 0)
            return Eigen::VectorXd::Constant(edges, m_ref_uniform);
        if (m_ref.size() != edges)
            throw std::invalid_argument("metric learning config: m_ref has " +
                                        std::to_string(m_ref.size()) + " weights for " +
                                        std::to_string(edges) + " edges");
        return m_ref;
    }

    void validate(Eigen::Index edges) const {
        if (!(lambda >= 0.0))
            throw std::invalid_argument("metric learning config: lambda must be >= 0");
        if (!(beta > 0.0))
            throw std::invalid_argument("metric learning config: beta must be > 0");
        if (!(m_min > 0.0))
            throw std::invalid_argument("metric learning config: m_min must be > 0");
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("metric learning config: epsilon must lie in (0, 1)");
        if (max_iters < 1)
            throw std::invalid_argument("metric learning config: max_iters must be >= 1");
        const Eigen::VectorXd ref = reference_weights(edges);
        if ((ref.array() < m_min).any())
            throw std::invalid_argument("metric learning config: reference weights below m_min");
    }
};

struct CostTerms {
    double total = 0.0;      // J
    double harmonic = 0.0;   // h^T M1 h
    double trace = 0.0;      // lambda * tr(M1)
    double deviation = 0.0;  // beta * ||M1 - M_ref||^2
};

enum class LearningStatus { Converged, MaxItersReached };

inline const char* to_string(LearningStatus s) {
    return s == LearningStatus::Converged ? "converged" : "max_iters_reached";
}

/// One row of the learning trace. Records 0..k-1 snapshot the state each
/// update step started from; the terminal record holds the final metric and
/// the harmonic component recomputed under it, so downstream reporting can
/// read the converged state straight from the trace.
struct TraceRecord {
    int iteration = 0;
    CostTerms cost;
    Eigen::VectorXd metric;    // weights the decomposition ran under
    Eigen::VectorXd harmonic;  // h under that metric
    double relative_change = 0.0;  // ||m_next - m|| / ||m|| for the step taken
};

struct MetricLearningTrace {
    std::vector<TraceRecord> records;
    LearningStatus status = LearningStatus::MaxItersReached;

    const TraceRecord& final_record() const {
        if (records.empty())
            throw std::logic_error("metric learning trace is empty");
        return records.back();
    }
    int update_count() const { return static_cast<int>(records.size()) - 1; }
};

struct MetricLearningResult {
    EdgeMetric metric;
    MetricLearningTrace trace;
};

/// J and its three terms for a fixed harmonic component and metric.
inline CostTerms cost_functional(const Cochain& h, const EdgeMetric& M1,
                                 const MetricLearningConfig& cfg) {
    if (h.size() != M1.size())
        throw std::invalid_argument("cost_functional: harmonic component has " +
                                    std::to_string(h.size()) + " values for " +
                                    std::to_string(M1.size()) + " weights");
    const Eigen::VectorXd ref = cfg.reference_weights(M1.size());
    CostTerms t;
    t.harmonic = M1.norm_sq(h.values);
    t.trace = cfg.lambda * M1.weights().sum();
    t.deviation = cfg.beta * (M1.weights() - ref).squaredNorm();
    t.total = t.harmonic + t.trace + t.deviation;
    return t;
}

/// Analytic fixed-h gradient dJ/dm_e = h_e^2 + lambda + 2 beta (m_e - m_ref_e).
inline Eigen::VectorXd cost_gradient(const Cochain& h, const EdgeMetric& M1,
                                     const MetricLearningConfig& cfg) {
    const Eigen::VectorXd ref = cfg.reference_weights(M1.size());
    return h.values.array().square().matrix() +
           Eigen::VectorXd::Constant(M1.size(), cfg.lambda) +
           2.0 * cfg.beta * (M1.weights() - ref);
}

/// Exact minimizer of the fixed-h subproblem, applied independently per edge.
inline EdgeMetric metric_update(const Cochain& h, const MetricLearningConfig& cfg) {
    if (!(cfg.beta > 0.0))
        throw std::invalid_argument("metric_update: beta must be > 0");
    const Eigen::VectorXd ref = cfg.reference_weights(h.size());
    Eigen::VectorXd m(h.size());
    for (Eigen::Index e = 0; e < h.size(); ++e) {
        const double raw = ref(e) - (h[e] * h[e] + cfg.lambda) / (2.0 * cfg.beta);
        m(e) = std::max(cfg.m_min, raw);
    }
    return EdgeMetric(std::move(m));
}

/**
 * Run the alternating iteration: start from M_ref, decompose, update, repeat
 * until the relative metric change drops below epsilon or max_iters updates
 * have been made. The returned trace has one record per decomposition,
 * including a terminal record under the final metric.
 */
inline MetricLearningResult learn_metric(
    const Cochain& f, const IncidenceMatrices& B, const MetricLearningConfig& cfg,
    ProjectionConvention convention = ProjectionConvention::Consistent) {
    const Eigen::Index m_count = B.B1.cols();
    cfg.validate(m_count);
    if (!f.all_finite())
        throw std::invalid_argument("learn_metric: flow contains non-finite values");

    MetricLearningTrace trace;
    Eigen::VectorXd m = cfg.reference_weights(m_count);
    double last_rel = 0.0;

    for (int k = 0;; ++k) {
        HodgeDecomposition dec;
        try {
            dec = hodge_decompose(f, B, EdgeMetric(m), convention);
        } catch (const std::exception& ex) {
            throw std::runtime_error("learn_metric: decomposition failed at iteration " +
                                     std::to_string(k) + ": " + ex.what());
        }
        const Cochain& h = dec.f_harm;

        TraceRecord rec;
        rec.iteration = k;
        rec.cost = cost_functional(h, EdgeMetric(m), cfg);
        rec.metric = m;
        rec.harmonic = h.values;

        if (k == cfg.max_iters) {  // terminal record, no further update
            rec.relative_change = last_rel;
            trace.records.push_back(std::move(rec));
            trace.status = LearningStatus::MaxItersReached;
            break;
        }

        const Eigen::VectorXd m_next = metric_update(h, cfg).weights();
        last_rel = (m_next - m).norm() / m.norm();
        rec.relative_change = last_rel;
        trace.records.push_back(std::move(rec));
        m = m_next;

        if (last_rel < cfg.epsilon) {
            HodgeDecomposition final_dec = hodge_decompose(f, B, EdgeMetric(m), convention);
            TraceRecord fin;
            fin.iteration = k + 1;
            fin.cost = cost_functional(final_dec.f_harm, EdgeMetric(m), cfg);
            fin.metric = m;
            fin.harmonic = final_dec.f_harm.values;
            fin.relative_change = last_rel;
            trace.records.push_back(std::move(fin));
            trace.status = LearningStatus::Converged;
            break;
        }
    }

    return MetricLearningResult{EdgeMetric(m), std::move(trace)};
}

}  // namespace hodgeflow

#endif  // HODGEFLOW_METRIC_LEARNING_HPP
