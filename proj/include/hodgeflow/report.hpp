/**
 * Analysis pipeline and report emission.
 *
 * run_pipeline executes the full analysis on a graph and a flow: validate the
 * complex, decompose the flow under the unit metric, learn an edge metric,
 * decompose again under the learned metric, and collect everything into an
 * AnalysisReport. The report is self-describing (parameter echo, flow
 * provenance, data-file identifiers) and all emission is deterministic, so
 * identical inputs produce byte-identical JSON and CSV outputs.
 *
 * emit_series serializes the report's plot data as CSV: the J trajectory,
 * per-edge harmonic values, the learned metric, and one spectrum file per
 * Laplacian. It reads only report fields and recomputes nothing.
 */

#ifndef HODGEFLOW_REPORT_HPP
#define HODGEFLOW_REPORT_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgeflow/cochain.hpp"
#include "hodgeflow/complex.hpp"
#include "hodgeflow/hodge.hpp"
#include "hodgeflow/io.hpp"
#include "hodgeflow/metric_learning.hpp"
#include "hodgeflow/version.hpp"
#include "hodgeflow/workload.hpp"

namespace hodgeflow {

struct PipelineOptions {
    MetricLearningConfig learning;
    ProjectionConvention convention = ProjectionConvention::Consistent;
    double rank_tol = kDefaultRankTol;
};

/// Where the analyzed flow came from; recorded in the report so figures are
/// regenerable.
struct FlowProvenance {
    std::string source;  // "workload" or "cochain-file"
    std::string detail;  // generator identity or file content hash
    std::optional<std::uint64_t> seed;
};

struct DecompositionSummary {
    double energy_grad = 0.0;
    double energy_curl = 0.0;
    double energy_harm = 0.0;
    double orthogonality_residual = 0.0;
};

struct TrajectoryRow {
    int iter = 0;
    double J = 0.0;
    double harm_term = 0.0;
    double trace_term = 0.0;
    double dev_term = 0.0;
    double rel_change = 0.0;
};

struct EdgeReportRow {
    std::string id;
    std::string label;
    double h_initial = 0.0;       // harmonic value under the unit metric
    double h_final = 0.0;         // harmonic value under the learned metric
    double h_initial_abs = 0.0;
    double h_final_abs = 0.0;
    double energy_initial = 0.0;  // h_initial^2 (unit metric)
    double energy_final = 0.0;    // m_learned * h_final^2
    double m_learned = 0.0;
};

struct AnalysisReport {
    std::string tool_name = kToolName;
    std::string tool_version = kToolVersion;

    GraphDocumentInfo graph;
    int num_vertices = 0;
    int num_edges = 0;
    int num_faces = 0;

    FlowProvenance flow;

    MetricLearningConfig params;
    std::string projection_convention;
    double rank_tol = kDefaultRankTol;

    BettiNumbers betti_numbers;
    Spectrum spectrum_L0, spectrum_L1, spectrum_L2;  // unit metric

    DecompositionSummary initial;
    DecompositionSummary final_state;

    std::string status;
    int iterations = 0;
    std::vector<TrajectoryRow> trajectory;

    std::vector<EdgeReportRow> edges;
};

inline const char* to_string(ProjectionConvention c) {
    return c == ProjectionConvention::Consistent ? "consistent-weighted" : "paper-literal";
}

/// Core pipeline on in-memory data.
inline AnalysisReport run_pipeline(const CellComplex& complex, const Cochain& flow,
                                   const PipelineOptions& opts,
                                   const GraphDocumentInfo& graph_info = {},
                                   const FlowProvenance& flow_info = {}) {
    const IncidenceMatrices B = incidence_matrices(complex);
    const EdgeMetric unit = EdgeMetric::identity(complex.num_edges());

    AnalysisReport rep;
    rep.graph = graph_info;
    rep.num_vertices = static_cast<int>(complex.num_vertices());
    rep.num_edges = static_cast<int>(complex.num_edges());
    rep.num_faces = static_cast<int>(complex.num_faces());
    rep.flow = flow_info;
    rep.params = opts.learning;
    rep.projection_convention = to_string(opts.convention);
    rep.rank_tol = opts.rank_tol;

    rep.betti_numbers = betti(B, opts.rank_tol);
    const Laplacians L = laplacians(B, unit);
    rep.spectrum_L0 = spectrum(L.L0, opts.rank_tol);
    rep.spectrum_L1 = spectrum(L.L1, opts.rank_tol);
    rep.spectrum_L2 = spectrum(L.L2, opts.rank_tol);

    const HodgeDecomposition initial =
        hodge_decompose(flow, B, unit, opts.convention, opts.rank_tol);
    rep.initial = {initial.energy_grad, initial.energy_curl, initial.energy_harm,
                   orthogonality_residual(initial, unit)};

    MetricLearningResult learned = learn_metric(flow, B, opts.learning, opts.convention);
    rep.status = to_string(learned.trace.status);
    rep.iterations = learned.trace.update_count();
    for (const TraceRecord& r : learned.trace.records)
        rep.trajectory.push_back({r.iteration, r.cost.total, r.cost.harmonic, r.cost.trace,
                                  r.cost.deviation, r.relative_change});

    const HodgeDecomposition final_dec =
        hodge_decompose(flow, B, learned.metric, opts.convention, opts.rank_tol);
    rep.final_state = {final_dec.energy_grad, final_dec.energy_curl, final_dec.energy_harm,
                       orthogonality_residual(final_dec, learned.metric)};

    rep.edges.reserve(static_cast<size_t>(complex.num_edges()));
    for (Eigen::Index e = 0; e < complex.num_edges(); ++e) {
        EdgeReportRow row;
        row.id = complex.edge(e).id;
        row.label = complex.edge(e).label;
        row.h_initial = initial.f_harm[e];
        row.h_final = final_dec.f_harm[e];
        row.h_initial_abs = std::abs(row.h_initial);
        row.h_final_abs = std::abs(row.h_final);
        row.energy_initial = row.h_initial * row.h_initial;
        row.m_learned = learned.metric[e];
        row.energy_final = row.m_learned * row.h_final * row.h_final;
        rep.edges.push_back(std::move(row));
    }
    return rep;
}

/// Flow source for file-level pipeline runs: a cochain CSV or a workload
/// configuration (the flow is then generated as requests x cold-start).
struct FlowSource {
    std::optional<std::filesystem::path> cochain_file;
    std::optional<WorkloadConfig> workload;
};

inline AnalysisReport run_pipeline(const std::filesystem::path& graph_file,
                                   const FlowSource& source, const PipelineOptions& opts) {
    GraphDocumentInfo info;
    const CellComplex complex = load_complex(graph_file, &info);

    Cochain flow;
    FlowProvenance prov;
    if (source.cochain_file && source.workload)
        throw std::invalid_argument("run_pipeline: flow source must be a cochain file or a "
                                    "workload config, not both");
    if (source.cochain_file) {
        const std::string text = detail::read_file(*source.cochain_file);
        std::istringstream in(text);
        flow = read_edge_cochain_csv(in, complex, source.cochain_file->string());
        prov.source = "cochain-file";
        prov.detail = "fnv1a:" + detail::hex64(detail::fnv1a(text));
    } else if (source.workload) {
        const Cochain f_req = sample_request_flow(complex, *source.workload);
        const Cochain f_cs = cold_start_cochain(complex, *source.workload);
        flow = latency_flow(f_req, f_cs);
        prov.source = "workload";
        prov.detail = kFlowGeneratorIdentity;
        prov.seed = source.workload->seed;
    } else {
        throw std::invalid_argument("run_pipeline: no flow source given");
    }
    return run_pipeline(complex, flow, opts, info, prov);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
    using json = nlohmann::ordered_json;
    json j;
    j["tool"] = {{"name", rep.tool_name}, {"version", rep.tool_version}};
    j["graph"] = {{"name", rep.graph.name},
                  {"version", rep.graph.version},
                  {"content_hash", rep.graph.content_hash},
                  {"vertices", rep.num_vertices},
                  {"edges", rep.num_edges},
                  {"faces", rep.num_faces}};
    json flow = {{"source", rep.flow.source}, {"detail", rep.flow.detail}};
    if (rep.flow.seed)
        flow["seed"] = *rep.flow.seed;
    j["flow"] = flow;

    json params = {{"lambda", rep.params.lambda},
                   {"beta", rep.params.beta},
                   {"m_min", rep.params.m_min},
                   {"epsilon", rep.params.epsilon},
                   {"max_iters", rep.params.max_iters},
                   {"alpha", rep.params.alpha}};
    if (rep.params.m_ref.size() == 0) {
        params["m_ref"] = rep.params.m_ref_uniform;
    } else {
        json ref = json::object();
        for (Eigen::Index e = 0; e < rep.params.m_ref.size(); ++e)
            ref[rep.edges[static_cast<size_t>(e)].id] = rep.params.m_ref(e);
        params["m_ref"] = ref;
    }
    params["projection_convention"] = rep.projection_convention;
    params["rank_tol"] = rep.rank_tol;
    j["parameters"] = params;

    j["topology"] = {{"betti",
                      {{"beta0", rep.betti_numbers.beta0},
                       {"beta1", rep.betti_numbers.beta1},
                       {"beta2", rep.betti_numbers.beta2}}},
                     {"spectral_gaps",
                      {{"L0", rep.spectrum_L0.gap},
                       {"L1", rep.spectrum_L1.gap},
                       {"L2", rep.spectrum_L2.gap}}},
                     {"spectra",
                      {{"L0", rep.spectrum_L0.eigenvalues},
                       {"L1", rep.spectrum_L1.eigenvalues},
                       {"L2", rep.spectrum_L2.eigenvalues}}}};

    auto summary = [](const DecompositionSummary& s) {
        return json{{"energy_grad", s.energy_grad},
                    {"energy_curl", s.energy_curl},
                    {"energy_harm", s.energy_harm},
                    {"orthogonality_residual", s.orthogonality_residual}};
    };
    j["initial_decomposition"] = summary(rep.initial);
    j["final_decomposition"] = summary(rep.final_state);

    json traj = json::array();
    for (const TrajectoryRow& r : rep.trajectory)
        traj.push_back({{"iter", r.iter},
                        {"J", r.J},
                        {"harm_term", r.harm_term},
                        {"trace_term", r.trace_term},
                        {"dev_term", r.dev_term},
                        {"rel_change", r.rel_change}});
    j["learning"] = {{"status", rep.status}, {"iterations", rep.iterations}, {"trajectory", traj}};

    json edges = json::array();
    for (const EdgeReportRow& r : rep.edges)
        edges.push_back({{"id", r.id},
                         {"label", r.label},
                         {"h_initial", r.h_initial},
                         {"h_final", r.h_final},
                         {"h_initial_abs", r.h_initial_abs},
                         {"h_final_abs", r.h_final_abs},
                         {"energy_initial", r.energy_initial},
                         {"energy_final", r.energy_final},
                         {"m_learned", r.m_learned}});
    j["edges"] = edges;
    return j;
}

inline void write_report_json(const AnalysisReport& rep, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write report: " + path.string());
    out << report_to_json(rep).dump(2) << '\n';
}

namespace detail {

inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write CSV file: " + path.string());
    return out;
}

}  // namespace detail

/// Write the report's plot-data series into a directory (created if absent).
inline std::vector<std::filesystem::path> emit_series(const AnalysisReport& rep,
                                                      const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec && !std::filesystem::is_directory(dir))
        throw std::runtime_error("cannot create output directory: " + dir.string());

    std::vector<std::filesystem::path> written;

    {
        auto out = detail::open_csv(dir / "j_trajectory.csv");
        out << "iter,J,harm_term,trace_term,dev_term\n";
        for (const TrajectoryRow& r : rep.trajectory)
            out << r.iter << ',' << detail::csv_number(r.J) << ',' << detail::csv_number(r.harm_term)
                << ',' << detail::csv_number(r.trace_term) << ',' << detail::csv_number(r.dev_term)
                << '\n';
        written.push_back(dir / "j_trajectory.csv");
    }
    {
        auto out = detail::open_csv(dir / "harmonic_edges.csv");
        out << "edge_id,label,h_initial,h_final\n";
        for (const EdgeReportRow& r : rep.edges)
            out << detail::csv_field(r.id) << ',' << detail::csv_field(r.label) << ','
                << detail::csv_number(r.h_initial) << ',' << detail::csv_number(r.h_final) << '\n';
        written.push_back(dir / "harmonic_edges.csv");
    }
    {
        auto out = detail::open_csv(dir / "learned_metric.csv");
        out << "edge_id,m_e\n";
        for (const EdgeReportRow& r : rep.edges)
            out << detail::csv_field(r.id) << ',' << detail::csv_number(r.m_learned) << '\n';
        written.push_back(dir / "learned_metric.csv");
    }
    const std::pair<const char*, const Spectrum*> spectra[] = {
        {"spectrum_L0.csv", &rep.spectrum_L0},
        {"spectrum_L1.csv", &rep.spectrum_L1},
        {"spectrum_L2.csv", &rep.spectrum_L2},
    };
    for (const auto& [file, spec] : spectra) {
        auto out = detail::open_csv(dir / file);
        out << "index,eigenvalue\n";
        for (size_t i = 0; i < spec->eigenvalues.size(); ++i)
            out << i << ',' << detail::csv_number(spec->eigenvalues[i]) << '\n';
        written.push_back(dir / file);
    }
    return written;
}

}  // namespace hodgeflow

#endif  // HODGEFLOW_REPORT_HPP
