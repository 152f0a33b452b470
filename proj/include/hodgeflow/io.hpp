/**
 * File formats: graph-specification documents (JSON), cochain CSV exchange,
 * and configuration documents for workloads and metric learning.
 */

#ifndef HODGEFLOW_IO_HPP
#define HODGEFLOW_IO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hodgeflow/cochain.hpp"
#include "hodgeflow/complex.hpp"
#include "hodgeflow/metric_learning.hpp"

namespace hodgeflow {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::size_t line_of_offset(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

/// Parse JSON, rewriting nlohmann's byte offsets into line numbers.
inline nlohmann::json parse_json(std::string_view text, const std::string& origin) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(origin + ": parse error at line " +
                         std::to_string(line_of_offset(text, ex.byte)) + ": " + ex.what());
    }
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_string())
        throw ParseError(where + ": missing or non-string field '" + key + "'");
    return obj.at(key).get<std::string>();
}

inline std::string optional_string(const nlohmann::json& obj, const char* key) {
    if (obj.contains(key) && obj.at(key).is_string())
        return obj.at(key).get<std::string>();
    return {};
}

// FNV-1a, used to pin file provenance in reports.
inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4)
        s[static_cast<size_t>(i)] = digits[v & 0xF];
    return s;
}

}  // namespace detail

/// Optional descriptive header of a graph document.
struct GraphDocumentInfo {
    std::string name;
    std::string version;
    std::string content_hash;  // fnv1a over the document bytes
};

inline CellComplex parse_complex(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw ParseError("graph document: top level must be an object");

    std::vector<Vertex> vertices;
    if (doc.contains("vertices")) {
        for (const auto& v : doc.at("vertices"))
            vertices.push_back({detail::require_string(v, "id", "vertex entry"),
                                detail::optional_string(v, "label")});
    }
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        for (const auto& e : doc.at("edges"))
            edges.push_back({detail::require_string(e, "id", "edge entry"),
                             detail::require_string(e, "tail", "edge entry"),
                             detail::require_string(e, "head", "edge entry"),
                             detail::optional_string(e, "label")});
    }
    std::vector<Face> faces;
    if (doc.contains("faces")) {
        for (const auto& f : doc.at("faces")) {
            Face face;
            face.id = detail::require_string(f, "id", "face entry");
            face.label = detail::optional_string(f, "label");
            if (!f.contains("boundary") || !f.at("boundary").is_array())
                throw ParseError("face " + face.id + ": missing boundary list");
            for (const auto& step : f.at("boundary")) {
                BoundaryStep bs;
                bs.edge = detail::require_string(step, "edge", "face " + face.id + " boundary");
                if (!step.contains("sign") || !step.at("sign").is_number_integer())
                    throw ParseError("face " + face.id + ": boundary step for edge " + bs.edge +
                                     " is missing an integer sign");
                bs.sign = step.at("sign").get<int>();
                face.boundary.push_back(std::move(bs));
            }
            faces.push_back(std::move(face));
        }
    }
    return CellComplex(std::move(vertices), std::move(edges), std::move(faces));
}

inline CellComplex parse_complex_text(std::string_view text,
                                      const std::string& origin = "graph document") {
    return parse_complex(detail::parse_json(text, origin));
}

inline CellComplex load_complex(const std::filesystem::path& path,
                                GraphDocumentInfo* info = nullptr) {
    const std::string text = detail::read_file(path);
    const nlohmann::json doc = detail::parse_json(text, path.string());
    if (info) {
        info->name = detail::optional_string(doc, "name");
        info->version = detail::optional_string(doc, "version");
        info->content_hash = detail::hex64(detail::fnv1a(text));
    }
    return parse_complex(doc);
}

inline nlohmann::ordered_json complex_to_json(const CellComplex& complex) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& v : complex.vertices())
        doc["vertices"].push_back({{"id", v.id}, {"label", v.label}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : complex.edges())
        doc["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"label", e.label}});
    doc["faces"] = nlohmann::ordered_json::array();
    for (const Face& f : complex.faces()) {
        nlohmann::ordered_json boundary = nlohmann::ordered_json::array();
        for (const BoundaryStep& s : f.boundary)
            boundary.push_back({{"edge", s.edge}, {"sign", s.sign}});
        doc["faces"].push_back({{"id", f.id}, {"boundary", boundary}, {"label", f.label}});
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Cochain CSV exchange: header "cell_id,value", one row per cell, ids must
// cover the complex's k-cells exactly.
// ---------------------------------------------------------------------------

inline Cochain read_edge_cochain_csv(std::istream& in, const CellComplex& complex,
                                     const std::string& origin = "cochain file") {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line))
        throw ParseError(origin + ": empty file");
    ++line_no;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "cell_id,value")
        throw ParseError(origin + ": line 1: expected header 'cell_id,value', got '" + line + "'");

    Eigen::VectorXd values = Eigen::VectorXd::Zero(complex.num_edges());
    std::vector<bool> seen(static_cast<size_t>(complex.num_edges()), false);
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(origin + ": line " + std::to_string(line_no) + ": expected 'cell_id,value'");
        const std::string id = line.substr(0, comma);
        const std::string value_text = line.substr(comma + 1);
        if (!complex.has_edge(id))
            throw ParseError(origin + ": line " + std::to_string(line_no) + ": unknown edge id: " + id);
        const Eigen::Index idx = complex.edge_index(id);
        if (seen[static_cast<size_t>(idx)])
            throw ParseError(origin + ": line " + std::to_string(line_no) + ": duplicate edge id: " + id);
        seen[static_cast<size_t>(idx)] = true;
        try {
            std::size_t consumed = 0;
            values(idx) = std::stod(value_text, &consumed);
            if (consumed != value_text.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ParseError(origin + ": line " + std::to_string(line_no) + ": invalid value '" +
                             value_text + "' for edge " + id);
        }
    }
    for (Eigen::Index i = 0; i < complex.num_edges(); ++i) {
        if (!seen[static_cast<size_t>(i)])
            throw ParseError(origin + ": missing edge row: " + complex.edge(i).id);
    }
    return Cochain(1, std::move(values));
}

inline Cochain load_edge_cochain_csv(const std::filesystem::path& path,
                                     const CellComplex& complex) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path.string());
    return read_edge_cochain_csv(in, complex, path.string());
}

inline void write_edge_cochain_csv(std::ostream& out, const CellComplex& complex,
                                   const Cochain& values) {
    if (values.size() != complex.num_edges())
        throw std::invalid_argument("write_edge_cochain_csv: cochain length mismatch");
    out << "cell_id,value\n";
    char buf[40];
    for (Eigen::Index i = 0; i < complex.num_edges(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", values[i]);
        out << complex.edge(i).id << ',' << buf << '\n';
    }
}

// ---------------------------------------------------------------------------
// Metric-learning configuration documents. Keys: lambda, beta, m_min,
// epsilon, max_iters, m_ref (number for uniform, or object {edge-id: weight}
// covering every edge), alpha (recorded, unused).
// ---------------------------------------------------------------------------

inline MetricLearningConfig parse_metric_config(const nlohmann::json& doc,
                                                const CellComplex& complex) {
    MetricLearningConfig cfg;
    if (!doc.is_object())
        throw ParseError("metric config: top level must be an object");
    if (doc.contains("lambda")) cfg.lambda = doc.at("lambda").get<double>();
    if (doc.contains("beta")) cfg.beta = doc.at("beta").get<double>();
    if (doc.contains("m_min")) cfg.m_min = doc.at("m_min").get<double>();
    if (doc.contains("epsilon")) cfg.epsilon = doc.at("epsilon").get<double>();
    if (doc.contains("max_iters")) cfg.max_iters = doc.at("max_iters").get<int>();
    if (doc.contains("alpha")) cfg.alpha = doc.at("alpha").get<double>();
    if (doc.contains("m_ref")) {
        const auto& ref = doc.at("m_ref");
        if (ref.is_number()) {
            cfg.m_ref_uniform = ref.get<double>();
        } else if (ref.is_object()) {
            Eigen::VectorXd weights(complex.num_edges());
            std::vector<bool> seen(static_cast<size_t>(complex.num_edges()), false);
            for (const auto& [id, value] : ref.items()) {
                if (!complex.has_edge(id))
                    throw ParseError("metric config: m_ref names unknown edge id: " + id);
                const Eigen::Index idx = complex.edge_index(id);
                weights(idx) = value.get<double>();
                seen[static_cast<size_t>(idx)] = true;
            }
            for (Eigen::Index i = 0; i < complex.num_edges(); ++i)
                if (!seen[static_cast<size_t>(i)])
                    throw ParseError("metric config: m_ref missing edge: " + complex.edge(i).id);
            cfg.m_ref = std::move(weights);
        } else {
            throw ParseError("metric config: m_ref must be a number or an {edge-id: weight} object");
        }
    }
    return cfg;
}

inline MetricLearningConfig load_metric_config(const std::filesystem::path& path,
                                               const CellComplex& complex) {
    const std::string text = detail::read_file(path);
    return parse_metric_config(detail::parse_json(text, path.string()), complex);
}

}  // namespace hodgeflow

#endif  // HODGEFLOW_IO_HPP
