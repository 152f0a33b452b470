/**
 * Oriented 2-dimensional cellular complexes for service invocation graphs.
 *
 * A complex holds functions (0-cells), oriented invocations (1-cells) and
 * saga workflows (2-cells attached along closed edge walks). Construction
 * validates referential integrity and boundary closure; the incidence
 * matrices B1 (vertices x edges) and B2 (edges x faces) act as the discrete
 * differential operators of the complex and satisfy B1 * B2 = 0 exactly.
 */

#ifndef HODGEFLOW_COMPLEX_HPP
#define HODGEFLOW_COMPLEX_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hodgeflow {

/// Raised when a declarative complex specification violates a structural rule.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct Vertex {
    std::string id;
    std::string label;
};

struct Edge {
    std::string id;
    std::string tail;  // invoking function
    std::string head;  // invoked function
    std::string label;
};

/// One step of a face boundary: an edge id plus the traversal sign
/// (+1 traverses the edge along its orientation, -1 against it).
struct BoundaryStep {
    std::string edge;
    int sign = 1;
};

struct Face {
    std::string id;
    std::vector<BoundaryStep> boundary;
    std::string label;
};

/**
 * Immutable oriented cellular complex.
 *
 * Cell order is the declaration order of the input lists, so matrix row and
 * column indices are stable across runs. Ids are unique per dimension;
 * parallel edges between the same ordered vertex pair are allowed, self-loops
 * are not. Every face boundary must chain head-to-tail (respecting signs)
 * and return to its start vertex.
 */
class CellComplex {
public:
    CellComplex(std::vector<Vertex> vertices, std::vector<Edge> edges,
                std::vector<Face> faces)
        : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
        validate();
    }

    Eigen::Index num_vertices() const { return static_cast<Eigen::Index>(vertices_.size()); }
    Eigen::Index num_edges() const { return static_cast<Eigen::Index>(edges_.size()); }
    Eigen::Index num_faces() const { return static_cast<Eigen::Index>(faces_.size()); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    const Vertex& vertex(Eigen::Index i) const { return vertices_.at(static_cast<size_t>(i)); }
    const Edge& edge(Eigen::Index i) const { return edges_.at(static_cast<size_t>(i)); }
    const Face& face(Eigen::Index i) const { return faces_.at(static_cast<size_t>(i)); }

    Eigen::Index vertex_index(const std::string& id) const { return lookup(vertex_index_, id, "vertex"); }
    Eigen::Index edge_index(const std::string& id) const { return lookup(edge_index_, id, "edge"); }
    Eigen::Index face_index(const std::string& id) const { return lookup(face_index_, id, "face"); }

    bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::unordered_map<std::string, Eigen::Index> vertex_index_;
    std::unordered_map<std::string, Eigen::Index> edge_index_;
    std::unordered_map<std::string, Eigen::Index> face_index_;

    static Eigen::Index lookup(const std::unordered_map<std::string, Eigen::Index>& map,
                               const std::string& id, const char* kind) {
        auto it = map.find(id);
        if (it == map.end())
            throw std::out_of_range(std::string("unknown ") + kind + " id: " + id);
        return it->second;
    }

    void validate() {
        for (size_t i = 0; i < vertices_.size(); ++i) {
            if (!vertex_index_.emplace(vertices_[i].id, static_cast<Eigen::Index>(i)).second)
                throw ValidationError("duplicate vertex id: " + vertices_[i].id);
        }
        for (size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (!edge_index_.emplace(e.id, static_cast<Eigen::Index>(i)).second)
                throw ValidationError("duplicate edge id: " + e.id);
            if (vertex_index_.count(e.tail) == 0)
                throw ValidationError("dangling reference in edge " + e.id +
                                      ": unknown tail vertex " + e.tail);
            if (vertex_index_.count(e.head) == 0)
                throw ValidationError("dangling reference in edge " + e.id +
                                      ": unknown head vertex " + e.head);
            if (e.tail == e.head)
                throw ValidationError("self-loop edge: " + e.id);
        }
        for (size_t i = 0; i < faces_.size(); ++i) {
            const Face& f = faces_[i];
            if (!face_index_.emplace(f.id, static_cast<Eigen::Index>(i)).second)
                throw ValidationError("duplicate face id: " + f.id);
            validate_boundary(f);
        }
    }

    // Boundary closure: traversing each edge with its sign must chain
    // head-to-tail and return to the start vertex.
    void validate_boundary(const Face& f) const {
        if (f.boundary.empty())
            throw ValidationError("non-closed face boundary: " + f.id + " (empty boundary)");
        std::unordered_set<std::string> seen;
        std::string walk_start;
        std::string position;
        for (const BoundaryStep& step : f.boundary) {
            auto it = edge_index_.find(step.edge);
            if (it == edge_index_.end())
                throw ValidationError("dangling reference in face " + f.id +
                                      ": unknown edge " + step.edge);
            if (step.sign != 1 && step.sign != -1)
                throw ValidationError("invalid boundary sign in face " + f.id + ": edge " +
                                      step.edge + " has sign " + std::to_string(step.sign));
            if (!seen.insert(step.edge).second)
                throw ValidationError("face boundary reuses edge: " + f.id +
                                      " traverses " + step.edge + " more than once");
            const Edge& e = edges_[static_cast<size_t>(it->second)];
            const std::string& from = step.sign > 0 ? e.tail : e.head;
            const std::string& to = step.sign > 0 ? e.head : e.tail;
            if (walk_start.empty()) {
                walk_start = from;
            } else if (from != position) {
                throw ValidationError("non-closed face boundary: " + f.id + " (edge " + step.edge +
                                      " starts at " + from + ", expected " + position + ")");
            }
            position = to;
        }
        if (position != walk_start)
            throw ValidationError("non-closed face boundary: " + f.id + " (walk ends at " +
                                  position + ", started at " + walk_start + ")");
    }
};

/**
 * Signed incidence matrices of a complex.
 *
 * B1(v, e) is +1 if v is the head of e, -1 if v is the tail, 0 otherwise;
 * B2(e, f) is the sign with which face f traverses edge e, 0 if absent.
 * Stored as integer matrices so B1 * B2 = 0 holds exactly.
 */
struct IncidenceMatrices {
    Eigen::MatrixXi B1;  // num_vertices x num_edges
    Eigen::MatrixXi B2;  // num_edges x num_faces

    Eigen::MatrixXd B1d() const { return B1.cast<double>(); }
    Eigen::MatrixXd B2d() const { return B2.cast<double>(); }
};

inline IncidenceMatrices incidence_matrices(const CellComplex& complex) {
    const Eigen::Index n = complex.num_vertices();
    const Eigen::Index m = complex.num_edges();
    const Eigen::Index f = complex.num_faces();

    IncidenceMatrices out;
    out.B1 = Eigen::MatrixXi::Zero(n, m);
    for (Eigen::Index e = 0; e < m; ++e) {
        const Edge& edge = complex.edge(e);
        out.B1(complex.vertex_index(edge.head), e) = 1;
        out.B1(complex.vertex_index(edge.tail), e) = -1;
    }
    out.B2 = Eigen::MatrixXi::Zero(m, f);
    for (Eigen::Index c = 0; c < f; ++c) {
        for (const BoundaryStep& step : complex.face(c).boundary)
            out.B2(complex.edge_index(step.edge), c) = step.sign;
    }
    return out;
}

}  // namespace hodgeflow

#endif  // HODGEFLOW_COMPLEX_HPP
