#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kcirc/errors.hpp"

namespace kcirc {

using VertexId = std::string;
using EdgeId = std::string;

/// A subset of the edge identifiers of some MultiGraph. Iteration order is
/// the canonical (lexicographic) order, so enumerations built from EdgeSets
/// are deterministic.
using EdgeSet = std::set<EdgeId>;

/// Finite multigraph with named vertices and edges. Loops (u == v) and
/// parallel edges are permitted. Immutable after construction; vertex and
/// edge identifiers are opaque tokens ordered lexicographically.
class MultiGraph {
public:
    struct EdgeDecl {
        EdgeId id;
        VertexId u;
        VertexId v;
    };

    /// Builds from an explicit vertex list plus edges. Throws DuplicateId on
    /// repeated identifiers and DanglingEndpoint if an edge references an
    /// undeclared vertex.
    MultiGraph(const std::vector<VertexId>& vertices, const std::vector<EdgeDecl>& edges);

    /// Convenience builder: vertices are the endpoints of the given edges
    /// plus any listed extra (possibly isolated) vertices.
    static MultiGraph from_edges(const std::vector<EdgeDecl>& edges,
                                 const std::vector<VertexId>& extra_vertices = {});

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edge_ids_.size()); }

    const std::vector<VertexId>& vertex_ids() const { return vertex_ids_; }
    const std::vector<EdgeId>& edge_ids() const { return edge_ids_; }

    const VertexId& vertex_id(int index) const { return vertex_ids_[index]; }
    const EdgeId& edge_id(int index) const { return edge_ids_[index]; }

    bool has_vertex(const VertexId& id) const;
    bool has_edge(const EdgeId& id) const;

    /// Index lookups throw UnknownVertex / UnknownEdge.
    int vertex_index(const VertexId& id) const;
    int edge_index(const EdgeId& id) const;

    /// Endpoint vertex indices of an edge, with first <= second.
    std::pair<int, int> ends(int edge_index) const { return ends_[edge_index]; }
    bool is_loop(int edge_index) const {
        return ends_[edge_index].first == ends_[edge_index].second;
    }

    /// Edge indices incident to a vertex, sorted (a loop appears once).
    const std::vector<int>& incident_edges(int vertex_index) const {
        return incidence_[vertex_index];
    }

    bool has_isolated_vertex() const;

    EdgeSet edge_set() const;

    /// Converts an EdgeSet into sorted edge indices, validating membership.
    std::vector<int> edge_indices(const EdgeSet& x) const;
    EdgeSet edge_set_of(const std::vector<int>& indices) const;

private:
    std::vector<VertexId> vertex_ids_;  // sorted
    std::vector<EdgeId> edge_ids_;      // sorted
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<int>> incidence_;
};

EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_set_minus(const EdgeSet& a, const EdgeSet& b);

/// Canonical order for lists of edge sets: by size, then lexicographic.
bool edge_set_less(const EdgeSet& a, const EdgeSet& b);
void sort_edge_sets(std::vector<EdgeSet>& sets);

}  // namespace kcirc
