#include "kcirc/multigraph.hpp"

#include <algorithm>
#include <map>

namespace kcirc {

MultiGraph::MultiGraph(const std::vector<VertexId>& vertices,
                       const std::vector<EdgeDecl>& edges) {
    vertex_ids_ = vertices;
    std::sort(vertex_ids_.begin(), vertex_ids_.end());
    for (size_t i = 1; i < vertex_ids_.size(); ++i) {
        if (vertex_ids_[i] == vertex_ids_[i - 1]) {
            fail("DuplicateId", "vertex '" + vertex_ids_[i] + "' declared twice");
        }
    }

    std::map<EdgeId, std::pair<VertexId, VertexId>> by_id;
    for (const EdgeDecl& e : edges) {
        if (!by_id.emplace(e.id, std::make_pair(e.u, e.v)).second) {
            fail("DuplicateId", "edge '" + e.id + "' declared twice");
        }
    }

    edge_ids_.reserve(by_id.size());
    ends_.reserve(by_id.size());
    for (const auto& [id, uv] : by_id) {
        int ui, vi;
        {
            auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), uv.first);
            if (it == vertex_ids_.end() || *it != uv.first) {
                fail("DanglingEndpoint",
                     "edge '" + id + "' references undeclared vertex '" + uv.first + "'");
            }
            ui = static_cast<int>(it - vertex_ids_.begin());
        }
        {
            auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), uv.second);
            if (it == vertex_ids_.end() || *it != uv.second) {
                fail("DanglingEndpoint",
                     "edge '" + id + "' references undeclared vertex '" + uv.second + "'");
            }
            vi = static_cast<int>(it - vertex_ids_.begin());
        }
        edge_ids_.push_back(id);
        ends_.emplace_back(std::min(ui, vi), std::max(ui, vi));
    }

    incidence_.assign(vertex_ids_.size(), {});
    for (int ei = 0; ei < edge_count(); ++ei) {
        auto [u, v] = ends_[ei];
        incidence_[u].push_back(ei);
        if (v != u) incidence_[v].push_back(ei);
    }
}

MultiGraph MultiGraph::from_edges(const std::vector<EdgeDecl>& edges,
                                  const std::vector<VertexId>& extra_vertices) {
    std::set<VertexId> verts(extra_vertices.begin(), extra_vertices.end());
    for (const EdgeDecl& e : edges) {
        verts.insert(e.u);
        verts.insert(e.v);
    }
    return MultiGraph(std::vector<VertexId>(verts.begin(), verts.end()), edges);
}

bool MultiGraph::has_vertex(const VertexId& id) const {
    return std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), id);
}

bool MultiGraph::has_edge(const EdgeId& id) const {
    return std::binary_search(edge_ids_.begin(), edge_ids_.end(), id);
}

int MultiGraph::vertex_index(const VertexId& id) const {
    auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end() || *it != id) {
        fail("UnknownVertex", "no vertex '" + id + "'");
    }
    return static_cast<int>(it - vertex_ids_.begin());
}

int MultiGraph::edge_index(const EdgeId& id) const {
    auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
    if (it == edge_ids_.end() || *it != id) {
        fail("UnknownEdge", "no edge '" + id + "'");
    }
    return static_cast<int>(it - edge_ids_.begin());
}

bool MultiGraph::has_isolated_vertex() const {
    for (const auto& inc : incidence_) {
        if (inc.empty()) return true;
    }
    return false;
}

EdgeSet MultiGraph::edge_set() const {
    return EdgeSet(edge_ids_.begin(), edge_ids_.end());
}

std::vector<int> MultiGraph::edge_indices(const EdgeSet& x) const {
    std::vector<int> out;
    out.reserve(x.size());
    for (const EdgeId& id : x) out.push_back(edge_index(id));
    return out;  // already sorted: EdgeSet iterates in id order, ids sorted
}

EdgeSet MultiGraph::edge_set_of(const std::vector<int>& indices) const {
    EdgeSet out;
    for (int i : indices) out.insert(edge_ids_[i]);
    return out;
}

EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

EdgeSet edge_set_minus(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    for (const EdgeId& e : a) {
        if (!b.count(e)) out.insert(e);
    }
    return out;
}

bool edge_set_less(const EdgeSet& a, const EdgeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_edge_sets(std::vector<EdgeSet>& sets) {
    std::sort(sets.begin(), sets.end(), edge_set_less);
}

}  // namespace kcirc
