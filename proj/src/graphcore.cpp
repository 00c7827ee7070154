#include "kcirc/graphcore.hpp"

#include <algorithm>

#include "subgraph.hpp"

namespace kcirc {

using detail::component_edge_lists;
using detail::delta_of;
using detail::strip_leaves;
using detail::subgraph_degrees;
using detail::vertex_span;

SubgraphView induced_subgraph(const MultiGraph& g, const EdgeSet& x) {
    SubgraphView view{&g, x, {}};
    for (int v : vertex_span(g, g.edge_indices(x))) {
        view.vertices.insert(g.vertex_id(v));
    }
    return view;
}

int delta(const MultiGraph& g, const EdgeSet& x) {
    return delta_of(g, g.edge_indices(x));
}

std::vector<EdgeSet> components(const MultiGraph& g, const EdgeSet& x) {
    std::vector<EdgeSet> out;
    for (const auto& comp : component_edge_lists(g, g.edge_indices(x))) {
        out.push_back(g.edge_set_of(comp));
    }
    return out;
}

EdgeSet kernel(const MultiGraph& g, const EdgeSet& x) {
    std::vector<int> result;
    bool found = false;
    for (const auto& comp : component_edge_lists(g, g.edge_indices(x))) {
        if (delta_of(g, comp) < 0) continue;
        found = true;
        for (int e : strip_leaves(g, comp)) result.push_back(e);
    }
    if (!found) {
        fail("KernelUndefined", "every component of the induced subgraph is a tree");
    }
    std::sort(result.begin(), result.end());
    return g.edge_set_of(result);
}

EdgeSet core(const MultiGraph& g, const EdgeSet& x) {
    std::vector<int> result;
    bool found = false;
    for (const auto& comp : component_edge_lists(g, g.edge_indices(x))) {
        if (delta_of(g, comp) < 1) continue;
        found = true;
        for (int e : strip_leaves(g, comp)) result.push_back(e);
    }
    if (!found) {
        fail("CoreUndefined", "every component has at most one cycle");
    }
    std::sort(result.begin(), result.end());
    return g.edge_set_of(result);
}

namespace {

// Tree components of (V(g), edges): components with |E| = |V| - 1, counting
// vertices that end up isolated as one-vertex trees.
int tree_component_count(const MultiGraph& g, const std::vector<int>& edges) {
    detail::Dsu dsu(g.vertex_count());
    for (int e : edges) {
        auto [u, v] = g.ends(e);
        dsu.unite(u, v);
    }
    std::vector<int> vcount(g.vertex_count(), 0);
    std::vector<int> ecount(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) vcount[dsu.find(v)] += 1;
    for (int e : edges) ecount[dsu.find(g.ends(e).first)] += 1;
    int trees = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dsu.find(v) == v && ecount[v] == vcount[v] - 1) ++trees;
    }
    return trees;
}

}  // namespace

bool coloop_edge_test(const MultiGraph& g, const EdgeId& e) {
    int ei = g.edge_index(e);
    std::vector<int> all;
    all.reserve(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) all.push_back(i);
    std::vector<int> without = detail::sorted_minus(all, {ei});
    return tree_component_count(g, without) > tree_component_count(g, all);
}

bool is_cacti(const MultiGraph& g, const EdgeSet& x) {
    std::vector<int> edges = g.edge_indices(x);
    if (edges.empty()) return false;
    if (detail::has_leaf(g, edges)) return false;
    for (const auto& comp : component_edge_lists(g, edges)) {
        if (delta_of(g, comp) < 1) return false;
    }
    return true;
}

const char* to_string(BicycleKind kind) {
    switch (kind) {
        case BicycleKind::Theta: return "theta";
        case BicycleKind::Dumbbell: return "dumbbell";
        case BicycleKind::Butterfly: return "butterfly";
    }
    return "?";
}

BicycleKind classify_bicycle(const MultiGraph& g, const EdgeSet& x) {
    std::vector<int> edges = g.edge_indices(x);
    if (edges.empty() || !detail::is_connected_subgraph(g, edges) ||
        detail::has_leaf(g, edges) || delta_of(g, edges) != 1) {
        fail("NotABicycle", "set is not connected, leafless, with delta 1");
    }
    std::vector<int> span = vertex_span(g, edges);
    std::vector<int> deg = subgraph_degrees(g, edges, span);
    int deg4 = 0;
    for (int d : deg) {
        if (d == 4) ++deg4;
    }
    // Degree sum is 2|E| = 2|V| + 2, all degrees >= 2, so the surplus is
    // either a single degree-4 vertex or two degree-3 vertices.
    if (deg4 == 1) return BicycleKind::Butterfly;
    for (int e : edges) {
        if (detail::is_bridge_in(g, edges, e)) return BicycleKind::Dumbbell;
    }
    return BicycleKind::Theta;
}

bool strongly_isomorphic(const MultiGraph& g, const MultiGraph& h) {
    if (g.edge_ids() != h.edge_ids()) {
        fail("EdgeSetMismatch", "graphs do not share an edge universe");
    }
    auto stars = [](const MultiGraph& gr) {
        std::vector<std::vector<EdgeId>> all;
        all.reserve(gr.vertex_count());
        for (int v = 0; v < gr.vertex_count(); ++v) {
            std::vector<EdgeId> star;
            for (int e : gr.incident_edges(v)) star.push_back(gr.edge_id(e));
            all.push_back(std::move(star));
        }
        std::sort(all.begin(), all.end());
        return all;
    };
    return stars(g) == stars(h);
}

}  // namespace kcirc
