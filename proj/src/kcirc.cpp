#include "kcirc/kcirc.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "subgraph.hpp"

namespace kcirc {

using detail::component_edge_lists;
using detail::delta_of;
using detail::sorted_contains;
using detail::sorted_minus;
using detail::sorted_union;
using detail::strip_leaves;
using detail::vertex_span;

KCircularMatroid::KCircularMatroid(MultiGraph graph, int k)
    : graph_(std::move(graph)), k_(k) {
    if (k < 0) {
        fail("InvalidK", "k must be non-negative");
    }
    if (graph_.edge_count() == 0) {
        fail("EmptyGroundSet", "the matroid needs at least one edge");
    }
    if (graph_.has_isolated_vertex()) {
        fail("IsolatedVertex", "the graph of a k-circular matroid must have no isolated vertices");
    }
}

namespace {

int tree_component_count(const MultiGraph& g, const std::vector<int>& edges) {
    int trees = 0;
    for (const auto& comp : component_edge_lists(g, edges)) {
        if (delta_of(g, comp) == -1) ++trees;
    }
    return trees;
}

std::vector<int> all_edges(const MultiGraph& g) {
    std::vector<int> out(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) out[i] = i;
    return out;
}

bool independent_indices(const KCircularMatroid& m, const std::vector<int>& x) {
    // Independent iff G<x> minus its tree components is empty or has
    // delta < k: that is exactly when x contains no circuit.
    const MultiGraph& g = m.graph();
    int surplus = 0;
    bool any_cyclic = false;
    for (const auto& comp : component_edge_lists(g, x)) {
        int d = delta_of(g, comp);
        if (d >= 0) {
            any_cyclic = true;
            surplus += d;
        }
    }
    if (!any_cyclic) return true;
    return surplus < m.k();
}

bool cacti_indices(const MultiGraph& g, const std::vector<int>& x) {
    if (x.empty() || detail::has_leaf(g, x)) return false;
    for (const auto& comp : component_edge_lists(g, x)) {
        if (delta_of(g, comp) < 1) return false;
    }
    return true;
}

bool circuit_indices(const KCircularMatroid& m, const std::vector<int>& x) {
    const MultiGraph& g = m.graph();
    if (m.k() == 0) return detail::is_cycle_edges(g, x);
    return delta_of(g, x) == m.k() && cacti_indices(g, x);
}

bool base_indices(const KCircularMatroid& m, const std::vector<int>& x);

void require_enumerable(const KCircularMatroid& m, int limit) {
    if (m.graph().edge_count() > limit) {
        fail("EnumerationLimitExceeded",
             "graph has " + std::to_string(m.graph().edge_count()) +
                 " edges, limit is " + std::to_string(limit));
    }
}

}  // namespace

bool is_trivial(const KCircularMatroid& m) {
    const MultiGraph& g = m.graph();
    std::vector<int> all = all_edges(g);
    if (m.k() >= 1) {
        return m.k() > delta_of(g, all) + tree_component_count(g, all);
    }
    // k = 0: E is a base iff G is a forest; E is a cobase iff every edge is
    // a loop of the matroid, i.e. a loop of G.
    bool forest = true;
    for (const auto& comp : component_edge_lists(g, all)) {
        if (delta_of(g, comp) >= 0) forest = false;
    }
    if (forest) return true;
    bool all_loops = true;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.is_loop(e)) all_loops = false;
    }
    return all_loops;
}

bool is_independent(const KCircularMatroid& m, const EdgeSet& x) {
    return independent_indices(m, m.graph().edge_indices(x));
}

int rank_of(const KCircularMatroid& m, const EdgeSet& x) {
    std::vector<int> current;
    for (int e : m.graph().edge_indices(x)) {
        current.push_back(e);
        if (!independent_indices(m, current)) current.pop_back();
    }
    return static_cast<int>(current.size());
}

bool is_circuit(const KCircularMatroid& m, const EdgeSet& x) {
    return circuit_indices(m, m.graph().edge_indices(x));
}

std::vector<EdgeSet> circuits(const KCircularMatroid& m, int limit) {
    require_enumerable(m, limit);
    const MultiGraph& g = m.graph();
    int n = g.edge_count();
    std::vector<EdgeSet> out;
    std::vector<int> edges;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        edges.clear();
        for (uint32_t rest = mask; rest; rest &= rest - 1) {
            edges.push_back(std::countr_zero(rest));
        }
        if (circuit_indices(m, edges)) out.push_back(g.edge_set_of(edges));
    }
    sort_edge_sets(out);
    return out;
}

namespace {

bool base_indices(const KCircularMatroid& m, const std::vector<int>& x) {
    const MultiGraph& g = m.graph();
    if (m.k() >= 1 && is_connected_matroid(m)) {
        if (delta_of(g, x) != m.k() - 1) return false;
        if (static_cast<int>(vertex_span(g, x).size()) != g.vertex_count()) return false;
        for (const auto& comp : component_edge_lists(g, x)) {
            if (delta_of(g, comp) < 0) return false;
        }
        return true;
    }
    if (!independent_indices(m, x)) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (sorted_contains(x, e)) continue;
        if (independent_indices(m, sorted_union(x, {e}))) return false;
    }
    return true;
}

}  // namespace

bool is_base(const KCircularMatroid& m, const EdgeSet& x) {
    return base_indices(m, m.graph().edge_indices(x));
}

std::vector<EdgeSet> bases(const KCircularMatroid& m, int limit) {
    require_enumerable(m, limit);
    const MultiGraph& g = m.graph();
    int n = g.edge_count();
    std::vector<EdgeSet> out;
    std::vector<int> edges;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        edges.clear();
        for (uint32_t rest = mask; rest; rest &= rest - 1) {
            edges.push_back(std::countr_zero(rest));
        }
        if (base_indices(m, edges)) out.push_back(g.edge_set_of(edges));
    }
    sort_edge_sets(out);
    return out;
}

EdgeSet find_base(const KCircularMatroid& m) {
    const MultiGraph& g = m.graph();
    std::vector<int> current;
    for (int e = 0; e < g.edge_count(); ++e) {
        current.push_back(e);
        if (!independent_indices(m, current)) current.pop_back();
    }
    return g.edge_set_of(current);
}

EdgeSet coloops(const KCircularMatroid& m) {
    if (is_trivial(m)) {
        fail("TrivialMatroid", "every edge of a trivial matroid is a coloop");
    }
    const MultiGraph& g = m.graph();
    if (m.k() == 0) {
        // Cycle-matroid coloops are the bridges.
        EdgeSet out;
        std::vector<int> all = all_edges(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (detail::is_bridge_in(g, all, e)) out.insert(g.edge_id(e));
        }
        return out;
    }
    return edge_set_minus(g.edge_set(), core(g, g.edge_set()));
}

bool is_connected_matroid(const KCircularMatroid& m) {
    if (m.k() < 1) {
        fail("PreconditionViolated", "matroid connectivity test needs k >= 1");
    }
    if (is_trivial(m)) return false;
    const MultiGraph& g = m.graph();
    if (!is_cacti(g, g.edge_set())) return false;
    if (m.k() == 1) {
        return detail::is_connected_subgraph(g, all_edges(g));
    }
    return true;
}

std::vector<EdgeSet> matroid_components_k1(const KCircularMatroid& m) {
    const MultiGraph& g = m.graph();
    if (m.k() != 1 || is_trivial(m) || !is_cacti(g, g.edge_set())) {
        fail("PreconditionViolated",
             "needs k = 1, a nontrivial matroid, and a cacti-graph");
    }
    return components(g, g.edge_set());
}

EdgeSet fundamental_circuit(const KCircularMatroid& m, const EdgeSet& b, const EdgeId& e) {
    const MultiGraph& g = m.graph();
    int ei = g.edge_index(e);
    if (b.count(e)) {
        fail("EdgeInBase", "edge '" + e + "' already belongs to the base");
    }
    if (!is_base(m, b)) {
        fail("NotABase", "the given set is not a base");
    }
    std::vector<int> current = sorted_union(g.edge_indices(b), {ei});
    // Delete edges (canonical order) while the set stays dependent; the
    // unique circuit through e inside b + e is what survives.
    for (int u : std::vector<int>(current)) {
        if (u == ei) continue;
        std::vector<int> without = sorted_minus(current, {u});
        if (!independent_indices(m, without)) current = std::move(without);
    }
    return g.edge_set_of(current);
}

const char* to_string(CocircuitKind kind) {
    switch (kind) {
        case CocircuitKind::Type1: return "type1";
        case CocircuitKind::Type2: return "type2";
        case CocircuitKind::Type3: return "type3";
    }
    return "?";
}

namespace {

struct RootedBase {
    std::vector<int> base_edges;
    std::vector<int> component;  // edges of the component A of G<b> with e
    std::vector<int> kernel;     // leaf-stripped component
    int component_delta = 0;
    int root = -1;
};

RootedBase analyze_rooted_base(const KCircularMatroid& m, const EdgeSet& b,
                               const EdgeId& e) {
    const MultiGraph& g = m.graph();
    RootedBase rb;
    rb.root = g.edge_index(e);
    if (!is_connected_matroid(m)) {
        fail("NotConnected", "cocircuit formulas need a connected matroid");
    }
    if (!b.count(e)) {
        fail("EdgeNotInBase", "edge '" + e + "' is not in the base");
    }
    if (!is_base(m, b)) {
        fail("NotABase", "the given set is not a base");
    }
    rb.base_edges = g.edge_indices(b);
    for (const auto& comp : component_edge_lists(g, rb.base_edges)) {
        if (sorted_contains(comp, rb.root)) {
            rb.component = comp;
            break;
        }
    }
    rb.component_delta = delta_of(g, rb.component);
    rb.kernel = strip_leaves(g, rb.component);
    return rb;
}

}  // namespace

CocircuitKind cocircuit_kind(const KCircularMatroid& m, const EdgeSet& b, const EdgeId& e) {
    RootedBase rb = analyze_rooted_base(m, b, e);
    if (!sorted_contains(rb.kernel, rb.root)) return CocircuitKind::Type1;
    return rb.component_delta == 0 ? CocircuitKind::Type2 : CocircuitKind::Type3;
}

EdgeSet fundamental_cocircuit(const KCircularMatroid& m, const EdgeSet& b, const EdgeId& e) {
    const MultiGraph& g = m.graph();
    RootedBase rb = analyze_rooted_base(m, b, e);
    EdgeSet cobase = edge_set_minus(g.edge_set(), b);

    if (sorted_contains(rb.kernel, rb.root) && rb.component_delta >= 1) {
        return edge_set_union(cobase, EdgeSet{e});  // type 3
    }

    std::vector<int> marked;  // vertices whose touching cobase edges join in
    if (!sorted_contains(rb.kernel, rb.root)) {
        // Type 1: of the two components of A - e exactly one is a tree
        // (possibly a single vertex); collect its vertex set.
        std::vector<int> rest = sorted_minus(rb.component, {rb.root});
        detail::Dsu dsu(g.vertex_count());
        for (int f : rest) {
            auto [u, v] = g.ends(f);
            dsu.unite(u, v);
        }
        std::vector<int> span = vertex_span(g, rb.component);
        auto [ru, rv] = g.ends(rb.root);
        std::vector<int> side_vertices[2];
        std::vector<int> side_edges[2];
        for (int v : span) {
            side_vertices[dsu.find(v) == dsu.find(ru) ? 0 : 1].push_back(v);
        }
        for (int f : rest) {
            side_edges[dsu.find(g.ends(f).first) == dsu.find(ru) ? 0 : 1].push_back(f);
        }
        int tree_side = -1;
        for (int s = 0; s < 2; ++s) {
            if (static_cast<int>(side_edges[s].size()) ==
                static_cast<int>(side_vertices[s].size()) - 1) {
                tree_side = s;
            }
        }
        if (tree_side < 0 || side_vertices[1 - tree_side].empty()) {
            fail("InternalInvariantViolated", "type-1 split should leave one tree side");
        }
        marked = side_vertices[tree_side];
    } else {
        marked = vertex_span(g, rb.component);  // type 2: all of V(A)
    }

    std::vector<char> in_marked(g.vertex_count(), 0);
    for (int v : marked) in_marked[v] = 1;
    EdgeSet out{e};
    for (const EdgeId& uid : cobase) {
        int u = g.edge_index(uid);
        auto [a, bv] = g.ends(u);
        if (in_marked[a] || in_marked[bv]) out.insert(uid);
    }
    return out;
}

EdgeSet base_core(const KCircularMatroid& m, const EdgeSet& b) {
    if (m.k() < 2) {
        fail("KMustBeAtLeast2", "the core of a base is defined for k >= 2 only");
    }
    if (!is_connected_matroid(m)) {
        fail("NotConnected", "the core of a base needs a connected matroid");
    }
    if (!is_base(m, b)) {
        fail("NotABase", "the given set is not a base");
    }
    return core(m.graph(), b);
}

}  // namespace kcirc
