#include "kcirc/ears.hpp"

#include <algorithm>
#include <optional>

#include "subgraph.hpp"

namespace kcirc {

using detail::bfs_path;
using detail::component_edge_lists;
using detail::delta_of;
using detail::has_leaf;
using detail::is_connected_subgraph;
using detail::is_cycle_edges;
using detail::sorted_contains;
using detail::sorted_minus;
using detail::sorted_union;
using detail::subgraph_degrees;
using detail::vertex_span;

const char* to_string(EarKind kind) {
    switch (kind) {
        case EarKind::Path: return "path";
        case EarKind::Lollipop: return "lollipop";
        case EarKind::Cycle: return "cycle";
        case EarKind::Bicycle: return "bicycle";
    }
    return "?";
}

namespace {

std::vector<int> all_edges(const MultiGraph& g) {
    std::vector<int> out(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) out[i] = i;
    return out;
}

// Degree profile helpers; `want` maps degree -> exact count, all other
// degrees must be 2.
bool degree_profile(const MultiGraph& g, const std::vector<int>& x, int deg_a,
                    int count_a, int deg_b, int count_b) {
    std::vector<int> span = vertex_span(g, x);
    int seen_a = 0, seen_b = 0;
    for (int d : subgraph_degrees(g, x, span)) {
        if (d == deg_a && seen_a < count_a) {
            ++seen_a;
        } else if (d == deg_b && seen_b < count_b) {
            ++seen_b;
        } else if (d != 2) {
            return false;
        }
    }
    return seen_a == count_a && seen_b == count_b;
}

bool path_indices(const MultiGraph& g, const std::vector<int>& x) {
    if (x.empty() || !is_connected_subgraph(g, x)) return false;
    // two ends of degree 1, interior degree 2; that forces a tree, hence a path
    return degree_profile(g, x, 1, 2, 2, 0);
}

bool lollipop_indices(const MultiGraph& g, const std::vector<int>& x) {
    if (x.empty() || !is_connected_subgraph(g, x)) return false;
    return degree_profile(g, x, 1, 1, 3, 1);
}

bool bicycle_indices(const MultiGraph& g, const std::vector<int>& x) {
    return !x.empty() && is_connected_subgraph(g, x) && !has_leaf(g, x) &&
           delta_of(g, x) == 1;
}

std::vector<int> vertices_of_degree(const MultiGraph& g, const std::vector<int>& x,
                                    int degree) {
    std::vector<int> span = vertex_span(g, x);
    std::vector<int> deg = subgraph_degrees(g, x, span);
    std::vector<int> out;
    for (size_t i = 0; i < span.size(); ++i) {
        if (deg[i] == degree) out.push_back(span[i]);
    }
    return out;
}

std::set<VertexId> vertex_ids_of(const MultiGraph& g, const std::vector<int>& verts) {
    std::set<VertexId> out;
    for (int v : verts) out.insert(g.vertex_id(v));
    return out;
}

std::vector<int> span_intersection(const MultiGraph& g, const std::vector<int>& x,
                                   const std::vector<int>& y) {
    std::vector<int> a = vertex_span(g, x);
    std::vector<int> b = vertex_span(g, y);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

// --- find_bicycle_through machinery -------------------------------------

// Smallest cycle through e inside `edges` (BFS between the endpoints), or
// nothing when e is a bridge there. A loop is its own cycle.
std::optional<std::vector<int>> cycle_through(const MultiGraph& g,
                                              const std::vector<int>& edges, int e) {
    if (g.is_loop(e)) return std::vector<int>{e};
    auto [u, v] = g.ends(e);
    std::vector<int> rest = sorted_minus(edges, {e});
    std::vector<int> path;
    if (!bfs_path(g, rest, {u}, {v}, path)) return std::nullopt;
    return sorted_union(path, {e});
}

// Cyclic walk of a cycle edge set: sequence of (from_vertex, edge) pairs.
std::vector<std::pair<int, int>> cycle_walk(const MultiGraph& g,
                                            const std::vector<int>& cyc) {
    std::vector<std::pair<int, int>> walk;
    std::vector<char> used(g.edge_count(), 0);
    int start = vertex_span(g, cyc)[0];
    int v = start;
    for (;;) {
        int next_edge = -1;
        for (int e : cyc) {
            if (used[e]) continue;
            auto [a, b] = g.ends(e);
            if (a == v || b == v) {
                next_edge = e;
                break;
            }
        }
        if (next_edge < 0) break;
        used[next_edge] = 1;
        walk.emplace_back(v, next_edge);
        auto [a, b] = g.ends(next_edge);
        v = (a == v) ? b : a;
        if (v == start) {
            // either done or (impossible for a cycle) another lap pending
            bool remaining = false;
            for (int e : cyc) {
                if (!used[e]) remaining = true;
            }
            if (!remaining) break;
        }
    }
    return walk;
}

// Theta construction: C a cycle, other a distinct cycle meeting C in >= 2
// vertices. Splits `other` into arcs at the V(C) vertices and joins C with
// the arc containing `prefer` (or the smallest arc not inside C).
std::vector<int> theta_union(const MultiGraph& g, const std::vector<int>& c,
                             const std::vector<int>& other, int prefer) {
    std::vector<int> cverts = vertex_span(g, c);
    auto walk = cycle_walk(g, other);
    int m = static_cast<int>(walk.size());
    int first_marked = -1;
    for (int i = 0; i < m; ++i) {
        if (sorted_contains(cverts, walk[i].first)) {
            first_marked = i;
            break;
        }
    }
    std::vector<std::vector<int>> arcs;
    std::vector<int> arc;
    for (int step = 0; step < m; ++step) {
        int i = (first_marked + step) % m;
        arc.push_back(walk[i].second);
        int to = walk[(i + 1) % m].first;
        if (sorted_contains(cverts, to)) {
            std::sort(arc.begin(), arc.end());
            arcs.push_back(arc);
            arc.clear();
        }
    }
    const std::vector<int>* chosen = nullptr;
    for (const auto& candidate : arcs) {
        if (prefer >= 0 && sorted_contains(candidate, prefer)) {
            chosen = &candidate;
            break;
        }
    }
    if (!chosen) {
        for (const auto& candidate : arcs) {
            bool inside_c = true;
            for (int e : candidate) {
                if (!sorted_contains(c, e)) inside_c = false;
            }
            if (inside_c) continue;
            if (!chosen ||
                edge_set_less(g.edge_set_of(candidate), g.edge_set_of(*chosen))) {
                chosen = &candidate;
            }
        }
    }
    if (!chosen) {
        fail("InternalInvariantViolated", "no usable arc for the theta construction");
    }
    return sorted_union(c, *chosen);
}

// Path-plus-cycle continuation: from `from` inside `edges`, walk to the
// nearest vertex lying on a cycle and append the smallest cycle there.
// Returns path edges joined with the cycle edges.
std::vector<int> lollipop_tail(const MultiGraph& g, const std::vector<int>& edges,
                               int from) {
    std::vector<int> non_bridges;
    for (int e : edges) {
        if (!detail::is_bridge_in(g, edges, e)) non_bridges.push_back(e);
    }
    std::vector<int> cyclic_vertices = vertex_span(g, non_bridges);
    std::vector<int> path;
    int y = -1;
    if (!bfs_path(g, edges, {from}, cyclic_vertices, path, &y)) {
        fail("InternalInvariantViolated", "no cycle reachable for a lollipop tail");
    }
    int cycle_edge = -1;
    for (int e : non_bridges) {
        auto [a, b] = g.ends(e);
        if (a == y || b == y) {
            cycle_edge = e;
            break;
        }
    }
    auto cyc = cycle_through(g, edges, cycle_edge);
    return sorted_union(path, *cyc);
}

// Both target edges are bridges: build cycle + path + cycle through them.
std::vector<int> dumbbell_through_bridges(const MultiGraph& g,
                                          const std::vector<int>& comp, int a, int b) {
    auto side_of = [&](int removed, int mustContainEdge, int mustContainVertex) {
        std::vector<int> rest = sorted_minus(comp, {removed});
        for (const auto& piece : component_edge_lists(g, rest)) {
            if (mustContainEdge >= 0 && sorted_contains(piece, mustContainEdge)) {
                return piece;
            }
            if (mustContainVertex >= 0 &&
                sorted_contains(vertex_span(g, piece), mustContainVertex)) {
                return piece;
            }
        }
        fail("InternalInvariantViolated", "bridge side not found");
    };

    if (a == b) {
        auto [u, v] = g.ends(a);
        std::vector<int> side_u = side_of(a, -1, u);
        std::vector<int> side_v = side_of(a, -1, v);
        std::vector<int> left = lollipop_tail(g, side_u, u);
        std::vector<int> right = lollipop_tail(g, side_v, v);
        return sorted_union(sorted_union(left, right), {a});
    }

    std::vector<int> b_side_of_a = side_of(a, b, -1);
    auto [a1, a2] = g.ends(a);
    bool a1_near = sorted_contains(vertex_span(g, b_side_of_a), a1);
    int a_near = a1_near ? a1 : a2;
    int a_far = a1_near ? a2 : a1;

    std::vector<int> a_side_of_b = side_of(b, a, -1);
    auto [b1, b2] = g.ends(b);
    bool b1_near = sorted_contains(vertex_span(g, a_side_of_b), b1);
    int b_near = b1_near ? b1 : b2;
    int b_far = b1_near ? b2 : b1;

    std::vector<int> middle_edges = sorted_minus(comp, {a, b});
    std::vector<int> q;
    if (a_near != b_near && !bfs_path(g, middle_edges, {a_near}, {b_near}, q)) {
        fail("InternalInvariantViolated", "no path between the two bridges");
    }

    std::vector<int> far_a_side = side_of(a, -1, a_far);
    std::vector<int> far_b_side = side_of(b, -1, b_far);
    std::vector<int> left = lollipop_tail(g, far_a_side, a_far);
    std::vector<int> right = lollipop_tail(g, far_b_side, b_far);

    std::vector<int> out = sorted_union(left, right);
    out = sorted_union(out, q);
    out = sorted_union(out, {a});
    out = sorted_union(out, {b});
    return out;
}

// One edge on a cycle c, the other a bridge: cycle + path over the bridge +
// far cycle.
std::vector<int> dumbbell_cycle_and_bridge(const MultiGraph& g,
                                           const std::vector<int>& comp,
                                           const std::vector<int>& c, int bridge) {
    std::vector<int> rest = sorted_minus(comp, {bridge});
    auto [u, v] = g.ends(bridge);
    std::vector<int> cverts = vertex_span(g, c);
    std::vector<int> side_u, side_v;
    for (const auto& piece : component_edge_lists(g, rest)) {
        std::vector<int> pv = vertex_span(g, piece);
        if (sorted_contains(pv, u)) side_u = piece;
        if (sorted_contains(pv, v)) side_v = piece;
    }
    bool c_with_u = sorted_contains(vertex_span(g, side_u), cverts[0]);
    const std::vector<int>& near_side = c_with_u ? side_u : side_v;
    const std::vector<int>& far_side = c_with_u ? side_v : side_u;
    int near_end = c_with_u ? u : v;
    int far_end = c_with_u ? v : u;

    std::vector<int> path1;
    if (!bfs_path(g, near_side, cverts, {near_end}, path1)) {
        fail("InternalInvariantViolated", "bridge endpoint unreachable from the cycle");
    }
    std::vector<int> tail = lollipop_tail(g, far_side, far_end);
    std::vector<int> out = sorted_union(c, path1);
    out = sorted_union(out, {bridge});
    return sorted_union(out, tail);
}

std::vector<int> find_bicycle_indices(const MultiGraph& g, int ai, int bi) {
    std::vector<int> comp;
    for (const auto& piece : component_edge_lists(g, all_edges(g))) {
        if (sorted_contains(piece, ai)) {
            comp = piece;
            break;
        }
    }
    if (!sorted_contains(comp, bi)) {
        fail("NotSameComponent", "the two edges lie in different components");
    }
    if (has_leaf(g, comp) || delta_of(g, comp) < 1) {
        fail("NotCacti", "the component is not a connected cacti-graph");
    }

    auto ca = cycle_through(g, comp, ai);
    auto cb = cycle_through(g, comp, bi);

    if (!ca && !cb) return dumbbell_through_bridges(g, comp, ai, bi);
    if (ca && !cb) return dumbbell_cycle_and_bridge(g, comp, *ca, bi);
    if (!ca && cb) return dumbbell_cycle_and_bridge(g, comp, *cb, ai);

    // Both edges lie on cycles. Arrange C containing a (and possibly b), and
    // a second distinct cycle C'.
    std::vector<int> c = *ca;
    std::vector<int> other;
    int prefer = -1;
    if (sorted_contains(c, bi)) {
        // both on one cycle; any cycle with an edge outside C will do
        for (int e : sorted_minus(comp, c)) {
            if (auto cyc = cycle_through(g, comp, e)) {
                other = *cyc;
                break;
            }
        }
        if (other.empty()) {
            fail("InternalInvariantViolated", "cacti component with a single cycle");
        }
    } else if (sorted_contains(*cb, ai)) {
        c = *cb;  // one cycle already contains both
        for (int e : sorted_minus(comp, c)) {
            if (auto cyc = cycle_through(g, comp, e)) {
                other = *cyc;
                break;
            }
        }
        if (other.empty()) {
            fail("InternalInvariantViolated", "cacti component with a single cycle");
        }
    } else {
        other = *cb;
        prefer = bi;
    }

    std::vector<int> shared = span_intersection(g, c, other);
    if (shared.size() >= 2) return theta_union(g, c, other, prefer);
    if (shared.size() == 1) return sorted_union(c, other);  // butterfly

    // Disjoint cycles: connect them by a shortest path.
    std::vector<int> connector;
    if (!bfs_path(g, comp, vertex_span(g, c), vertex_span(g, other), connector)) {
        fail("InternalInvariantViolated", "component claims to be connected");
    }
    return sorted_union(sorted_union(c, other), connector);
}

// --- assembly machinery ---------------------------------------------------

Ear make_ear(const MultiGraph& g, EarKind kind, const std::vector<int>& edges,
             const std::vector<int>& attachment) {
    return Ear{kind, g.edge_set_of(edges), vertex_ids_of(g, attachment)};
}

// Grows one ear from the stage: start at the smallest frontier vertex with an
// unused edge and extend along smallest unused edges until the walk returns
// to the stage (path/cycle) or to itself (lollipop).
Ear grow_ear(const MultiGraph& g, const std::vector<int>& cum,
             const std::vector<int>& frontier) {
    std::vector<char> in_cum_edge(g.edge_count(), 0);
    for (int e : cum) in_cum_edge[e] = 1;
    std::vector<int> cum_verts = vertex_span(g, cum);

    int x = -1;
    for (int v : frontier) {
        for (int e : g.incident_edges(v)) {
            if (!in_cum_edge[e]) {
                x = v;
                break;
            }
        }
        if (x >= 0) break;
    }
    if (x < 0) {
        fail("InternalInvariantViolated", "no frontier vertex has an unused edge");
    }

    std::vector<int> path;                      // edges of the walk, in walk order
    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<char> used(g.edge_count(), 0);
    on_path[x] = 1;
    int w = x;
    auto close = [&](int last) {
        std::vector<int> ear_edges = path;
        ear_edges.push_back(last);
        std::sort(ear_edges.begin(), ear_edges.end());
        return ear_edges;
    };
    for (;;) {
        int chosen = -1;
        for (int e : g.incident_edges(w)) {
            if (!in_cum_edge[e] && !used[e]) {
                chosen = e;
                break;
            }
        }
        if (chosen < 0) {
            fail("InternalInvariantViolated", "walk stuck at a leaf of a cacti-graph");
        }
        auto [a, b] = g.ends(chosen);
        int z = (a == w) ? b : a;
        if (sorted_contains(cum_verts, z)) {
            if (z == x) return make_ear(g, EarKind::Cycle, close(chosen), {x});
            std::vector<int> att{std::min(x, z), std::max(x, z)};
            return make_ear(g, EarKind::Path, close(chosen), att);
        }
        if (on_path[z]) {
            return make_ear(g, EarKind::Lollipop, close(chosen), {x});
        }
        used[chosen] = 1;
        path.push_back(chosen);
        on_path[z] = 1;
        w = z;
    }
}

bool cacti_indices(const MultiGraph& g, const std::vector<int>& x) {
    if (x.empty() || has_leaf(g, x)) return false;
    for (const auto& comp : component_edge_lists(g, x)) {
        if (delta_of(g, comp) < 1) return false;
    }
    return true;
}

Ear next_ear(const MultiGraph& g, const std::vector<int>& cum,
             const std::vector<std::vector<int>>& graph_components) {
    // A bare-cycle stage component (only possible at stage 0) must be grown
    // before anything else, or the next stage would keep a cycle component.
    for (const auto& comp : component_edge_lists(g, cum)) {
        if (delta_of(g, comp) == 0) return grow_ear(g, cum, vertex_span(g, comp));
    }
    std::vector<int> cum_verts = vertex_span(g, cum);
    for (const auto& comp : graph_components) {
        std::vector<int> comp_verts = vertex_span(g, comp);
        std::vector<int> meet;
        std::set_intersection(comp_verts.begin(), comp_verts.end(), cum_verts.begin(),
                              cum_verts.end(), std::back_inserter(meet));
        if (meet.empty()) {
            std::vector<int> bicycle =
                find_bicycle_indices(g, comp.front(), comp.front());
            return make_ear(g, EarKind::Bicycle, bicycle, {});
        }
    }
    return grow_ear(g, cum, cum_verts);
}

bool is_2connected_indices(const MultiGraph& g, const std::vector<int>& x) {
    std::vector<int> span = vertex_span(g, x);
    if (span.size() < 2 || !is_connected_subgraph(g, x)) return false;
    for (int e : x) {
        if (g.is_loop(e)) return false;
    }
    if (span.size() == 2) return x.size() >= 2;
    for (int v : span) {
        std::vector<int> rest;
        for (int e : x) {
            auto [a, b] = g.ends(e);
            if (a != v && b != v) rest.push_back(e);
        }
        detail::Dsu dsu(g.vertex_count());
        for (int e : rest) {
            auto [a, b] = g.ends(e);
            dsu.unite(a, b);
        }
        // every remaining vertex must fold into a single component
        int classes = 0;
        std::vector<char> seen(g.vertex_count(), 0);
        for (int w : span) {
            if (w == v) continue;
            int r = dsu.find(w);
            if (!seen[r]) {
                seen[r] = 1;
                ++classes;
            }
        }
        if (classes != 1) return false;
    }
    return true;
}

}  // namespace

bool is_path_set(const MultiGraph& g, const EdgeSet& x) {
    return path_indices(g, g.edge_indices(x));
}

bool is_cycle_set(const MultiGraph& g, const EdgeSet& x) {
    return is_cycle_edges(g, g.edge_indices(x));
}

bool is_lollipop_set(const MultiGraph& g, const EdgeSet& x) {
    return lollipop_indices(g, g.edge_indices(x));
}

bool is_bicycle_set(const MultiGraph& g, const EdgeSet& x) {
    return bicycle_indices(g, g.edge_indices(x));
}

EarAssembly ear_assembly(const MultiGraph& g, const EdgeSet& g0) {
    std::vector<int> all = all_edges(g);
    if (!cacti_indices(g, all)) {
        fail("PreconditionViolated", "the target graph is not a cacti-graph");
    }
    std::vector<int> cum = g.edge_indices(g0);
    if (!cacti_indices(g, cum) && !is_cycle_edges(g, cum)) {
        fail("PreconditionViolated", "the start is neither a cacti-graph nor a cycle");
    }

    EarAssembly assembly{g0, {}};
    std::vector<std::vector<int>> graph_components = component_edge_lists(g, all);
    while (cum.size() < all.size()) {
        Ear ear = next_ear(g, cum, graph_components);
        cum = sorted_union(cum, g.edge_indices(ear.edges));
        assembly.ears.push_back(std::move(ear));
    }
    return assembly;
}

EarAssembly ear_assembly_2conn(const MultiGraph& g, const EdgeSet& g0) {
    std::vector<int> all = all_edges(g);
    std::vector<int> cum = g.edge_indices(g0);
    if (!is_2connected_indices(g, all) || !is_2connected_indices(g, cum)) {
        fail("PreconditionViolated", "both graph and start must be 2-connected");
    }

    EarAssembly assembly{g0, {}};
    while (cum.size() < all.size()) {
        std::vector<char> in_cum(g.edge_count(), 0);
        for (int e : cum) in_cum[e] = 1;
        std::vector<int> cum_verts = vertex_span(g, cum);

        int u = -1, first = -1;
        for (int v : cum_verts) {
            for (int e : g.incident_edges(v)) {
                if (!in_cum[e]) {
                    u = v;
                    first = e;
                    break;
                }
            }
            if (u >= 0) break;
        }
        if (u < 0) {
            fail("InternalInvariantViolated", "no unused edge at the stage boundary");
        }
        auto [a, b] = g.ends(first);
        int v = (a == u) ? b : a;

        std::vector<int> ear_edges{first};
        int y;
        if (sorted_contains(cum_verts, v)) {
            y = v;
        } else {
            // complete the ear avoiding u, so End(P) has two distinct vertices
            std::vector<int> without_u;
            for (int e : all) {
                auto [p, q] = g.ends(e);
                if (p != u && q != u) without_u.push_back(e);
            }
            std::vector<int> targets;
            for (int w : cum_verts) {
                if (w != u) targets.push_back(w);
            }
            std::vector<int> tail;
            if (!bfs_path(g, without_u, {v}, targets, tail, &y)) {
                fail("InternalInvariantViolated", "2-connected graph lost a return path");
            }
            ear_edges = sorted_union(ear_edges, tail);
        }
        Ear ear = make_ear(g, EarKind::Path, ear_edges, {std::min(u, y), std::max(u, y)});
        cum = sorted_union(cum, g.edge_indices(ear.edges));
        assembly.ears.push_back(std::move(ear));
    }
    return assembly;
}

EdgeSet find_bicycle_through(const MultiGraph& g, const EdgeId& a, const EdgeId& b) {
    return g.edge_set_of(find_bicycle_indices(g, g.edge_index(a), g.edge_index(b)));
}

EdgeSet cacti_subgraph_through(const MultiGraph& g, const EdgeId& a, const EdgeId& b,
                               int k) {
    std::vector<int> all = all_edges(g);
    if (!cacti_indices(g, all)) {
        fail("NotCacti", "the graph is not a cacti-graph");
    }
    int ai = g.edge_index(a);
    int bi = g.edge_index(b);
    bool same_component = false;
    for (const auto& comp : component_edge_lists(g, all)) {
        if (sorted_contains(comp, ai)) same_component = sorted_contains(comp, bi);
    }
    int lo = same_component ? 1 : 2;
    int total = delta_of(g, all);
    if (k < lo || k > total) {
        fail("KOutOfRange", "k must lie in [" + std::to_string(lo) + "," +
                                std::to_string(total) + "]");
    }

    std::vector<int> start;
    if (same_component) {
        start = find_bicycle_indices(g, ai, bi);
    } else {
        start = sorted_union(find_bicycle_indices(g, ai, ai),
                             find_bicycle_indices(g, bi, bi));
    }
    if (delta_of(g, start) == k) return g.edge_set_of(start);

    EarAssembly assembly = ear_assembly(g, g.edge_set_of(start));
    std::vector<int> cum = start;
    for (const Ear& ear : assembly.ears) {
        cum = sorted_union(cum, g.edge_indices(ear.edges));
        if (delta_of(g, cum) == k) return g.edge_set_of(cum);
    }
    fail("InternalInvariantViolated", "assembly never reached the requested delta");
}

EdgeSet grow_circuit(const KCircularMatroid& m, const EdgeSet& c) {
    const MultiGraph& g = m.graph();
    int k = m.k();
    if (k < 2) {
        fail("PreconditionViolated", "circuit growth needs k >= 2");
    }
    std::vector<int> base = g.edge_indices(c);
    if (delta_of(g, base) != k - 1 || !cacti_indices(g, base)) {
        fail("PreconditionViolated", "the given set is not a (k-1)-circuit");
    }
    std::vector<int> rest = sorted_minus(all_edges(g), base);
    int n = static_cast<int>(rest.size());
    if (n > kDefaultEnumerationLimit) {
        fail("EnumerationLimitExceeded", "too many candidate ear edges");
    }
    std::vector<int> base_verts = vertex_span(g, base);

    auto valid_ear = [&](const std::vector<int>& p) {
        std::vector<int> meet = span_intersection(g, base, p);
        if (path_indices(g, p)) {
            std::vector<int> ends = vertices_of_degree(g, p, 1);
            return meet == ends;
        }
        if (lollipop_indices(g, p)) {
            return meet == vertices_of_degree(g, p, 1);
        }
        if (is_cycle_edges(g, p)) {
            return meet.size() == 1;
        }
        if (bicycle_indices(g, p)) {
            return meet.empty();
        }
        return false;
    };

    // canonical order: by size, then lexicographic over the sorted rest edges
    for (int size = 1; size <= n; ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            std::vector<int> p;
            p.reserve(size);
            for (int i : pick) p.push_back(rest[i]);
            if (valid_ear(p)) return g.edge_set_of(sorted_union(base, p));
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    fail("NoExtensionExists", "no ear extends the circuit inside this graph");
}

bool validate_assembly(const MultiGraph& g, const EarAssembly& assembly) {
    try {
        std::vector<int> cum = g.edge_indices(assembly.start);
        if (!cacti_indices(g, cum) && !is_cycle_edges(g, cum)) return false;
        for (const Ear& ear : assembly.ears) {
            std::vector<int> p = g.edge_indices(ear.edges);
            if (p.empty()) return false;
            for (int e : p) {
                if (sorted_contains(cum, e)) return false;
            }
            std::vector<int> meet = span_intersection(g, cum, p);
            std::set<VertexId> meet_ids = vertex_ids_of(g, meet);
            switch (ear.kind) {
                case EarKind::Path:
                    if (!path_indices(g, p)) return false;
                    if (meet != vertices_of_degree(g, p, 1)) return false;
                    break;
                case EarKind::Lollipop:
                    if (!lollipop_indices(g, p)) return false;
                    if (meet != vertices_of_degree(g, p, 1)) return false;
                    break;
                case EarKind::Cycle:
                    if (!is_cycle_edges(g, p)) return false;
                    if (meet.size() != 1) return false;
                    break;
                case EarKind::Bicycle:
                    if (!bicycle_indices(g, p)) return false;
                    if (!meet.empty()) return false;
                    break;
            }
            if (ear.attachment != meet_ids) return false;
            std::vector<int> next = sorted_union(cum, p);
            if (delta_of(g, next) != delta_of(g, cum) + 1) return false;
            if (!cacti_indices(g, next)) return false;
            cum = std::move(next);
        }
        return true;
    } catch (const error&) {
        return false;
    }
}

}  // namespace kcirc
