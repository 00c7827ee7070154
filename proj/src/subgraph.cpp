#include "subgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace kcirc::detail {

std::vector<int> vertex_span(const MultiGraph& g, const std::vector<int>& x) {
    std::vector<int> span;
    span.reserve(2 * x.size());
    for (int e : x) {
        auto [u, v] = g.ends(e);
        span.push_back(u);
        if (v != u) span.push_back(v);
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    return span;
}

int delta_of(const MultiGraph& g, const std::vector<int>& x) {
    return static_cast<int>(x.size()) - static_cast<int>(vertex_span(g, x).size());
}

std::vector<std::vector<int>> component_edge_lists(const MultiGraph& g,
                                                   const std::vector<int>& x) {
    if (x.empty()) return {};
    Dsu dsu(g.vertex_count());
    for (int e : x) {
        auto [u, v] = g.ends(e);
        dsu.unite(u, v);
    }
    std::map<int, std::vector<int>> by_root;
    for (int e : x) by_root[dsu.find(g.ends(e).first)].push_back(e);

    std::vector<std::vector<int>> comps;
    comps.reserve(by_root.size());
    for (auto& [root, edges] : by_root) comps.push_back(std::move(edges));
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return g.edge_id(a[i]) < g.edge_id(b[i]);
        }
        return false;
    });
    return comps;
}

std::vector<int> subgraph_degrees(const MultiGraph& g, const std::vector<int>& x,
                                  const std::vector<int>& span) {
    std::vector<int> deg(span.size(), 0);
    auto pos = [&](int v) {
        return static_cast<int>(std::lower_bound(span.begin(), span.end(), v) - span.begin());
    };
    for (int e : x) {
        auto [u, v] = g.ends(e);
        deg[pos(u)] += 1;
        deg[pos(v)] += 1;  // a loop contributes 2 to its single endpoint
    }
    return deg;
}

bool has_leaf(const MultiGraph& g, const std::vector<int>& x) {
    std::vector<int> span = vertex_span(g, x);
    for (int d : subgraph_degrees(g, x, span)) {
        if (d == 1) return true;
    }
    return false;
}

std::vector<int> strip_leaves(const MultiGraph& g, std::vector<int> x) {
    for (;;) {
        std::vector<int> span = vertex_span(g, x);
        std::vector<int> deg = subgraph_degrees(g, x, span);
        std::vector<char> is_leaf_vertex(g.vertex_count(), 0);
        bool any = false;
        for (size_t i = 0; i < span.size(); ++i) {
            if (deg[i] == 1) {
                is_leaf_vertex[span[i]] = 1;
                any = true;
            }
        }
        if (!any) return x;
        std::vector<int> kept;
        kept.reserve(x.size());
        for (int e : x) {
            auto [u, v] = g.ends(e);
            if (!is_leaf_vertex[u] && !is_leaf_vertex[v]) kept.push_back(e);
        }
        x = std::move(kept);
        if (x.empty()) return x;
    }
}

bool is_connected_subgraph(const MultiGraph& g, const std::vector<int>& x) {
    return component_edge_lists(g, x).size() == 1;
}

bool is_cycle_edges(const MultiGraph& g, const std::vector<int>& x) {
    if (x.empty() || !is_connected_subgraph(g, x)) return false;
    std::vector<int> span = vertex_span(g, x);
    for (int d : subgraph_degrees(g, x, span)) {
        if (d != 2) return false;
    }
    return true;
}

bool is_bridge_in(const MultiGraph& g, const std::vector<int>& x, int e) {
    if (g.is_loop(e)) return false;
    std::vector<int> rest = sorted_minus(x, {e});
    Dsu dsu(g.vertex_count());
    for (int f : rest) {
        auto [u, v] = g.ends(f);
        dsu.unite(u, v);
    }
    auto [u, v] = g.ends(e);
    return dsu.find(u) != dsu.find(v);
}

bool bfs_path(const MultiGraph& g, const std::vector<int>& x,
              const std::vector<int>& from, const std::vector<int>& to,
              std::vector<int>& path_edges, int* reached, int* started) {
    std::vector<std::vector<int>> inc(g.vertex_count());
    for (int e : x) {
        auto [u, v] = g.ends(e);
        inc[u].push_back(e);
        if (v != u) inc[v].push_back(e);
    }
    std::vector<char> is_target(g.vertex_count(), 0);
    for (int v : to) is_target[v] = 1;

    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<int> parent_vertex(g.vertex_count(), -1);
    std::vector<int> origin(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> queue;
    for (int v : from) {  // `from` is sorted, so seeding order is canonical
        if (!seen[v]) {
            seen[v] = 1;
            origin[v] = v;
            queue.push_back(v);
        }
    }

    auto emit = [&](int v) {
        path_edges.clear();
        int cur = v;
        while (parent_edge[cur] != -1) {
            path_edges.push_back(parent_edge[cur]);
            cur = parent_vertex[cur];
        }
        std::sort(path_edges.begin(), path_edges.end());
        if (reached) *reached = v;
        if (started) *started = cur;
        return true;
    };

    for (int v : from) {
        if (is_target[v]) return emit(v);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : inc[v]) {
            auto [a, b] = g.ends(e);
            int w = (a == v) ? b : a;
            if (seen[w]) continue;
            seen[w] = 1;
            parent_edge[w] = e;
            parent_vertex[w] = v;
            origin[w] = origin[v];
            if (is_target[w]) return emit(w);
            queue.push_back(w);
        }
    }
    return false;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sorted_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sorted_contains(const std::vector<int>& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

}  // namespace kcirc::detail
