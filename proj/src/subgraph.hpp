#pragma once

// Internal helpers for computations on edge-induced subgraphs G<X>.
// Everything works on sorted vectors of edge indices; callers translate
// to/from EdgeSet at the module boundary.

#include <vector>

#include "kcirc/multigraph.hpp"

namespace kcirc::detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Vertex indices incident to at least one edge of x, sorted.
std::vector<int> vertex_span(const MultiGraph& g, const std::vector<int>& x);

/// |x| - |V(G<x>)|; 0 for the empty set.
int delta_of(const MultiGraph& g, const std::vector<int>& x);

/// Edge lists of the connected components of G<x>, each sorted; the list
/// itself in canonical (size, then lexicographic) order.
std::vector<std::vector<int>> component_edge_lists(const MultiGraph& g,
                                                   const std::vector<int>& x);

/// Degree within G<x> for every vertex of vertex_span(g, x); loops count
/// twice. Returned parallel to the span vector.
std::vector<int> subgraph_degrees(const MultiGraph& g, const std::vector<int>& x,
                                  const std::vector<int>& span);

bool has_leaf(const MultiGraph& g, const std::vector<int>& x);

/// Iterated leaf deletion: repeatedly removes edges incident to a degree-1
/// vertex until none remain. May return an empty vector (trees vanish).
std::vector<int> strip_leaves(const MultiGraph& g, std::vector<int> x);

bool is_connected_subgraph(const MultiGraph& g, const std::vector<int>& x);

/// True when G<x> is a cycle: connected, nonempty, every vertex of degree 2.
/// A single loop is a cycle.
bool is_cycle_edges(const MultiGraph& g, const std::vector<int>& x);

/// True when e (non-loop) disconnects its endpoints within G<x>.
bool is_bridge_in(const MultiGraph& g, const std::vector<int>& x, int e);

/// Shortest path between two vertex sets inside G<x>, found by a BFS that
/// scans incident edges in canonical order (deterministic). Fills path_edges
/// with the sorted edge indices of the path; returns false when unreachable.
/// A vertex in both sets yields an empty path.
bool bfs_path(const MultiGraph& g, const std::vector<int>& x,
              const std::vector<int>& from, const std::vector<int>& to,
              std::vector<int>& path_edges, int* reached = nullptr,
              int* started = nullptr);

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_minus(const std::vector<int>& a, const std::vector<int>& b);
bool sorted_contains(const std::vector<int>& a, int v);

}  // namespace kcirc::detail
