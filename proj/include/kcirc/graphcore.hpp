#pragma once

#include <vector>

#include "kcirc/multigraph.hpp"

namespace kcirc {

/// The subgraph G<X> induced by an edge set: its vertices are exactly the
/// endpoints of member edges, so it never has isolated vertices.
struct SubgraphView {
    const MultiGraph* parent;
    EdgeSet edges;
    std::set<VertexId> vertices;
};

SubgraphView induced_subgraph(const MultiGraph& g, const EdgeSet& x);

/// delta(G<X>) = |X| - |V(G<X>)|. Empty set gives 0. Per connected
/// component: -1 for a tree, 0 with exactly one cycle, >= 1 with two or more.
int delta(const MultiGraph& g, const EdgeSet& x);

/// Edge sets of the connected components of G<X>, canonically ordered.
std::vector<EdgeSet> components(const MultiGraph& g, const EdgeSet& x);

/// Union of the iterated-leaf-deletion fixpoints of the components A of G<X>
/// with delta(A) >= 0. Throws KernelUndefined when every component is a tree.
EdgeSet kernel(const MultiGraph& g, const EdgeSet& x);

/// Union of the leaf-stripped components with delta(A) >= 1: the edge set of
/// the unique maximum cacti-subgraph of G<X>. Throws CoreUndefined when every
/// component has at most one cycle.
EdgeSet core(const MultiGraph& g, const EdgeSet& x);

/// True iff deleting e strictly increases the number of tree components of g
/// (an isolated vertex left behind counts as a tree component). When the core
/// of g exists this is equivalent to e not belonging to it.
bool coloop_edge_test(const MultiGraph& g, const EdgeId& e);

/// True iff x is nonempty, G<x> has no leaves, and every component has at
/// least two cycles (delta >= 1).
bool is_cacti(const MultiGraph& g, const EdgeSet& x);

enum class BicycleKind { Theta, Dumbbell, Butterfly };

const char* to_string(BicycleKind kind);

/// Classifies a bicycle (connected, leafless, delta = 1). A bicycle has
/// either one degree-4 vertex (butterfly) or two degree-3 vertices; the
/// latter split into theta (bridgeless) and dumbbell (bridged).
/// Throws NotABicycle when x is not a bicycle.
BicycleKind classify_bicycle(const MultiGraph& g, const EdgeSet& x);

/// True iff g and h (same edge identifiers) have equal multisets of vertex
/// stars, which holds exactly when they are strongly isomorphic.
/// Throws EdgeSetMismatch when the edge universes differ.
bool strongly_isomorphic(const MultiGraph& g, const MultiGraph& h);

}  // namespace kcirc
