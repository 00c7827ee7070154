#pragma once

#include <set>
#include <vector>

#include "kcirc/kcirc.hpp"
#include "kcirc/multigraph.hpp"

namespace kcirc {

enum class EarKind { Path, Lollipop, Cycle, Bicycle };

const char* to_string(EarKind kind);

/// One step of a splitter-theorem assembly. The attachment is the vertex set
/// shared with the previous stage: End(P) for a path (2 vertices) or a
/// lollipop (1), a single vertex for a cycle, empty for a bicycle.
struct Ear {
    EarKind kind;
    EdgeSet edges;
    std::set<VertexId> attachment;
};

/// Stages grow from `start` by one ear at a time; each step raises delta by
/// exactly 1 and keeps the cumulative union a cacti-graph.
struct EarAssembly {
    EdgeSet start;
    std::vector<Ear> ears;
};

// Shape predicates on edge-induced subgraphs.
bool is_path_set(const MultiGraph& g, const EdgeSet& x);
bool is_cycle_set(const MultiGraph& g, const EdgeSet& x);
bool is_lollipop_set(const MultiGraph& g, const EdgeSet& x);
bool is_bicycle_set(const MultiGraph& g, const EdgeSet& x);

/// Ear assembly of a cacti-graph g from a starting subgraph that is either a
/// cacti-graph or a single cycle. Deterministic: paths grow from the
/// smallest frontier vertex along the smallest unused edge, disjoint
/// components are seeded with bicycles in canonical order.
/// Throws PreconditionViolated.
EarAssembly ear_assembly(const MultiGraph& g, const EdgeSet& g0);

/// Splitter for 2-connected graphs: path ears only. A new ear is the
/// smallest unused edge at the smallest frontier vertex, completed by a
/// shortest path back to the stage that avoids the edge's stage endpoint.
/// Throws PreconditionViolated.
EarAssembly ear_assembly_2conn(const MultiGraph& g, const EdgeSet& g0);

/// A bicycle (theta, dumbbell, or butterfly) through edges a and b, which
/// must lie in a common component that is a connected cacti-graph. Follows
/// the constructive case split: two cycles joined directly, one cycle plus a
/// lollipop, or two lollipops around a bridge path.
/// Throws NotSameComponent / NotCacti.
EdgeSet find_bicycle_through(const MultiGraph& g, const EdgeId& a, const EdgeId& b);

/// A subgraph F with a, b in F, F a cacti-graph, delta(F) = k; built by
/// truncating an ear assembly grown from a bicycle through a and b (same
/// component, k >= 1) or from two disjoint bicycles (different components,
/// k >= 2). Throws KOutOfRange and find_bicycle_through's errors.
EdgeSet cacti_subgraph_through(const MultiGraph& g, const EdgeId& a, const EdgeId& b, int k);

/// Extends a (k-1)-circuit to a k-circuit of m by attaching the canonically
/// smallest valid ear. Throws NoExtensionExists when no ear works.
EdgeSet grow_circuit(const KCircularMatroid& m, const EdgeSet& c);

/// Checks an assembly step by step: stage 0 a cacti-graph or a cycle, every
/// ear's shape and attachment matching its condition, every delta step
/// exactly +1, every later stage a cacti-graph.
bool validate_assembly(const MultiGraph& g, const EarAssembly& assembly);

}  // namespace kcirc
