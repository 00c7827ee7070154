#pragma once

#include <vector>

#include "kcirc/graphcore.hpp"
#include "kcirc/multigraph.hpp"

namespace kcirc {

inline constexpr int kDefaultEnumerationLimit = 24;

/// The k-circular matroid M_k(G) on the edge set of G: circuits are the
/// minimal edge sets C with delta(G<C>) = k. k = 0 gives the cycle matroid,
/// k = 1 the bicircular matroid. The graph must have no isolated vertices
/// and a nonempty edge set.
class KCircularMatroid {
public:
    KCircularMatroid(MultiGraph graph, int k);

    const MultiGraph& graph() const { return graph_; }
    int k() const { return k_; }
    EdgeSet ground() const { return graph_.edge_set(); }

private:
    MultiGraph graph_;
    int k_;
};

/// True iff M_k has no circuit (k >= 1: k > delta(G) + #tree components).
/// For k = 0 the matroid is trivial iff G is a forest or every edge a loop.
bool is_trivial(const KCircularMatroid& m);

/// x is independent iff after dropping tree components of G<x> what remains
/// is empty or has delta < k.
bool is_independent(const KCircularMatroid& m, const EdgeSet& x);

/// Size of a maximal independent subset of x (greedy in canonical order).
int rank_of(const KCircularMatroid& m, const EdgeSet& x);

/// k >= 1: delta(x) = k and G<x> is a cacti-graph. k = 0: x is a cycle.
bool is_circuit(const KCircularMatroid& m, const EdgeSet& x);

/// All circuits in canonical order. Throws EnumerationLimitExceeded when the
/// edge count exceeds the limit.
std::vector<EdgeSet> circuits(const KCircularMatroid& m,
                              int limit = kDefaultEnumerationLimit);

/// When M_k is a connected matroid this uses the structural test
/// (delta = k-1, spanning, no tree component); otherwise independent
/// maximality.
bool is_base(const KCircularMatroid& m, const EdgeSet& x);

/// All bases, canonical order (enumeration-limited like circuits).
std::vector<EdgeSet> bases(const KCircularMatroid& m,
                           int limit = kDefaultEnumerationLimit);

/// Deterministic greedy base over the canonical edge order.
EdgeSet find_base(const KCircularMatroid& m);

/// The coloop set of a nontrivial M_k: for k >= 1 this is E minus the core
/// of G (independent of k); for k = 0 the bridges of G.
/// Throws TrivialMatroid when every edge is a coloop.
EdgeSet coloops(const KCircularMatroid& m);

/// k >= 2: nontrivial and G a cacti-graph. k = 1: additionally G connected.
bool is_connected_matroid(const KCircularMatroid& m);

/// The ~-equivalence classes of M_1(G) for a cacti-graph G: the edge sets of
/// the components of G. Throws PreconditionViolated unless k = 1, M_1 is
/// nontrivial, and G is a cacti-graph.
std::vector<EdgeSet> matroid_components_k1(const KCircularMatroid& m);

/// The unique circuit inside b + e rooted at e, for a base b and e outside
/// it. Throws NotABase / EdgeInBase.
EdgeSet fundamental_circuit(const KCircularMatroid& m, const EdgeSet& b, const EdgeId& e);

enum class CocircuitKind { Type1, Type2, Type3 };

const char* to_string(CocircuitKind kind);

/// Classifies the rooted cocircuit K(e,b) by the component A of G<b>
/// containing e: Type1 when e is outside the kernel of A, Type2 when e is in
/// the kernel of a unicyclic A, Type3 when e is in the kernel and A has at
/// least two cycles. Requires a connected matroid, a base, and e in b.
CocircuitKind cocircuit_kind(const KCircularMatroid& m, const EdgeSet& b, const EdgeId& e);

/// The fundamental cocircuit K(e,b):
///   Type1: e plus the non-base edges with an end in the tree side of A-e,
///   Type2: e plus the non-base edges with an end in V(A),
///   Type3: the whole cobase plus e.
EdgeSet fundamental_cocircuit(const KCircularMatroid& m, const EdgeSet& b, const EdgeId& e);

/// The core of a base (k >= 2, connected matroid): the unique subset of b
/// that is a (k-1)-circuit. Throws KMustBeAtLeast2.
EdgeSet base_core(const KCircularMatroid& m, const EdgeSet& b);

}  // namespace kcirc
