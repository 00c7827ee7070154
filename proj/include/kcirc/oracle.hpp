#pragma once

#include <string>
#include <vector>

#include "kcirc/multigraph.hpp"

namespace kcirc {

inline constexpr int kOracleEnumerationLimit = 20;

/// Ground truth built by exhaustive subset enumeration from the submodular
/// function f_k. Everything here is kept independent of the structural
/// implementation so the two can be checked against each other.
struct BruteMatroid {
    EdgeSet ground;
    int k = 0;
    std::vector<EdgeSet> circuits;
    std::vector<EdgeSet> bases;
    std::vector<EdgeSet> cobases;
    std::vector<EdgeSet> cocircuits;
};

/// f_k(X) = |V(G<X>)| - 1 + k.
int f_k(const MultiGraph& g, const EdgeSet& x, int k);

/// Minimal nonempty sets C with |C| > f_k(C). Also computes the minimal sets
/// with |C| = f_k(C) + 1 and verifies the two families coincide.
std::vector<EdgeSet> brute_circuits(const MultiGraph& g, int k,
                                    int limit = kOracleEnumerationLimit);

BruteMatroid brute_matroid(const MultiGraph& g, int k,
                           int limit = kOracleEnumerationLimit);

struct AxiomReport {
    bool circuits_clutter = false;   // (AC1)
    bool elimination = false;        // (AC2)
    bool bases_clutter = false;      // (AB1)
    bool base_exchange = false;      // (AB2)
    bool augmentation = false;       // (AI3)
    bool families_consistent = false;
    std::string witness;  // first counterexample found, empty when ok

    bool ok() const {
        return circuits_clutter && elimination && bases_clutter && base_exchange &&
               augmentation && families_consistent;
    }
};

/// Validates the matroid axioms on the families stored in bm, reporting a
/// witness on the first failure. Re-derives bases/cobases/cocircuits from the
/// circuit family and compares, so a corrupted family cannot slip through.
AxiomReport check_axioms(const BruteMatroid& bm);

/// The unique cocircuit C* with e in C* and C* \ e disjoint from b.
EdgeSet brute_dual_cocircuit(const BruteMatroid& bm, const EdgeSet& b, const EdgeId& e);

/// Circuit-sharing connectivity: |E| >= 2, no loops or coloops, and the
/// transitive closure of "lie on a common circuit" has one class.
bool brute_connected(const BruteMatroid& bm);

/// The ~-equivalence classes (ground minus loops and coloops partitioned by
/// shared circuits), canonically ordered.
std::vector<EdgeSet> brute_equivalence_classes(const BruteMatroid& bm);

/// True iff the circuit families of M_k(g) and M_k(h) coincide.
/// Throws EdgeSetMismatch when the edge universes differ.
bool matroids_equal(const MultiGraph& g, const MultiGraph& h, int k,
                    int limit = kOracleEnumerationLimit);

/// Discrete intermediate value check: every i in {-1, ..., delta(G)} is
/// attained by some nonempty subset. Requires at least one non-loop edge.
bool check_ivt(const MultiGraph& g, int limit = kOracleEnumerationLimit);

/// Exhaustively verifies that f_k's vertex-count part is non-decreasing and
/// submodular (the +k shift cancels out of both properties).
bool check_f_monotone_submodular(const MultiGraph& g, int limit = 12);

}  // namespace kcirc
