#include "kcirc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

namespace kcirc {

namespace {

using Mask = uint32_t;

struct MaskContext {
    const MultiGraph* g = nullptr;
    int n = 0;
    std::vector<uint64_t> endpoint_bits;  // per edge, bits over incident vertices
    std::vector<uint8_t> nv;              // |V(G<mask>)| per subset

    explicit MaskContext(const MultiGraph& graph, int limit) : g(&graph) {
        n = graph.edge_count();
        if (n > limit) {
            fail("EnumerationLimitExceeded",
                 "graph has " + std::to_string(n) + " edges, limit is " +
                     std::to_string(limit));
        }
        // Compact bit positions for the vertices that edges actually touch.
        std::map<int, int> bit_of;
        endpoint_bits.assign(n, 0);
        for (int e = 0; e < n; ++e) {
            auto [u, v] = graph.ends(e);
            for (int w : {u, v}) {
                auto it = bit_of.find(w);
                if (it == bit_of.end()) {
                    it = bit_of.emplace(w, static_cast<int>(bit_of.size())).first;
                }
                endpoint_bits[e] |= uint64_t{1} << it->second;
            }
        }
        std::vector<uint64_t> vm(size_t{1} << n, 0);
        nv.assign(size_t{1} << n, 0);
        for (Mask m = 1; m < (Mask{1} << n); ++m) {
            int low = std::countr_zero(m);
            vm[m] = vm[m & (m - 1)] | endpoint_bits[low];
            nv[m] = static_cast<uint8_t>(std::popcount(vm[m]));
        }
    }

    Mask full() const { return (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1; }
};

// Subset-minimal members of an arbitrary family (not necessarily closed
// upward, so one-element removal is not enough; a reachability table over
// all submasks is).
std::vector<Mask> minimal_members(const std::vector<char>& in_family, int n) {
    std::vector<char> reach(size_t{1} << n, 0);  // some member is a subset
    std::vector<Mask> out;
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
        bool below = false;
        for (Mask rest = m; rest && !below; rest &= rest - 1) {
            below = reach[m ^ (rest & (Mask{0} - rest))];
        }
        if (in_family[m] && !below) out.push_back(m);
        reach[m] = below || in_family[m];
    }
    return out;
}

EdgeSet mask_to_set(const MultiGraph& g, Mask m) {
    EdgeSet out;
    for (Mask rest = m; rest; rest &= rest - 1) {
        out.insert(g.edge_id(std::countr_zero(rest)));
    }
    return out;
}

std::vector<EdgeSet> masks_to_sets(const MultiGraph& g, const std::vector<Mask>& masks) {
    std::vector<EdgeSet> out;
    out.reserve(masks.size());
    for (Mask m : masks) out.push_back(mask_to_set(g, m));
    sort_edge_sets(out);
    return out;
}

std::vector<Mask> circuit_masks(const MaskContext& ctx, int k) {
    int n = ctx.n;
    std::vector<char> over(size_t{1} << n, 0);   // |C| > f_k(C)
    std::vector<char> exact(size_t{1} << n, 0);  // |C| = f_k(C) + 1
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
        int size = std::popcount(m);
        int f = ctx.nv[m] - 1 + k;
        over[m] = size > f;
        exact[m] = size == f + 1;
    }
    std::vector<Mask> a = minimal_members(over, n);
    std::vector<Mask> b = minimal_members(exact, n);
    if (a != b) {
        fail("InternalInvariantViolated",
             "the two circuit characterizations disagree");
    }
    return a;
}

// dep[m] = some circuit is a subset of m.
std::vector<char> dependence_table(const std::vector<Mask>& circuits, int n) {
    std::vector<char> dep(size_t{1} << n, 0);
    for (Mask c : circuits) dep[c] = 1;
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
        if (dep[m]) continue;
        for (Mask rest = m; rest; rest &= rest - 1) {
            if (dep[m ^ (rest & (Mask{0} - rest))]) {
                dep[m] = 1;
                break;
            }
        }
    }
    return dep;
}

std::vector<Mask> base_masks(const std::vector<char>& dep, int n) {
    Mask full = (Mask{1} << n) - 1;
    std::vector<Mask> bases;
    for (Mask m = 0; m <= full; ++m) {
        if (dep[m]) continue;
        bool maximal = true;
        for (Mask rest = full & ~m; rest; rest &= rest - 1) {
            if (!dep[m | (rest & (Mask{0} - rest))]) {
                maximal = false;
                break;
            }
        }
        if (maximal) bases.push_back(m);
        if (m == full) break;
    }
    return bases;
}

std::vector<Mask> cocircuit_masks(const std::vector<Mask>& bases, int n) {
    Mask full = (Mask{1} << n) - 1;
    std::vector<char> coind(size_t{1} << n, 0);  // subset of some cobase
    for (Mask b : bases) coind[full & ~b] = 1;
    for (Mask m = full; ; --m) {
        if (!coind[m]) {
            for (Mask rest = full & ~m; rest; rest &= rest - 1) {
                if (coind[m | (rest & (Mask{0} - rest))]) {
                    coind[m] = 1;
                    break;
                }
            }
        }
        if (m == 0) break;
    }
    std::vector<char> codep(size_t{1} << n, 0);
    for (Mask m = 0; m <= full; ++m) codep[m] = !coind[m];
    std::vector<Mask> out = minimal_members(codep, n);
    return out;
}

std::string describe_set(const EdgeSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const EdgeId& e : s) {
        if (!first) os << ",";
        os << e;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

int f_k(const MultiGraph& g, const EdgeSet& x, int k) {
    std::set<VertexId> span;
    for (const EdgeId& id : x) {
        int e = g.edge_index(id);
        auto [u, v] = g.ends(e);
        span.insert(g.vertex_id(u));
        span.insert(g.vertex_id(v));
    }
    return static_cast<int>(span.size()) - 1 + k;
}

std::vector<EdgeSet> brute_circuits(const MultiGraph& g, int k, int limit) {
    MaskContext ctx(g, limit);
    return masks_to_sets(g, circuit_masks(ctx, k));
}

BruteMatroid brute_matroid(const MultiGraph& g, int k, int limit) {
    MaskContext ctx(g, limit);
    std::vector<Mask> circ = circuit_masks(ctx, k);
    std::vector<char> dep = dependence_table(circ, ctx.n);
    std::vector<Mask> bas = base_masks(dep, ctx.n);
    std::vector<Mask> cobas;
    cobas.reserve(bas.size());
    for (Mask b : bas) cobas.push_back(ctx.full() & ~b);
    std::vector<Mask> cocirc = cocircuit_masks(bas, ctx.n);

    BruteMatroid bm;
    bm.ground = g.edge_set();
    bm.k = k;
    bm.circuits = masks_to_sets(g, circ);
    bm.bases = masks_to_sets(g, bas);
    bm.cobases = masks_to_sets(g, cobas);
    bm.cocircuits = masks_to_sets(g, cocirc);
    return bm;
}

namespace {

// Mask translation for a BruteMatroid whose ground set names we only know as
// strings; used by check_axioms so it works on hand-corrupted families too.
struct GroundIndex {
    std::vector<EdgeId> ids;  // sorted

    explicit GroundIndex(const EdgeSet& ground) : ids(ground.begin(), ground.end()) {}

    int n() const { return static_cast<int>(ids.size()); }

    Mask to_mask(const EdgeSet& s) const {
        Mask m = 0;
        for (const EdgeId& e : s) {
            auto it = std::lower_bound(ids.begin(), ids.end(), e);
            if (it == ids.end() || *it != e) {
                fail("UnknownEdge", "set member '" + e + "' not in ground set");
            }
            m |= Mask{1} << (it - ids.begin());
        }
        return m;
    }

    std::string show(Mask m) const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (Mask rest = m; rest; rest &= rest - 1) {
            if (!first) os << ",";
            os << ids[std::countr_zero(rest)];
            first = false;
        }
        os << "}";
        return os.str();
    }
};

}  // namespace

AxiomReport check_axioms(const BruteMatroid& bm) {
    AxiomReport report;
    GroundIndex gi(bm.ground);
    int n = gi.n();
    if (n > kOracleEnumerationLimit) {
        fail("EnumerationLimitExceeded", "ground set too large for axiom check");
    }
    std::vector<Mask> circ, bas;
    for (const EdgeSet& c : bm.circuits) circ.push_back(gi.to_mask(c));
    for (const EdgeSet& b : bm.bases) bas.push_back(gi.to_mask(b));

    // (AC1) circuits form a clutter and exclude the empty set.
    report.circuits_clutter = true;
    for (size_t i = 0; i < circ.size() && report.circuits_clutter; ++i) {
        if (circ[i] == 0) {
            report.circuits_clutter = false;
            report.witness = "(AC1) empty set listed as a circuit";
            break;
        }
        for (size_t j = 0; j < circ.size(); ++j) {
            if (i != j && (circ[i] & circ[j]) == circ[i]) {
                report.circuits_clutter = false;
                report.witness = "(AC1) " + gi.show(circ[i]) + " contained in " +
                                 gi.show(circ[j]);
                break;
            }
        }
    }

    std::vector<char> dep = dependence_table(circ, n);

    // (AC2) circuit elimination. Stated for distinct circuits with a common
    // element; with X = Y it is vacuously false for any matroid, so X != Y.
    report.elimination = true;
    for (size_t i = 0; i < circ.size() && report.elimination; ++i) {
        for (size_t j = i + 1; j < circ.size() && report.elimination; ++j) {
            Mask common = circ[i] & circ[j];
            if (!common) continue;
            for (Mask rest = common; rest; rest &= rest - 1) {
                Mask a = rest & (Mask{0} - rest);
                if (!dep[(circ[i] | circ[j]) & ~a]) {
                    report.elimination = false;
                    report.witness = "(AC2) fails for X=" + gi.show(circ[i]) +
                                     " Y=" + gi.show(circ[j]) + " a=" +
                                     gi.show(a);
                    break;
                }
            }
        }
    }

    // (AB1) nonempty clutter of bases.
    report.bases_clutter = !bas.empty();
    if (!report.bases_clutter) report.witness = "(AB1) no bases";
    for (size_t i = 0; i < bas.size() && report.bases_clutter; ++i) {
        for (size_t j = 0; j < bas.size(); ++j) {
            if (i != j && (bas[i] & bas[j]) == bas[i]) {
                report.bases_clutter = false;
                report.witness = "(AB1) " + gi.show(bas[i]) + " contained in " +
                                 gi.show(bas[j]);
                break;
            }
        }
    }

    // (AB2) base exchange.
    std::vector<char> is_base(size_t{1} << n, 0);
    for (Mask b : bas) is_base[b] = 1;
    report.base_exchange = true;
    for (size_t i = 0; i < bas.size() && report.base_exchange; ++i) {
        for (size_t j = 0; j < bas.size() && report.base_exchange; ++j) {
            if (i == j) continue;
            for (Mask rx = bas[i] & ~bas[j]; rx; rx &= rx - 1) {
                Mask x = rx & (Mask{0} - rx);
                bool found = false;
                for (Mask ry = bas[j] & ~bas[i]; ry; ry &= ry - 1) {
                    Mask y = ry & (Mask{0} - ry);
                    if (is_base[(bas[i] & ~x) | y]) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    report.base_exchange = false;
                    report.witness = "(AB2) fails for X=" + gi.show(bas[i]) +
                                     " Y=" + gi.show(bas[j]) + " x=" + gi.show(x);
                    break;
                }
            }
        }
    }

    // (AI3) augmentation; the |Y| = |X| + 1 case implies the rest because
    // independence (circuit-freeness) is hereditary.
    std::vector<std::vector<Mask>> ind_by_size(n + 1);
    Mask full = (n == 0) ? 0 : (Mask{1} << n) - 1;
    for (Mask m = 0; ; ++m) {
        if (!dep[m]) ind_by_size[std::popcount(m)].push_back(m);
        if (m == full) break;
    }
    report.augmentation = true;
    for (int s = 0; s + 1 <= n && report.augmentation; ++s) {
        for (Mask x : ind_by_size[s]) {
            for (Mask y : ind_by_size[s + 1]) {
                bool found = false;
                for (Mask rest = y & ~x; rest; rest &= rest - 1) {
                    if (!dep[x | (rest & (Mask{0} - rest))]) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    report.augmentation = false;
                    report.witness = "(AI3) fails for X=" + gi.show(x) + " Y=" + gi.show(y);
                    break;
                }
            }
            if (!report.augmentation) break;
        }
    }

    // Families must be mutually consistent with the circuit family.
    report.families_consistent = true;
    std::vector<Mask> derived_bases = base_masks(dep, n);
    std::vector<Mask> stored_bases = bas;
    std::sort(derived_bases.begin(), derived_bases.end());
    std::sort(stored_bases.begin(), stored_bases.end());
    if (derived_bases != stored_bases) {
        report.families_consistent = false;
        report.witness = "bases disagree with maximal circuit-free sets";
    } else {
        std::vector<Mask> stored_cobases, derived_cobases;
        for (const EdgeSet& c : bm.cobases) stored_cobases.push_back(gi.to_mask(c));
        for (Mask b : derived_bases) derived_cobases.push_back(full & ~b);
        std::sort(stored_cobases.begin(), stored_cobases.end());
        std::sort(derived_cobases.begin(), derived_cobases.end());
        if (stored_cobases != derived_cobases) {
            report.families_consistent = false;
            report.witness = "cobases are not the base complements";
        } else {
            std::vector<Mask> stored_cocirc, derived_cocirc;
            for (const EdgeSet& c : bm.cocircuits) stored_cocirc.push_back(gi.to_mask(c));
            derived_cocirc = cocircuit_masks(derived_bases, n);
            std::sort(stored_cocirc.begin(), stored_cocirc.end());
            std::sort(derived_cocirc.begin(), derived_cocirc.end());
            if (stored_cocirc != derived_cocirc) {
                report.families_consistent = false;
                report.witness = "cocircuits disagree with the dual derivation";
            }
        }
    }
    if (report.ok()) report.witness.clear();
    return report;
}

EdgeSet brute_dual_cocircuit(const BruteMatroid& bm, const EdgeSet& b, const EdgeId& e) {
    if (std::find(bm.bases.begin(), bm.bases.end(), b) == bm.bases.end()) {
        fail("NotABase", describe_set(b) + " is not a base");
    }
    if (!b.count(e)) {
        fail("EdgeNotInBase", "edge '" + e + "' is not in the base");
    }
    const EdgeSet* found = nullptr;
    for (const EdgeSet& cc : bm.cocircuits) {
        if (!cc.count(e)) continue;
        bool inside = true;
        for (const EdgeId& u : cc) {
            if (u != e && b.count(u)) {
                inside = false;
                break;
            }
        }
        if (inside) {
            if (found) {
                fail("InternalInvariantViolated", "fundamental cocircuit not unique");
            }
            found = &cc;
        }
    }
    if (!found) {
        fail("InternalInvariantViolated", "no fundamental cocircuit found");
    }
    return *found;
}

namespace {

std::vector<EdgeSet> equivalence_classes_from(const EdgeSet& ground,
                                              const std::vector<EdgeSet>& circuits) {
    GroundIndex gi(ground);
    std::vector<int> parent(gi.n());
    for (int i = 0; i < gi.n(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> in_circuit(gi.n(), 0);
    std::vector<char> is_loop(gi.n(), 0);
    for (const EdgeSet& c : circuits) {
        Mask m = gi.to_mask(c);
        int firstbit = -1;
        for (Mask rest = m; rest; rest &= rest - 1) {
            int bit = std::countr_zero(rest);
            in_circuit[bit] = 1;
            if (std::popcount(m) == 1) is_loop[bit] = 1;
            if (firstbit < 0) firstbit = bit;
            parent[find(bit)] = find(firstbit);
        }
    }
    std::map<int, EdgeSet> classes;
    for (int i = 0; i < gi.n(); ++i) {
        if (!in_circuit[i] || is_loop[i]) continue;  // coloops and loops excluded
        classes[find(i)].insert(gi.ids[i]);
    }
    std::vector<EdgeSet> out;
    for (auto& [root, s] : classes) out.push_back(std::move(s));
    sort_edge_sets(out);
    return out;
}

}  // namespace

bool brute_connected(const BruteMatroid& bm) {
    if (bm.ground.size() < 2) return false;
    std::vector<EdgeSet> classes = equivalence_classes_from(bm.ground, bm.circuits);
    return classes.size() == 1 && classes[0] == bm.ground;
}

std::vector<EdgeSet> brute_equivalence_classes(const BruteMatroid& bm) {
    return equivalence_classes_from(bm.ground, bm.circuits);
}

bool matroids_equal(const MultiGraph& g, const MultiGraph& h, int k, int limit) {
    if (g.edge_ids() != h.edge_ids()) {
        fail("EdgeSetMismatch", "graphs do not share an edge universe");
    }
    return brute_circuits(g, k, limit) == brute_circuits(h, k, limit);
}

bool check_ivt(const MultiGraph& g, int limit) {
    bool has_non_loop = false;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.is_loop(e)) has_non_loop = true;
    }
    if (!has_non_loop) {
        fail("PreconditionViolated", "graph needs at least one non-loop edge");
    }
    MaskContext ctx(g, limit);
    int deltaG = ctx.n - ctx.nv[ctx.full()];
    std::vector<char> attained(ctx.n + 2, 0);  // index i+1 holds delta == i
    for (Mask m = 1; m <= ctx.full(); ++m) {
        int d = std::popcount(m) - ctx.nv[m];
        if (d >= -1 && d <= deltaG) attained[d + 1] = 1;
    }
    for (int i = -1; i <= deltaG; ++i) {
        if (!attained[i + 1]) return false;
    }
    return true;
}

bool check_f_monotone_submodular(const MultiGraph& g, int limit) {
    MaskContext ctx(g, limit);
    Mask full = ctx.full();
    for (Mask m = 0; m <= full; ++m) {
        for (Mask rest = full & ~m; rest; rest &= rest - 1) {
            if (ctx.nv[m] > ctx.nv[m | (rest & (Mask{0} - rest))]) return false;
        }
        if (m == full) break;
    }
    for (Mask x = 0; x <= full; ++x) {
        for (Mask y = x; y <= full; ++y) {
            if (ctx.nv[x | y] + ctx.nv[x & y] > ctx.nv[x] + ctx.nv[y]) return false;
            if (y == full) break;
        }
        if (x == full) break;
    }
    return true;
}

}  // namespace kcirc
