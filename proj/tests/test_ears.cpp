#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "kcirc/ears.hpp"
#include "kcirc/graphcore.hpp"
#include "kcirc/kcirc.hpp"

using namespace kcirc;
using corpus::Instance;

namespace {

EdgeSet cumulative(const MultiGraph& g, const EarAssembly& assembly) {
    EdgeSet cum = assembly.start;
    for (const Ear& ear : assembly.ears) cum = edge_set_union(cum, ear.edges);
    (void)g;
    return cum;
}

std::vector<EdgeSet> subsets_of(const MultiGraph& g) {
    const auto& ids = g.edge_ids();
    std::vector<EdgeSet> out;
    for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
        EdgeSet s;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (mask & (1u << i)) s.insert(ids[i]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TEST_CASE("shape predicates") {
    MultiGraph g = corpus::lollipop_graph();
    CHECK(is_lollipop_set(g, g.edge_set()));
    CHECK(is_cycle_set(g, EdgeSet{"l1", "l2", "l3"}));
    CHECK(is_path_set(g, EdgeSet{"l4", "l5"}));
    CHECK_FALSE(is_path_set(g, EdgeSet{"l1", "l2", "l3"}));
    CHECK(is_bicycle_set(corpus::theta(), corpus::theta().edge_set()));
    MultiGraph loop = MultiGraph::from_edges({{"l", "1", "1"}});
    CHECK(is_cycle_set(loop, loop.edge_set()));
}

TEST_CASE("ear assembly basics") {
    MultiGraph th = corpus::theta();
    EarAssembly whole = ear_assembly(th, th.edge_set());
    CHECK(whole.ears.empty());
    CHECK(validate_assembly(th, whole));

    SUBCASE("dumbbell from one of its cycles: a single lollipop ear") {
        MultiGraph db = corpus::dumbbell();
        EarAssembly asmb = ear_assembly(db, EdgeSet{"d1", "d2", "d3"});
        REQUIRE(asmb.ears.size() == 1);
        CHECK(asmb.ears[0].kind == EarKind::Lollipop);
        CHECK(asmb.ears[0].edges == EdgeSet{"d4", "d5", "d6", "d7"});
        CHECK(asmb.ears[0].attachment == std::set<VertexId>{"3"});
        CHECK(validate_assembly(db, asmb));
    }

    SUBCASE("two disjoint thetas from one: a single bicycle ear") {
        MultiGraph tt = corpus::two_theta();
        EarAssembly asmb = ear_assembly(tt, EdgeSet{"t1", "t2", "t3", "t4", "t5"});
        REQUIRE(asmb.ears.size() == 1);
        CHECK(asmb.ears[0].kind == EarKind::Bicycle);
        CHECK(asmb.ears[0].attachment.empty());
        CHECK(validate_assembly(tt, asmb));
        CHECK(cumulative(tt, asmb) == tt.edge_set());
    }

    CHECK_THROWS_AS(ear_assembly(corpus::theta_pendant(),
                                 corpus::theta_pendant().edge_set()),
                    error);
}

TEST_CASE("2-connected assembly") {
    MultiGraph k4 = corpus::k4();
    EarAssembly asmb = ear_assembly_2conn(k4, EdgeSet{"12", "13", "23"});
    REQUIRE(asmb.ears.size() == 2);
    CHECK(asmb.ears[0].kind == EarKind::Path);
    CHECK(asmb.ears[0].edges == EdgeSet{"14", "24"});
    CHECK(asmb.ears[1].edges == EdgeSet{"34"});
    CHECK(cumulative(k4, asmb) == k4.edge_set());

    // delta steps 0 -> 1 -> 2
    EdgeSet cum{"12", "13", "23"};
    int prev = delta(k4, cum);
    CHECK(prev == 0);
    for (const Ear& ear : asmb.ears) {
        cum = edge_set_union(cum, ear.edges);
        CHECK(delta(k4, cum) == prev + 1);
        prev = delta(k4, cum);
    }

    SUBCASE("identity start gives an empty assembly") {
        MultiGraph cyc = MultiGraph::from_edges(
            {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}});
        CHECK(ear_assembly_2conn(cyc, cyc.edge_set()).ears.empty());
    }

    SUBCASE("square plus chord from the square: one single-edge ear") {
        MultiGraph sq = corpus::square_chord();
        EarAssembly a = ear_assembly_2conn(sq, EdgeSet{"c1", "c2", "c3", "c4"});
        REQUIRE(a.ears.size() == 1);
        CHECK(a.ears[0].edges == EdgeSet{"x"});
        CHECK(a.ears[0].kind == EarKind::Path);
    }

    CHECK_THROWS_AS(ear_assembly_2conn(corpus::dumbbell(), EdgeSet{"d1", "d2", "d3"}),
                    error);  // dumbbell has a cut vertex
}

TEST_CASE("find_bicycle_through") {
    MultiGraph th = corpus::theta();
    CHECK(find_bicycle_through(th, "t1", "t2") == th.edge_set());

    SUBCASE("dumbbell through a triangle edge and the bridge") {
        MultiGraph db = corpus::dumbbell();
        EdgeSet bike = find_bicycle_through(db, "d1", "d7");
        CHECK(bike == db.edge_set());  // the dumbbell itself
        CHECK(classify_bicycle(db, bike) == BicycleKind::Dumbbell);
    }

    SUBCASE("K4 through two disjoint edges") {
        MultiGraph k4 = corpus::k4();
        EdgeSet bike = find_bicycle_through(k4, "12", "34");
        CHECK(bike.count("12"));
        CHECK(bike.count("34"));
        CHECK(is_bicycle_set(k4, bike));
        (void)classify_bicycle(k4, bike);  // classification must succeed
    }

    SUBCASE("every edge pair in every small cactus gives a bicycle") {
        for (const Instance& inst : corpus::full_corpus()) {
            const MultiGraph& g = inst.graph;
            if (g.edge_count() > 8) continue;
            for (const EdgeSet& comp : components(g, g.edge_set())) {
                if (delta(g, comp) < 1) continue;
                bool leafless = true;
                EdgeSet rest = edge_set_minus(g.edge_set(), comp);
                if (!is_cacti(g, comp)) continue;
                (void)leafless;
                (void)rest;
                for (const EdgeId& a : comp) {
                    for (const EdgeId& b : comp) {
                        EdgeSet bike = find_bicycle_through(g, a, b);
                        CHECK(bike.count(a));
                        CHECK(bike.count(b));
                        CHECK(is_bicycle_set(g, bike));
                    }
                }
            }
        }
    }

    MultiGraph tt = corpus::two_theta();
    CHECK_THROWS_AS(find_bicycle_through(tt, "t1", "u1"), error);
    MultiGraph lp = corpus::lollipop_graph();
    CHECK_THROWS_AS(find_bicycle_through(lp, "l1", "l4"), error);  // not cacti
}

TEST_CASE("cacti_subgraph_through") {
    MultiGraph th = corpus::theta();
    CHECK(cacti_subgraph_through(th, "t1", "t3", 1) == th.edge_set());

    MultiGraph tt = corpus::two_theta();
    CHECK(cacti_subgraph_through(tt, "t1", "u1", 2) == tt.edge_set());
    CHECK_THROWS_AS(cacti_subgraph_through(tt, "t1", "u1", 1), error);  // different comps

    MultiGraph k4 = corpus::k4();
    EdgeSet f = cacti_subgraph_through(k4, "12", "34", 1);
    CHECK(f.size() == 5);
    CHECK(f.count("12"));
    CHECK(f.count("34"));
    CHECK(is_circuit(KCircularMatroid(k4, 1), f));

    SUBCASE("sweeping k attains every delta") {
        for (const Instance& inst : corpus::full_corpus()) {
            const MultiGraph& g = inst.graph;
            if (g.edge_count() > 8 || !is_cacti(g, g.edge_set())) continue;
            int top = delta(g, g.edge_set());
            for (const EdgeId& a : g.edge_set()) {
                for (int k = 1; k <= top; ++k) {
                    EdgeSet f2 = cacti_subgraph_through(g, a, a, k);
                    CHECK(delta(g, f2) == k);
                    CHECK(is_cacti(g, f2));
                    CHECK(f2.count(a));
                }
            }
        }
    }
}

TEST_CASE("grow_circuit") {
    // butterfly and theta, disjoint: the only ear for the butterfly circuit
    // is the whole theta as a bicycle
    MultiGraph bt = MultiGraph::from_edges({
        {"b1", "c", "1"}, {"b2", "1", "2"}, {"b3", "2", "c"},
        {"b4", "c", "3"}, {"b5", "3", "4"}, {"b6", "4", "c"},
        {"t1", "a", "b"}, {"t2", "a", "x"}, {"t3", "x", "b"},
        {"t4", "a", "y"}, {"t5", "y", "b"},
    });
    KCircularMatroid m2(bt, 2);
    EdgeSet butterfly_edges{"b1", "b2", "b3", "b4", "b5", "b6"};
    EdgeSet grown = grow_circuit(m2, butterfly_edges);
    CHECK(grown == bt.edge_set());
    CHECK(is_circuit(m2, grown));
    CHECK(edge_set_minus(grown, butterfly_edges) == EdgeSet{"t1", "t2", "t3", "t4", "t5"});

    SUBCASE("K4: a theta grows into the whole graph by the missing chord") {
        MultiGraph k4 = corpus::k4();
        KCircularMatroid m(k4, 2);
        EdgeSet theta5 = edge_set_minus(k4.edge_set(), EdgeSet{"34"});
        EdgeSet result = grow_circuit(m, theta5);
        CHECK(result == k4.edge_set());
        CHECK(is_circuit(m, result));
    }

    SUBCASE("no extension in a graph that is just the circuit") {
        MultiGraph th = corpus::theta();
        KCircularMatroid m(th, 2);
        CHECK_THROWS_AS(grow_circuit(m, th.edge_set()), error);
    }

    SUBCASE("grown circuits verified against enumeration") {
        for (const Instance& inst : corpus::full_corpus()) {
            const MultiGraph& g = inst.graph;
            if (g.edge_count() > 8) continue;
            for (int k = 2; k <= 3; ++k) {
                KCircularMatroid m(g, k);
                KCircularMatroid prev(g, k - 1);
                if (is_trivial(m) || is_trivial(prev)) continue;
                for (const EdgeSet& c : circuits(prev)) {
                    try {
                        EdgeSet grown2 = grow_circuit(m, c);
                        CHECK(is_circuit(m, grown2));
                        CHECK(std::includes(grown2.begin(), grown2.end(), c.begin(),
                                            c.end()));
                    } catch (const error& e) {
                        CHECK(e.kind() == "NoExtensionExists");
                    }
                }
            }
        }
    }
}

TEST_CASE("validate_assembly rejects bad assemblies") {
    MultiGraph k4 = corpus::k4();

    // path ear whose interior touches the stage
    EarAssembly bogus;
    bogus.start = EdgeSet{"12", "23", "34", "14", "13"};  // theta, delta 1
    bogus.ears.push_back(Ear{EarKind::Path, EdgeSet{"24"}, {"2", "4"}});
    CHECK(validate_assembly(k4, bogus));  // this one is actually fine

    EarAssembly wrong_kind;
    wrong_kind.start = EdgeSet{"12", "23", "34", "14", "13"};
    wrong_kind.ears.push_back(Ear{EarKind::Cycle, EdgeSet{"24"}, {"2"}});
    CHECK_FALSE(validate_assembly(k4, wrong_kind));

    EarAssembly wrong_attachment;
    wrong_attachment.start = EdgeSet{"12", "23", "34", "14", "13"};
    wrong_attachment.ears.push_back(Ear{EarKind::Path, EdgeSet{"24"}, {"2"}});
    CHECK_FALSE(validate_assembly(k4, wrong_attachment));

    // delta step of two (a bicycle ear overlapping the stage would be needed)
    MultiGraph tt = corpus::two_theta();
    EarAssembly skip;
    skip.start = EdgeSet{"t1", "t2", "t3", "t4", "t5"};
    skip.ears.push_back(Ear{EarKind::Path, EdgeSet{"u1", "u2", "u3", "u4", "u5"}, {}});
    CHECK_FALSE(validate_assembly(tt, skip));

    // interior of a "path" hitting the stage: split the K4 ear wrongly
    EarAssembly touching;
    touching.start = EdgeSet{"12", "23", "34", "14", "13"};
    touching.ears.push_back(Ear{EarKind::Lollipop, EdgeSet{"24"}, {"2"}});
    CHECK_FALSE(validate_assembly(k4, touching));
}

TEST_CASE("bicycles are the minimal cacti-graphs") {
    // no proper nonempty subset of a bicycle is a cacti-graph
    for (const MultiGraph& g :
         {corpus::theta(), corpus::butterfly(),
          MultiGraph::from_edges({{"a1", "1", "2"}, {"a2", "2", "3"}, {"a3", "1", "3"},
                                  {"m", "3", "4"}, {"b1", "4", "5"}, {"b2", "5", "6"},
                                  {"b3", "4", "6"}})}) {
        REQUIRE(is_bicycle_set(g, g.edge_set()));
        for (const EdgeSet& sub : subsets_of(g)) {
            if (sub == g.edge_set()) continue;
            CHECK_FALSE(is_cacti(g, sub));
        }
    }
    // and conversely, every minimal cacti subset of a small graph is a bicycle
    for (const Instance& inst : corpus::random_multigraphs(30)) {
        const MultiGraph& g = inst.graph;
        if (g.edge_count() > 7) continue;
        for (const EdgeSet& sub : subsets_of(g)) {
            if (!is_cacti(g, sub)) continue;
            bool minimal = true;
            for (const EdgeSet& inner : subsets_of(g)) {
                if (inner != sub && !inner.empty() &&
                    std::includes(sub.begin(), sub.end(), inner.begin(), inner.end()) &&
                    is_cacti(g, inner)) {
                    minimal = false;
                }
            }
            if (minimal) CHECK(is_bicycle_set(g, sub));
        }
    }
}

TEST_CASE("every k-circuit decomposes as a (k-1)-circuit plus one ear") {
    for (const Instance& inst : corpus::full_corpus()) {
        const MultiGraph& g = inst.graph;
        if (g.edge_count() > 8) continue;
        for (int k = 2; k <= 3; ++k) {
            KCircularMatroid m(g, k);
            KCircularMatroid prev(g, k - 1);
            for (const EdgeSet& c : circuits(m)) {
                bool decomposed = false;
                for (const EdgeSet& inner : circuits(prev)) {
                    if (!std::includes(c.begin(), c.end(), inner.begin(), inner.end())) {
                        continue;
                    }
                    EdgeSet p = edge_set_minus(c, inner);
                    EarAssembly one_step{inner, {}};
                    for (EarKind kind : {EarKind::Path, EarKind::Lollipop,
                                         EarKind::Cycle, EarKind::Bicycle}) {
                        SubgraphView pv = induced_subgraph(g, p);
                        SubgraphView iv = induced_subgraph(g, inner);
                        std::set<VertexId> att;
                        for (const VertexId& v : pv.vertices) {
                            if (iv.vertices.count(v)) att.insert(v);
                        }
                        one_step.ears = {Ear{kind, p, att}};
                        if (validate_assembly(g, one_step)) decomposed = true;
                    }
                    if (decomposed) break;
                }
                CHECK_MESSAGE(decomposed, inst.name, " k=", k);
            }
        }
    }
}

TEST_CASE("assemblies from every cycle and bicycle in small cacti") {
    for (const Instance& inst : corpus::full_corpus()) {
        const MultiGraph& g = inst.graph;
        if (g.edge_count() > 7 || !is_cacti(g, g.edge_set())) continue;
        for (const EdgeSet& sub : subsets_of(g)) {
            if (!is_cycle_set(g, sub) && !is_bicycle_set(g, sub)) continue;
            EarAssembly asmb = ear_assembly(g, sub);
            CHECK(validate_assembly(g, asmb));
            CHECK(cumulative(g, asmb) == g.edge_set());
        }
    }
}
