#include <gtest/gtest.h>

#include <random>

#include "netcube/events.hpp"
#include "netcube/examples.hpp"
#include "oracles/random_nets.hpp"
#include "oracles/small_nets.hpp"
#include "oracles/trace_oracle.hpp"

using namespace netcube;

namespace {

int count(const EventStructurePrefix& es, Relation r) {
    int n = 0;
    for (int i = 0; i < es.size(); ++i)
        for (int j = i + 1; j < es.size(); ++j) n += es.rel(i, j) == r;
    return n;
}

// Root with two out-arcs carrying the same label.
DomainPrefix twin_arcs() {
    DomainPrefix d;
    d.K = 2;
    int r = d.add_vertex(0), u = d.add_vertex(1), w = d.add_vertex(1);
    int a = d.label_id("a");
    d.add_arc(r, u, a);
    d.add_arc(r, w, a);
    d.finalize();
    return d;
}

}  // namespace

TEST(Events, DiamondIsConcurrent) {
    auto d = unfold_net(oracle::diamond_net(), 3);
    auto es = extract_events(d);
    ASSERT_EQ(es.size(), 2);
    EXPECT_TRUE(es.concurrent(0, 1));
    EXPECT_TRUE(es.minimal_conflicts().empty());
    EXPECT_TRUE(check_LES(es, TraceAlphabet::from_net(oracle::diamond_net())).ok);
}

TEST(Events, ConflictPair) {
    auto d = unfold_net(oracle::conflict_pair_net(), 3);
    auto es = extract_events(d);
    ASSERT_EQ(es.size(), 2);
    EXPECT_TRUE(es.conflict(0, 1));
    EXPECT_EQ(es.minimal_conflict(0, 1), std::optional<bool>(true));
    EXPECT_EQ(es.minimal_conflicts().size(), 1u);
}

TEST(Events, RayIsAChain) {
    auto es = extract_events(unfold_net(oracle::ray_net(), 5));
    ASSERT_EQ(es.size(), 5);
    for (int i = 0; i < es.size(); ++i)
        for (int j = 0; j < es.size(); ++j) {
            if (es.events[i].depth < es.events[j].depth) {
                EXPECT_TRUE(es.leq(i, j));
                EXPECT_EQ(es.covers(i, j), es.events[j].depth == es.events[i].depth + 1);
            }
        }
    EXPECT_EQ(es.hasse().size(), 4u);
}

TEST(Events, DependentLabelsBreakLES) {
    auto es = extract_events(unfold_net(oracle::diamond_net(), 3));
    auto r = check_LES(es, TraceAlphabet({"a", "b"}, {}));
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.axiom, "LES3");
}

TEST(Events, SharedLabelInConflict) {
    auto d = twin_arcs();
    auto nice = check_nice_labeling(d);
    EXPECT_FALSE(nice.ok);
    EXPECT_EQ(nice.axiom, "determinism");
    auto es = extract_events(d);
    auto r = check_LES(es, TraceAlphabet({"a"}, {}));
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.axiom, "LES1");
}

TEST(Events, MismatchedSquareLabels) {
    DomainPrefix d;
    d.K = 3;
    int s = d.add_vertex(0), u = d.add_vertex(1), w = d.add_vertex(1), x = d.add_vertex(2);
    int a = d.label_id("a"), b = d.label_id("b"), c = d.label_id("c");
    d.add_arc(s, u, a);
    d.add_arc(s, w, b);
    d.add_arc(u, x, b);
    d.add_arc(w, x, c);
    d.finalize();
    auto r = check_nice_labeling(d);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.axiom, "concurrency");
}

TEST(Events, NStarCounts) {
    auto d = unfold_net(nstar_net(), 6);
    auto es = extract_events(d);
    EXPECT_EQ(es.size(), 1098);
    EXPECT_TRUE(check_event_bijection(d, es).ok);
    EXPECT_TRUE(check_nice_labeling(d).ok);
    EXPECT_TRUE(check_LES(es, TraceAlphabet::from_net(nstar_net())).ok);
}

TEST(Events, GridHasNoCrossConflict) {
    auto net = oracle::grid_net();
    auto es = extract_events(unfold_net(net, 6));
    EXPECT_EQ(count(es, Relation::Conflict), 0);
    auto side = [&](int e) { return es.labels[es.events[e].label][0]; };
    int concurrent = 0;
    for (int i = 0; i < es.size(); ++i)
        for (int j = 0; j < es.size(); ++j) {
            if (side(i) == side(j)) continue;
            EXPECT_NE(es.rel(i, j), Relation::Below);
            concurrent += es.concurrent(i, j);
        }
    EXPECT_GT(concurrent, 0);
}

// Two labels span a square exactly when the transitions are independent and enabled together somewhere.
TEST(Events, DomainAlphabet) {
    std::mt19937_64 rng(32);
    std::vector<NetSystem> nets{nstar_net()};
    for (int i = 0; i < 20; ++i) nets.push_back(oracle::random_net(rng));
    for (const auto& net : nets) {
        auto mg = marking_graph(net, 100000, true);
        auto d = unfold_net(net, 2 + static_cast<int>(mg.vertices.size()));
        auto alpha = domain_alphabet(d);
        const int nt = static_cast<int>(net.transitions.size());
        for (int a = 0; a < nt; ++a)
            for (int b = 0; b < nt; ++b) {
                if (a == b) continue;
                bool together = false;
                for (const auto& m : mg.vertices) together |= try_fire(net, m, a) && try_fire(net, m, b);
                int la = d.find_label(net.transitions[a]), lb = d.find_label(net.transitions[b]);
                bool spans = la >= 0 && lb >= 0 && alpha.indep(alpha.index(net.transitions[a]), alpha.index(net.transitions[b]));
                EXPECT_EQ(spans, together && independent(net, a, b)) << net.transitions[a] << " " << net.transitions[b];
            }
    }
}

// Relations of exact pairs agree with brute-force traces on random nets.
TEST(EventsProperty, RelationsMatchTraceOracle) {
    std::mt19937_64 rng(31);
    const int K = 6;
    long long compared = 0;
    for (int i = 0; i < 20; ++i) {
        auto net = oracle::random_net(rng);
        auto alpha = TraceAlphabet::from_net(net);
        oracle::TraceOracle brute(alpha, oracle::firing_sequences(net, K));
        auto es = extract_events(unfold_net(net, K));
        std::vector<int> cls;
        for (const auto& e : es.events) {
            ASSERT_TRUE(e.prime_trace);
            cls.push_back(brute.class_of(e.prime_trace->word));
            ASSERT_TRUE(brute.prime(cls.back()));
        }
        for (int x = 0; x < es.size(); ++x)
            for (int y = 0; y < es.size(); ++y) {
                if (x == y || !es.exact(x, y)) continue;
                ++compared;
                bool below = brute.prefix(cls[x], cls[y]);
                EXPECT_EQ(es.rel(x, y) == Relation::Below, below);
                if (brute.length(cls[x]) + brute.length(cls[y]) <= K) {
                    auto j = brute.join(cls[x], cls[y]);
                    EXPECT_EQ(es.conflict(x, y), !j.bounded);
                }
            }
    }
    EXPECT_GT(compared, 1000);
}

TEST(Hair, DomainShape) {
    auto d = unfold_net(oracle::ray_net(), 4);
    auto h = hair_domain(d);
    EXPECT_EQ(h.num_vertices(), 2 * d.num_vertices());
    int hl = h.find_label("h");
    for (int v = 0; v < d.num_vertices(); ++v) EXPECT_GE(h.child(v, hl), 0);
    EXPECT_TRUE(check_nice_labeling(h).ok);
}

TEST(Hair, CommutesWithUnfolding) {
    for (const auto& [name, net] : oracle::trivial_nets()) {
        const int K = 4;
        auto lhs = truncate(hair_domain(unfold_net(net, K)), K);
        auto rhs = unfold_net(hair_net(net), K);
        EXPECT_TRUE(check_domain_isomorphism(lhs, rhs).ok) << name;
    }
    auto lhs = truncate(hair_domain(unfold_net(nstar_net(), 5)), 5);
    EXPECT_TRUE(check_domain_isomorphism(lhs, unfold_net(hair_net(nstar_net()), 5)).ok);
}

TEST(Index, Estimates) {
    EXPECT_EQ(estimate_index(unfold_net(oracle::loop_net(), 8), 3).types, 1);
    EXPECT_EQ(estimate_index(unfold_net(oracle::ray_net(), 8), 3).types, 2);
    auto est = estimate_index(unfold_net(nstar_net(), 6), 3);
    EXPECT_GE(est.types, 1);
    EXPECT_LE(est.types, 8);
    EXPECT_EQ(out_ball_form(unfold_net(oracle::single_transition_net(), 2), 0, 1), "0:a:1;");
}

TEST(Events, Json) {
    auto js = events_to_json(extract_events(unfold_net(oracle::conflict_pair_net(), 2)));
    EXPECT_NE(js.find("\"events\""), std::string::npos);
}
