#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "netcube/errors.hpp"
#include "netcube/examples.hpp"
#include "netcube/unfold.hpp"
#include "oracles/random_nets.hpp"
#include "oracles/small_nets.hpp"
#include "oracles/trace_oracle.hpp"

using namespace netcube;

namespace {

const char* kSquare =
    "vertex s\nvertex u\nvertex w\nvertex x\n"
    "edge e1 s u color a\nedge e2 s w color b\nedge e3 w x color a\nedge e4 u x color b\n"
    "square +e1 +e4 -e3 -e2\n";

std::vector<int> levels(const DomainPrefix& d) {
    std::vector<int> out(d.max_depth() + 1, 0);
    for (int v = 0; v < d.num_vertices(); ++v) out[d.depth[v]]++;
    return out;
}

// Rooted K_{2,3}: x below u and v, which both lie below y and z.
DomainPrefix k23() {
    DomainPrefix d;
    d.K = 3;
    int x = d.add_vertex(0), u = d.add_vertex(1), v = d.add_vertex(1), y = d.add_vertex(2), z = d.add_vertex(2);
    int a = d.label_id("a"), b = d.label_id("b"), c = d.label_id("c"), e = d.label_id("d");
    d.add_arc(x, u, a);
    d.add_arc(x, v, b);
    d.add_arc(u, y, b);
    d.add_arc(v, y, a);
    d.add_arc(u, z, c);
    d.add_arc(v, z, e);
    d.finalize();
    return d;
}

bool connected_subset(const DomainPrefix& d, const std::vector<char>& in) {
    int start = -1, count = 0;
    for (int v = 0; v < d.num_vertices(); ++v)
        if (in[v]) {
            ++count;
            if (start < 0) start = v;
        }
    if (start < 0) return true;
    std::vector<char> seen(d.num_vertices(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        auto visit = [&](int w) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        };
        for (int a : d.out(v)) visit(d.arcs[a].dst);
        for (int a : d.in(v)) visit(d.arcs[a].src);
    }
    return reached == count;
}

}  // namespace

TEST(UnfoldComplex, SquareIsItself) {
    auto d = unfold_complex(parse_complex(kSquare), 0, 3);
    EXPECT_EQ(d.num_vertices(), 4);
    EXPECT_EQ(d.arcs.size(), 4u);
    EXPECT_EQ(all_squares(d).size(), 1u);
}

TEST(UnfoldComplex, LoopGivesRay) {
    auto d = unfold_complex(parse_complex("vertex v\nedge a v v color a\n"), 0, 7);
    EXPECT_EQ(d.num_vertices(), 8);
    EXPECT_EQ(levels(d), std::vector<int>(8, 1));
}

TEST(UnfoldComplex, ZMatchesNStarLevels) {
    auto z = unfold_complex(z_complex(), 0, 3);
    auto n = unfold_net(nstar_net(), 3);
    EXPECT_EQ(levels(z), levels(n));
}

TEST(UnfoldComplex, ZLevelSizes) {
    auto z = unfold_complex(z_complex(), 0, 8);
    auto l = levels(z);
    long long p = 1;
    for (int k = 0; k <= 8; ++k, p *= 3) EXPECT_EQ(l[k], (p * 3 - 1) / 2);
    EXPECT_EQ(z.post_hoc_merges, 0);
}

TEST(UnfoldComplex, Errors) {
    auto moebius = parse_complex("vertex t0\nvertex t1\nvertex t2\nvertex b0\nvertex b1\nvertex b2\n"
                                 "edge h0 t0 t1\nedge h1 t1 t2\nedge h2 t2 b0\nedge g0 b0 b1\nedge g1 b1 b2\nedge g2 b2 t0\n"
                                 "edge r0 t0 b0\nedge r1 t1 b1\nedge r2 t2 b2\n"
                                 "square +h0 +r1 -g0 -r0\nsquare +h1 +r2 -g1 -r1\nsquare +h2 -r0 -g2 -r2\n");
    EXPECT_THROW(unfold_complex(moebius, 0, 3), NotAdmissible);
    EXPECT_THROW(unfold_complex(z_complex(), 0, 10, 1000), BudgetExceeded);
}

TEST(UnfoldNet, SmallNets) {
    auto p = unfold_net(oracle::single_transition_net(), 5);
    EXPECT_EQ(p.num_vertices(), 2);
    auto d = unfold_net(oracle::diamond_net(), 5);
    EXPECT_EQ(d.num_vertices(), 4);
    EXPECT_EQ(all_squares(d).size(), 1u);
    EXPECT_EQ(unfold_net(nstar_net(), 0).num_vertices(), 1);
}

TEST(UnfoldNet, NStarEquivalence) {
    auto net = nstar_net();
    auto xn = build_XN(net);
    auto dn = unfold_net(net, 6);
    auto dc = unfold_complex(xn.complex, xn.graph.root, 6);
    EXPECT_EQ(levels(dn), levels(dc));
    EXPECT_EQ(dn.num_vertices(), 1636);
    auto r = check_domain_isomorphism(dn, dc);
    EXPECT_TRUE(r.ok) << r.mismatch;
}

TEST(UnfoldNet, LevelsMatchBruteForceTraces) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        auto net = oracle::random_net(rng);
        auto brute = oracle::TraceOracle(TraceAlphabet::from_net(net), oracle::firing_sequences(net, 5));
        std::vector<int> per(6, 0);
        for (int c = 0; c < brute.classes(); ++c) per[brute.length(c)]++;
        while (!per.empty() && per.back() == 0) per.pop_back();
        EXPECT_EQ(levels(unfold_net(net, 5)), per);
    }
}

TEST(DomainIso, Basics) {
    auto sq = unfold_net(oracle::diamond_net(), 3);
    EXPECT_TRUE(check_domain_isomorphism(sq, sq).ok);
    auto path = unfold_net(oracle::ray_net(), 3);
    EXPECT_FALSE(check_domain_isomorphism(path, sq).ok);
}

TEST(Median, K23Fails) {
    auto r = validate_median(k23());
    EXPECT_FALSE(r.ok);
    EXPECT_GT(r.quadrangle_violations + r.median_violations, 0);
}

TEST(Median, SquarePasses) {
    EXPECT_TRUE(validate_median(unfold_complex(parse_complex(kSquare), 0, 3)).ok);
}

TEST(Median, RandomNetPrefixesPass) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 30; ++i) {
        auto net = oracle::random_net(rng);
        auto r = validate_median(unfold_net(net, 6), 50, i);
        EXPECT_TRUE(r.ok) << (r.witnesses.empty() ? "" : r.witnesses.front());
    }
}

TEST(Interval, Basics) {
    auto d = unfold_net(oracle::diamond_net(), 3);
    auto self = interval(d, 1, 1);
    EXPECT_EQ(self.vertices, std::vector<int>{1});
    int top = -1;
    for (int v = 0; v < d.num_vertices(); ++v)
        if (d.depth[v] == 2) top = v;
    auto all = interval(d, d.root, top);
    EXPECT_EQ(all.vertices.size(), 4u);
    EXPECT_TRUE(all.exact);
}

TEST(Interval, ExactAgreesWithDeeperPrefix) {
    auto d = unfold_net(nstar_net(), 6);
    auto deep = unfold_net(nstar_net(), 10);
    std::map<Word, int> in_deep;
    for (int v = 0; v < deep.num_vertices(); ++v) in_deep[deep.traces[v].word] = v;
    std::mt19937_64 rng(5);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < d.num_vertices(); ++u)
        for (int v = 0; v < d.num_vertices(); ++v)
            if (d.depth[u] + d.depth[v] <= d.K) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min<size_t>(pairs.size(), 150));
    int checked = 0;
    for (auto [u, v] : pairs) {
        auto r = interval(d, u, v);
        if (!r.exact) continue;
        ++checked;
        auto big = interval(deep, in_deep.at(d.traces[u].word), in_deep.at(d.traces[v].word));
        ASSERT_EQ(r.distance, big.distance);
        std::set<Word> a, b;
        for (int x : r.vertices) a.insert(d.traces[x].word);
        for (int x : big.vertices) b.insert(deep.traces[x].word);
        EXPECT_EQ(a, b);
    }
    EXPECT_EQ(checked, 150);
}

TEST(Hyperplanes, Counts) {
    EXPECT_EQ(prefix_hyperplanes(unfold_net(oracle::diamond_net(), 3)).count(), 2);
    EXPECT_EQ(prefix_hyperplanes(unfold_net(oracle::ray_net(), 6)).count(), 6);
    auto net = nstar_net();
    auto d = unfold_net(net, 6);
    auto alpha = TraceAlphabet::from_net(net);
    int primes = 0;
    for (const auto& t : d.traces) primes += is_prime(t, alpha);
    EXPECT_EQ(prefix_hyperplanes(d).count(), primes);
}

TEST(Configurations, DistanceIsGraphDistance) {
    auto d = unfold_complex(z_complex(), 0, 6);
    auto h = prefix_hyperplanes(d);
    Configurations conf(d, h);
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> pick(0, d.num_vertices() - 1);
    for (int i = 0; i < 30; ++i) {
        int u = pick(rng);
        auto du = bfs_distances(d, u);
        for (int v = 0; v < d.num_vertices(); ++v)
            if (d.depth[u] + d.depth[v] <= d.K) ASSERT_EQ(conf.distance(u, v), du[v]);
        ASSERT_EQ(static_cast<int>(conf.of(u).size()), d.depth[u]);
    }
}

TEST(Configurations, MeetAndJoin) {
    auto d = unfold_net(oracle::grid_net(), 6);
    auto h = prefix_hyperplanes(d);
    Configurations conf(d, h);
    int a = d.child(d.root, d.find_label("a")), b = d.child(d.root, d.find_label("b"));
    auto j = join_vertex(d, h, conf, a, b);
    ASSERT_TRUE(j);
    EXPECT_EQ(d.depth[*j], 2);
    EXPECT_EQ(meet_vertex(d, h, conf, a, b), d.root);
    EXPECT_EQ(vertex_of_configuration(d, h, {conf.of(*j).begin(), conf.of(*j).end()}), *j);
}

TEST(Domain, TruncateAndJson) {
    auto d = unfold_net(nstar_net(), 5);
    auto t = truncate(d, 3);
    EXPECT_EQ(t.K, 3);
    EXPECT_TRUE(check_domain_isomorphism(t, unfold_net(nstar_net(), 3)).ok);
    auto back = domain_from_json(domain_to_json(d));
    EXPECT_TRUE(check_domain_isomorphism(back, d).ok);
    EXPECT_EQ(back.traces, d.traces);
    EXPECT_NE(domain_to_dot(t).find("digraph"), std::string::npos);
    EXPECT_THROW(domain_from_json("{\"K\":1,\"vertices\":[{\"depth\":0}],\"arcs\":[{\"src\":0,\"dst\":0,\"label\":\"a\"}]}"),
                 SemanticError);
}

// Properties of complex unfoldings.
TEST(UnfoldProperty, CoveringAndSquareLifting) {
    for (const auto& base : {z_complex(), build_XN(nstar_net()).complex, zprime_complex()}) {
        auto d = unfold_complex(base, 0, 6);
        std::vector<int> out_deg(base.vertices.size(), 0), source_squares(base.vertices.size(), 0);
        for (const auto& e : base.edges) out_deg[e.src]++;
        for (size_t s = 0; s < base.squares.size(); ++s) {
            int k = base.source_corner(static_cast<int>(s));
            ASSERT_GE(k, 0);
            source_squares[base.start(base.squares[s].darts[k])]++;
        }
        for (int v = 0; v < d.num_vertices(); ++v) {
            if (d.depth[v] < d.K) EXPECT_EQ(static_cast<int>(d.out(v).size()), out_deg[d.proj[v]]);
            if (d.depth[v] + 2 <= d.K) EXPECT_EQ(static_cast<int>(squares_at(d, v).size()), source_squares[d.proj[v]]);
        }
        EXPECT_EQ(d.post_hoc_merges, 0);
    }
}

TEST(UnfoldProperty, HalfspacesConnected) {
    auto d = unfold_complex(z_complex(), 0, 5);
    auto h = prefix_hyperplanes(d);
    Configurations conf(d, h);
    for (int p = 0; p < h.count(); ++p) {
        if (2 * h.first_depth[p] + 2 > d.K) continue;
        std::vector<char> far(d.num_vertices()), near(d.num_vertices());
        for (int v = 0; v < d.num_vertices(); ++v) {
            far[v] = conf.contains(v, p);
            near[v] = !far[v];
        }
        EXPECT_TRUE(connected_subset(d, far)) << p;
        EXPECT_TRUE(connected_subset(d, near)) << p;
    }
}

TEST(UnfoldProperty, NiceLabels) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        auto d = unfold_net(oracle::random_net(rng), 5);
        for (int v = 0; v < d.num_vertices(); ++v) {
            std::set<int> out, in;
            for (int a : d.out(v)) EXPECT_TRUE(out.insert(d.arcs[a].label).second);
            for (int a : d.in(v)) EXPECT_TRUE(in.insert(d.arcs[a].label).second);
        }
    }
}
