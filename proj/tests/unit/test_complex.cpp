#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "netcube/complex.hpp"
#include "netcube/errors.hpp"
#include "netcube/examples.hpp"
#include "oracles/random_nets.hpp"
#include "oracles/small_nets.hpp"

using namespace netcube;

namespace {

SquareComplex one_square(const std::string& c1 = "a", const std::string& c2 = "b") {
    return parse_complex("vertex s\nvertex u\nvertex w\nvertex x\n"
                         "edge e1 s u color " + c1 + "\nedge e2 s w color " + c2 + "\n"
                         "edge e3 w x color " + c1 + "\nedge e4 u x color " + c2 + "\n"
                         "square +e1 +e4 -e3 -e2\n");
}

// Three squares in a band whose ends are glued with a flip.
SquareComplex moebius() {
    return parse_complex("vertex t0\nvertex t1\nvertex t2\nvertex b0\nvertex b1\nvertex b2\n"
                         "edge h0 t0 t1\nedge h1 t1 t2\nedge h2 t2 b0\n"
                         "edge g0 b0 b1\nedge g1 b1 b2\nedge g2 b2 t0\n"
                         "edge r0 t0 b0\nedge r1 t1 b1\nedge r2 t2 b2\n"
                         "square +h0 +r1 -g0 -r0\nsquare +h1 +r2 -g1 -r1\nsquare +h2 -r0 -g2 -r2\n");
}

// Three squares around a corner with no cube to fill them.
SquareComplex open_cube_corner() {
    SquareComplex c;
    int v = c.add_vertex("v");
    int a[3], e[3];
    for (int i = 0; i < 3; ++i) {
        a[i] = c.add_vertex("a" + std::to_string(i));
        e[i] = c.add_edge("e" + std::to_string(i), v, a[i]);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::string s = std::to_string(i) + std::to_string(j);
            int x = c.add_vertex("x" + s);
            int f = c.add_edge("f" + s, a[i], x), g = c.add_edge("g" + s, a[j], x);
            c.add_square({Dart{e[i], true}, Dart{f, true}, Dart{g, false}, Dart{e[j], false}});
        }
    return c;
}

std::vector<std::set<int>> classes(const HyperplaneSystem& h) {
    std::vector<std::set<int>> out;
    for (const auto& p : h.planes) out.emplace_back(p.edges.begin(), p.edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Complex, ParseAndRoundTrip) {
    auto c = one_square();
    EXPECT_EQ(c.vertices.size(), 4u);
    EXPECT_EQ(c.squares.size(), 1u);
    auto again = parse_complex(complex_to_text(c));
    EXPECT_TRUE(isomorphic(c, again, {.colors = true}));
    auto json = parse_complex(complex_to_json(c));
    EXPECT_TRUE(isomorphic(c, json, {.colors = true}));
}

TEST(Complex, RejectsOpenSquare) {
    EXPECT_THROW(parse_complex("vertex a\nvertex b\nedge e a b\nsquare +e +e +e +e\n"), Error);
}

TEST(Complex, NonSimpleFailsNpc) {
    // Two squares meeting along two consecutive darts give parallel link edges.
    auto c = parse_complex("vertex v\nedge a v v\nedge b v v\nsquare +a +b -a -b\nsquare +a +b -a -b\n");
    EXPECT_FALSE(check_npc(c).ok);
}

TEST(XN, Diamond) {
    auto x = build_XN(oracle::diamond_net()).complex;
    EXPECT_EQ(x.vertices.size(), 4u);
    EXPECT_EQ(x.edges.size(), 4u);
    EXPECT_EQ(x.squares.size(), 1u);
}

TEST(XN, DependentPairHasNoSquares) {
    EXPECT_EQ(build_XN(oracle::conflict_pair_net()).complex.squares.size(), 0u);
}

TEST(XN, NStarCounts) {
    auto x = build_XN(nstar_net()).complex;
    EXPECT_EQ(x.vertices.size(), 8u);
    EXPECT_EQ(x.edges.size(), 32u);
    EXPECT_EQ(x.squares.size(), 24u);
}

TEST(XN, Budget) {
    EXPECT_THROW(build_XN(nstar_net(), 2), BudgetExceeded);
}

TEST(Hyperplanes, OneSquare) {
    auto h = hyperplanes(one_square());
    ASSERT_EQ(h.planes.size(), 2u);
    for (const auto& p : h.planes) {
        EXPECT_EQ(p.edges.size(), 2u);
        EXPECT_TRUE(p.two_sided);
    }
}

TEST(Hyperplanes, MoebiusBandIsOneSided) {
    auto h = hyperplanes(moebius());
    int one_sided = 0;
    for (const auto& p : h.planes) one_sided += !p.two_sided;
    EXPECT_EQ(one_sided, 1);
}

TEST(Hyperplanes, XNStarTwoSided) {
    for (const auto& p : hyperplanes(build_XN(nstar_net()).complex).planes) EXPECT_TRUE(p.two_sided);
}

TEST(Npc, Cases) {
    EXPECT_TRUE(check_npc(one_square()).ok);
    auto bad = check_npc(open_cube_corner());
    EXPECT_FALSE(bad.ok);
    EXPECT_FALSE(bad.violations.empty());
    EXPECT_TRUE(check_npc(z_complex()).ok);
}

TEST(Npc, ClosedCubeCornerIsFlag) {
    auto x = build_XN(oracle::cube_net()).complex;
    EXPECT_EQ(x.vertices.size(), 8u);
    EXPECT_EQ(x.squares.size(), 24u);
    EXPECT_TRUE(check_npc(x).ok);
}

TEST(Special, Verdicts) {
    EXPECT_TRUE(check_special(zprime_complex()).is_special);
    EXPECT_TRUE(check_special(build_XN(nstar_net()).complex).is_special);
    auto z = z_complex();
    auto r = check_special(z);
    EXPECT_FALSE(r.is_special);
    EXPECT_FALSE(r.first_pathology(z).empty());
}

TEST(Special, NeedsAdmissibleOrientation) {
    EXPECT_FALSE(is_admissible(moebius()));
    EXPECT_THROW(check_special(moebius()), NotAdmissible);
}

TEST(TraceLabeling, XNStar) {
    auto n = nstar_net();
    EXPECT_TRUE(check_trace_labeling(build_XN(n).complex, TraceAlphabet::from_net(n)).ok);
}

TEST(TraceLabeling, DependentSquareViolates) {
    TraceAlphabet al({"a", "b"}, {});
    auto r = check_trace_labeling(one_square(), al);
    EXPECT_FALSE(r.ok);
}

TEST(TraceLabeling, DuplicateOutLabelViolatesTL2) {
    auto c = parse_complex("vertex v\nvertex x\nvertex y\nedge e v x color a\nedge f v y color a\n");
    auto r = check_trace_labeling(c, TraceAlphabet({"a"}, {}));
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.axiom, "TL2");
}

TEST(CanonicalLabeling, Counts) {
    auto c = canonical_hyperplane_labeling(one_square());
    std::set<std::string> colors;
    for (const auto& e : c.edges) colors.insert(e.color);
    EXPECT_EQ(colors.size(), 2u);

    auto x = build_XN(nstar_net()).complex;
    std::set<std::string> xc;
    for (const auto& e : canonical_hyperplane_labeling(x).edges) xc.insert(e.color);
    EXPECT_EQ(xc.size(), hyperplanes(x).planes.size());
    EXPECT_TRUE(check_trace_labeling(canonical_hyperplane_labeling(x), crossing_alphabet(x)).ok);
}

TEST(CanonicalLabeling, ZPrimeHyperplanesFollowEdgeNames) {
    // Edge names of the shipped cover start with the label of their hyperplane.
    auto zp = zprime_complex();
    auto h = hyperplanes(zp);
    for (const auto& p : h.planes) {
        std::set<std::string> prefix;
        for (int e : p.edges) {
            const auto& name = zp.edges[e].name;
            prefix.insert(name.substr(0, name.find('_')));
        }
        EXPECT_EQ(prefix.size(), 1u);
    }
}

TEST(Hair, SingleVertex) {
    auto c = parse_complex("vertex v\n");
    auto h = hair_complex(c);
    EXPECT_EQ(h.vertices.size(), 2u);
    EXPECT_EQ(h.edges.size(), 1u);
    EXPECT_TRUE(check_npc(hair_complex(z_complex())).ok);
}

TEST(Hair, HairedNetComplex) {
    auto n = nstar_net();
    auto x = build_XN(n);
    auto hx = build_XN(hair_net(n));
    IsoOptions opt{.colors = true, .orientation = true, .basepoints = std::make_pair(hx.graph.root, x.graph.root)};
    EXPECT_TRUE(isomorphic(hx.complex, hair_complex(x.complex), opt));
}

TEST(Isomorphism, Basics) {
    auto c = one_square();
    auto w = isomorphic(c, c, {.colors = true});
    ASSERT_TRUE(w);
    auto two = parse_complex(complex_to_text(c) + "vertex s2\nvertex u2\nvertex w2\nvertex x2\n"
                             "edge f1 s2 u2\nedge f2 s2 w2\nedge f3 w2 x2\nedge f4 u2 x2\nsquare +f1 +f4 -f3 -f2\n");
    EXPECT_FALSE(isomorphic(c, two));
}

TEST(Isomorphism, ZPrimeIsXNStarUpToOrientation) {
    auto zp = zprime_complex();
    auto x = build_XN(nstar_net()).complex;
    EXPECT_TRUE(isomorphic(zp, x, {.orientation = false}));
    auto cover = check_covering(zp, z_complex(), covering_map_by_color(zp, z_complex()));
    EXPECT_TRUE(cover.ok) << cover.reason;
}

// Properties over random nets.
TEST(ComplexProperty, ThetaIgnoresSquareOrder) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto x = build_XN(oracle::random_net(rng)).complex;
        auto y = x;
        std::shuffle(y.squares.begin(), y.squares.end(), rng);
        EXPECT_EQ(classes(hyperplanes(x)), classes(hyperplanes(y)));
    }
}

TEST(ComplexProperty, TraceLabelingImpliesSpecial) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        auto n = oracle::random_net(rng);
        auto x = build_XN(n).complex;
        ASSERT_TRUE(is_admissible(x));
        auto tl = check_trace_labeling(x, TraceAlphabet::from_net(n));
        EXPECT_TRUE(tl.ok) << tl.axiom << " " << tl.witness;
        if (tl.ok) EXPECT_TRUE(check_special(x).is_special);
        EXPECT_TRUE(check_npc(x).ok);
    }
}

TEST(ComplexProperty, XNSquaresFollowFiringAlgebra) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        auto n = oracle::random_net(rng);
        auto r = build_XN(n);
        const auto& c = r.complex;
        for (int s = 0; s < static_cast<int>(c.squares.size()); ++s) {
            int k = c.source_corner(s);
            ASSERT_GE(k, 0);
            const auto& d = c.squares[s].darts;
            const Dart& first = d[k];
            const Dart& last = d[(k + 3) % 4];
            int m = c.start(first);
            int a = r.edge_label[first.edge], b = r.edge_label[last.edge];
            auto m1 = try_fire(n, r.graph.vertices[m], a);
            auto m2 = try_fire(n, r.graph.vertices[m], b);
            ASSERT_TRUE(m1 && m2);
            auto top = try_fire(n, *m1, b);
            ASSERT_TRUE(top);
            EXPECT_EQ(try_fire(n, *m2, a), top);
            EXPECT_EQ(r.graph.vertices[c.end(d[(k + 1) % 4])], *top);
            EXPECT_TRUE(independent(n, a, b));
        }
    }
}
