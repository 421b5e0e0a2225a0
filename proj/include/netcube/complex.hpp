#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcube/net.hpp"
#include "netcube/trace.hpp"

namespace netcube {

// A dart traverses an edge forwards (src -> dst) or backwards.
struct Dart {
    int edge;
    bool forward;
    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Edge {
    std::string name;
    int src;
    int dst;
    std::string color;  // empty when uncolored
};

// Closed dart path d0 d1 d2 d3: end(d_i) == start(d_{i+1 mod 4}).
struct Square {
    std::array<Dart, 4> darts;
};

// An end of an edge at a vertex: the src end (out) or the dst end (in).
struct HalfEdge {
    int edge;
    bool out;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
    friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

class SquareComplex {
public:
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Square> squares;

    int add_vertex(const std::string& name);
    int add_edge(const std::string& name, int src, int dst, const std::string& color = "");
    int add_square(const std::array<Dart, 4>& darts);  // validates closure

    int vertex_index(const std::string& name) const;  // -1 if absent
    int edge_index(const std::string& name) const;
    bool colored() const;

    int start(const Dart& d) const { return d.forward ? edges[d.edge].src : edges[d.edge].dst; }
    int end(const Dart& d) const { return d.forward ? edges[d.edge].dst : edges[d.edge].src; }
    // Half-edge through which dart d leaves its start vertex / enters its end vertex.
    static HalfEdge leaving(const Dart& d) { return {d.edge, d.forward}; }
    static HalfEdge entering(const Dart& d) { return {d.edge, !d.forward}; }
    int vertex_of(const HalfEdge& h) const { return h.out ? edges[h.edge].src : edges[h.edge].dst; }

    std::vector<HalfEdge> half_edges_at(int v) const;

    // Link edges: at corner i the pair (entering d_{i-1}, leaving d_i) at vertex start(d_i).
    struct Corner {
        int square;
        int index;
        int vertex;
        HalfEdge a;
        HalfEdge b;
    };
    std::vector<Corner> corners() const;

    // Source corner index of square s under the edge orientation, or -1.
    int source_corner(int s) const;
};

SquareComplex parse_complex(const std::string& text);  // text or JSON, auto-detected
std::string complex_to_text(const SquareComplex& c);
std::string complex_to_json(const SquareComplex& c);
std::string complex_to_dot(const SquareComplex& c);

bool is_admissible(const SquareComplex& c);

struct Hyperplane {
    int id;
    std::vector<int> edges;  // sorted
    bool two_sided;
};

struct HyperplaneSystem {
    std::vector<Hyperplane> planes;
    std::vector<int> of_edge;       // edge -> hyperplane id
    std::vector<int> flip;          // edge orientation relative to its hyperplane (0/1), valid when two-sided
};

HyperplaneSystem hyperplanes(const SquareComplex& c);

struct NpcReport {
    bool ok = true;
    std::vector<std::string> violations;
};
// Links must be simple; a link triangle is allowed only at the corner of a closed 3-cube.
NpcReport check_npc(const SquareComplex& c);

struct Osculation {
    int vertex;
    HalfEdge a;
    HalfEdge b;
};

struct SpecialnessReport {
    std::vector<int> one_sided;
    std::vector<std::pair<int, int>> self_intersecting;               // (hyperplane, square)
    std::vector<std::pair<int, Osculation>> direct_self_osculating;   // (hyperplane, witness)
    std::vector<std::pair<int, Osculation>> indirect_self_osculating;
    struct Inter {
        int h1, h2;
        int crossing_square;
        Osculation where;
    };
    std::vector<Inter> inter_osculating;
    bool is_special = true;

    std::string first_pathology(const SquareComplex& c) const;
};
SpecialnessReport check_special(const SquareComplex& c);

struct LabelingReport {
    bool ok = true;
    std::string axiom;    // "TL1".."TL4"
    std::string witness;
};
// Labels are edge colors interpreted as letters of the alphabet.
LabelingReport check_trace_labeling(const SquareComplex& c, const TraceAlphabet& alpha);

// Recolors every edge by the id of its hyperplane ("H<id>").
SquareComplex canonical_hyperplane_labeling(const SquareComplex& c);
// Independence of the canonical labeling: pairs of hyperplanes that cross.
TraceAlphabet crossing_alphabet(const SquareComplex& c);

SquareComplex hair_complex(const SquareComplex& c, const std::string& hair_color = "h");

struct XNResult {
    SquareComplex complex;
    MarkingGraph graph;
    std::vector<int> edge_label;  // edge -> transition
};
XNResult build_XN(const NetSystem& net, long long budget = 100000);

struct IsoOptions {
    bool colors = false;
    bool orientation = true;
    std::optional<std::pair<int, int>> basepoints;
};

struct IsoWitness {
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
    std::vector<int> edge_reversed;  // 1 when the image edge runs the other way
};
std::optional<IsoWitness> isomorphic(const SquareComplex& c1, const SquareComplex& c2, const IsoOptions& opt = {});

// Whether an orientation-preserving edge map (vertex map induced) is a covering map:
// it maps squares to squares and is a bijection on half-edges and link edges at every vertex.
struct CoverReport {
    bool ok = true;
    std::string reason;
};
CoverReport check_covering(const SquareComplex& cover, const SquareComplex& base, const std::vector<int>& edge_map);

// Edge map from a cover whose edge colors name the base edges.
std::vector<int> covering_map_by_color(const SquareComplex& cover, const SquareComplex& base);

}  // namespace netcube
