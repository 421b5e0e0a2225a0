#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcube/complex.hpp"
#include "netcube/net.hpp"
#include "netcube/trace.hpp"

namespace netcube {

struct DomainArc {
    int src;
    int dst;
    int label;  // index into DomainPrefix::labels
    int base;   // base edge, transition, or -1
};

// Depth-bounded principal filter rooted at vertex 0. Arcs always go from depth k to k+1.
class DomainPrefix {
public:
    int K = 0;
    int root = 0;
    std::vector<std::string> labels;
    std::vector<int> depth;
    std::vector<int> proj;            // base vertex (complex unfolding) or marking index (net unfolding), else -1
    std::vector<DomainArc> arcs;
    std::vector<Trace> traces;        // net unfolding only
    std::vector<Marking> markings;    // net unfolding only, indexed by proj
    std::vector<char> hair;           // hair_domain only
    long long post_hoc_merges = 0;    // complex unfolding: closures that needed a merge (expected 0)

    int add_vertex(int d, int p = -1);
    int add_arc(int src, int dst, int label, int base = -1);
    int label_id(const std::string& name);  // interns
    int find_label(const std::string& name) const;  // -1 if absent

    // Builds the label-sorted adjacency; call after the last add_arc.
    void finalize();

    int num_vertices() const { return static_cast<int>(depth.size()); }
    bool interior(int v) const { return depth[v] < K; }
    std::span<const int> out(int v) const {
        return {out_arcs_.data() + out_off_[v], out_arcs_.data() + out_off_[v + 1]};
    }
    std::span<const int> in(int v) const { return {in_arcs_.data() + in_off_[v], in_arcs_.data() + in_off_[v + 1]}; }
    int child(int v, int label) const;  // -1 if absent
    int arc_between(int u, int v) const; // directed arc u->v, -1 if absent
    int max_depth() const;

    // Lexicographically least label word along a directed path from the root.
    std::vector<std::string> path_word(int v) const;

private:
    std::vector<int> out_off_, out_arcs_, in_off_, in_arcs_;
};

DomainPrefix unfold_complex(const SquareComplex& c, int base, int K, long long budget = 5000000);
DomainPrefix unfold_net(const NetSystem& net, int K, long long budget = 5000000);

// Keeps vertices of depth <= K.
DomainPrefix truncate(const DomainPrefix& d, int K);

struct DomainIsoResult {
    bool ok = false;
    std::vector<int> mapping;  // d1 vertex -> d2 vertex
    std::string mismatch;
};
DomainIsoResult check_domain_isomorphism(const DomainPrefix& d1, const DomainPrefix& d2);

// Squares with source s: (arc s->u, arc s->w, arc u->x, arc w->x), with u < w.
struct DomainSquare {
    int s, u, w, x;
    int su, sw, ux, wx;
};
std::vector<DomainSquare> squares_at(const DomainPrefix& d, int s);
std::vector<DomainSquare> all_squares(const DomainPrefix& d);

struct MedianReport {
    bool ok = true;
    long long quadrangle_violations = 0;
    long long cube_violations = 0;
    long long median_violations = 0;
    long long interval_violations = 0;
    long long geodesic_violations = 0;
    long long layering_violations = 0;
    long long checked_triples = 0;
    long long checked_cubes = 0;
    std::vector<std::string> witnesses;
};
MedianReport validate_median(const DomainPrefix& d, int samples = 200, std::uint64_t seed = 1);

std::vector<int> bfs_distances(const DomainPrefix& d, int src);

struct IntervalResult {
    std::vector<int> vertices;
    bool exact = false;
    int distance = -1;
};
IntervalResult interval(const DomainPrefix& d, int u, int v);

struct PrefixHyperplanes {
    std::vector<int> of_arc;       // arc -> hyperplane
    std::vector<int> first_depth;  // min source depth over dual arcs
    std::vector<int> gate_arc;     // the dual arc at first_depth
    std::vector<int> base;         // base hyperplane id or -1
    std::vector<int> arc_off;      // CSR: arcs of hyperplane h are arc_list[arc_off[h]..arc_off[h+1])
    std::vector<int> arc_list;
    bool unique_gates = true;      // each class has exactly one arc at first_depth

    int count() const { return static_cast<int>(first_depth.size()); }
};
PrefixHyperplanes prefix_hyperplanes(const DomainPrefix& d, const SquareComplex* base = nullptr);

// Per-vertex configuration: sorted hyperplane ids crossed by a directed path from the root.
class Configurations {
public:
    Configurations(const DomainPrefix& d, const PrefixHyperplanes& h);
    std::span<const int> of(int v) const { return {data_.data() + off_[v], data_.data() + off_[v + 1]}; }
    bool contains(int v, int h) const;
    // |c_u Δ c_v|, the graph distance in the full domain.
    int distance(int u, int v) const;
    int common(int u, int v) const;  // |c_u ∩ c_v|

private:
    std::vector<std::int64_t> off_;
    std::vector<int> data_;
};

// Vertex whose configuration is c_u ∪ c_v, searched greedily up from u. nullopt if it does not exist
// in the prefix.
std::optional<int> join_vertex(const DomainPrefix& d, const PrefixHyperplanes& h, const Configurations& conf, int u,
                               int v);
// Vertex whose configuration is c_u ∩ c_v.
int meet_vertex(const DomainPrefix& d, const PrefixHyperplanes& h, const Configurations& conf, int u, int v);
// Vertex with exactly the given configuration (sorted), or -1.
int vertex_of_configuration(const DomainPrefix& d, const PrefixHyperplanes& h, const std::vector<int>& conf);

std::string domain_to_json(const DomainPrefix& d);
// Reads the format written by domain_to_json; throws ParseError or SemanticError.
DomainPrefix domain_from_json(const std::string& text);
std::string domain_to_dot(const DomainPrefix& d);

}  // namespace netcube
