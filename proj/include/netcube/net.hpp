#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace netcube {

// Sorted, duplicate-free list of place indices.
using Marking = std::vector<int>;

struct NetSystem {
    std::vector<std::string> places;
    std::vector<std::string> transitions;
    std::vector<std::vector<int>> pre;   // per transition, sorted place indices
    std::vector<std::vector<int>> post;
    Marking initial;

    int place_index(const std::string& name) const;        // -1 if absent
    int transition_index(const std::string& name) const;   // -1 if absent
    Marking marking_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(const Marking& m) const;
};

// Builder that validates identifiers; throws SemanticError.
NetSystem make_net(std::vector<std::string> places,
                   const std::vector<std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>>& transitions,
                   const std::vector<std::string>& initial);

NetSystem parse_net(const std::string& text);       // text or JSON mirror, auto-detected
NetSystem parse_net_json(const std::string& text);
std::string net_to_text(const NetSystem& net);
std::string net_to_json(const NetSystem& net);

std::optional<Marking> try_fire(const NetSystem& net, const Marking& m, int a);
std::optional<Marking> try_cofire(const NetSystem& net, const Marking& m, int a);
Marking fire(const NetSystem& net, const Marking& m, int a);     // throws NotEnabled
Marking cofire(const NetSystem& net, const Marking& m, int a);   // throws NotCoEnabled

struct MarkingArc {
    int src;
    int label;
    int dst;
};

struct MarkingGraph {
    std::vector<Marking> vertices;  // vertices[0] is the root m0
    std::vector<MarkingArc> arcs;   // sorted by (src, label)
    int root = 0;

    int find(const Marking& m) const;  // -1 if absent
};

// Closure of {m0} under fire and cofire (or fire only when forward_only).
MarkingGraph marking_graph(const NetSystem& net, long long max_vertices = 100000, bool forward_only = false);

bool independent(const NetSystem& net, int a, int b);
std::vector<std::pair<int, int>> independence(const NetSystem& net);  // pairs with a < b
std::vector<int> degenerate_transitions(const NetSystem& net);

// Adds a self-loop place p_a per transition a and a transition h consuming all of them.
NetSystem hair_net(const NetSystem& net);

}  // namespace netcube
