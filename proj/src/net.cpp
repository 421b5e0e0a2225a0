#include "netcube/net.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "netcube/errors.hpp"

namespace netcube {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i; else ++j;
    }
    return true;
}

std::string show(const NetSystem& net, const Marking& m) {
    std::string s = "{";
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += net.places[m[i]];
    }
    return s + "}";
}

struct MarkingHash {
    size_t operator()(const Marking& m) const {
        size_t h = 1469598103934665603ull;
        for (int p : m) h = (h ^ static_cast<size_t>(p)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

int NetSystem::place_index(const std::string& name) const {
    auto it = std::find(places.begin(), places.end(), name);
    return it == places.end() ? -1 : static_cast<int>(it - places.begin());
}

int NetSystem::transition_index(const std::string& name) const {
    auto it = std::find(transitions.begin(), transitions.end(), name);
    return it == transitions.end() ? -1 : static_cast<int>(it - transitions.begin());
}

Marking NetSystem::marking_of(const std::vector<std::string>& names) const {
    Marking m;
    for (const auto& n : names) {
        int p = place_index(n);
        if (p < 0) throw SemanticError("unknown place", n);
        m.push_back(p);
    }
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

std::vector<std::string> NetSystem::names_of(const Marking& m) const {
    std::vector<std::string> out;
    for (int p : m) out.push_back(places[p]);
    return out;
}

NetSystem make_net(std::vector<std::string> places,
                   const std::vector<std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>>& transitions,
                   const std::vector<std::string>& initial) {
    NetSystem net;
    std::set<std::string> seen;
    for (auto& p : places) {
        if (!seen.insert(p).second) throw SemanticError("duplicate identifier", p);
    }
    net.places = std::move(places);
    for (const auto& [name, pre, post] : transitions) {
        if (!seen.insert(name).second) throw SemanticError("duplicate identifier", name);
        net.transitions.push_back(name);
        net.pre.push_back(net.marking_of(pre));
        net.post.push_back(net.marking_of(post));
    }
    net.initial = net.marking_of(initial);
    return net;
}

std::optional<Marking> try_fire(const NetSystem& net, const Marking& m, int a) {
    const auto& pre = net.pre[a];
    const auto& post = net.post[a];
    if (!subset(pre, m)) return std::nullopt;
    if (!disjoint(set_minus(post, pre), m)) return std::nullopt;
    return set_union(set_minus(m, pre), post);
}

std::optional<Marking> try_cofire(const NetSystem& net, const Marking& m, int a) {
    const auto& pre = net.pre[a];
    const auto& post = net.post[a];
    if (!subset(post, m)) return std::nullopt;
    if (!disjoint(set_minus(pre, post), m)) return std::nullopt;
    return set_union(set_minus(m, post), pre);
}

Marking fire(const NetSystem& net, const Marking& m, int a) {
    if (auto r = try_fire(net, m, a)) return *r;
    const auto& pre = net.pre[a];
    std::string why = subset(pre, m) ? "contact: post-place already marked" : "pre-set not marked";
    throw NotEnabled("transition " + net.transitions[a] + " not enabled at " + show(net, m) + " (" + why + ")");
}

Marking cofire(const NetSystem& net, const Marking& m, int a) {
    if (auto r = try_cofire(net, m, a)) return *r;
    const auto& post = net.post[a];
    std::string why = subset(post, m) ? "pre-place already marked" : "post-set not marked";
    throw NotCoEnabled("transition " + net.transitions[a] + " not co-enabled at " + show(net, m) + " (" + why + ")");
}

int MarkingGraph::find(const Marking& m) const {
    auto it = std::find(vertices.begin(), vertices.end(), m);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

MarkingGraph marking_graph(const NetSystem& net, long long max_vertices, bool forward_only) {
    MarkingGraph g;
    std::unordered_map<Marking, int, MarkingHash> index;
    auto visit = [&](const Marking& m) {
        auto [it, fresh] = index.emplace(m, static_cast<int>(g.vertices.size()));
        if (fresh) {
            if (static_cast<long long>(g.vertices.size()) >= max_vertices) throw BudgetExceeded(max_vertices);
            g.vertices.push_back(m);
        }
        return it->second;
    };
    visit(net.initial);
    const int nt = static_cast<int>(net.transitions.size());
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        Marking m = g.vertices[i];
        for (int a = 0; a < nt; ++a) {
            if (auto m2 = try_fire(net, m, a)) {
                int j = visit(*m2);
                g.arcs.push_back({static_cast<int>(i), a, j});
            }
            if (!forward_only) {
                if (auto m0 = try_cofire(net, m, a)) visit(*m0);
            }
        }
    }
    std::sort(g.arcs.begin(), g.arcs.end(), [](const MarkingArc& x, const MarkingArc& y) {
        return std::tie(x.src, x.label) < std::tie(y.src, y.label);
    });
    return g;
}

bool independent(const NetSystem& net, int a, int b) {
    if (a == b) return false;
    auto na = set_union(net.pre[a], net.post[a]);
    auto nb = set_union(net.pre[b], net.post[b]);
    return disjoint(na, nb);
}

std::vector<std::pair<int, int>> independence(const NetSystem& net) {
    std::vector<std::pair<int, int>> out;
    const int nt = static_cast<int>(net.transitions.size());
    for (int a = 0; a < nt; ++a)
        for (int b = a + 1; b < nt; ++b)
            if (independent(net, a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<int> degenerate_transitions(const NetSystem& net) {
    std::vector<int> out;
    for (size_t a = 0; a < net.transitions.size(); ++a)
        if (net.pre[a] == net.post[a]) out.push_back(static_cast<int>(a));
    return out;
}

NetSystem hair_net(const NetSystem& net) {
    std::set<std::string> used(net.places.begin(), net.places.end());
    used.insert(net.transitions.begin(), net.transitions.end());
    auto fresh = [&](const std::string& base) {
        std::string name = base;
        while (used.count(name)) name = "_" + name;
        used.insert(name);
        return name;
    };
    NetSystem out = net;
    std::vector<int> hair_places;
    for (size_t a = 0; a < net.transitions.size(); ++a) {
        int p = static_cast<int>(out.places.size());
        out.places.push_back(fresh("p_" + net.transitions[a]));
        hair_places.push_back(p);
        out.pre[a].push_back(p);
        out.post[a].push_back(p);
        out.initial.push_back(p);
    }
    out.transitions.push_back(fresh("h"));
    out.pre.push_back(hair_places);
    out.post.emplace_back();
    for (auto& s : out.pre) std::sort(s.begin(), s.end());
    for (auto& s : out.post) std::sort(s.begin(), s.end());
    std::sort(out.initial.begin(), out.initial.end());
    return out;
}

}  // namespace netcube
