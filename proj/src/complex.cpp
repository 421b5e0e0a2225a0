#include "netcube/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "netcube/errors.hpp"

namespace netcube {

int SquareComplex::add_vertex(const std::string& name) {
    vertices.push_back(name);
    return static_cast<int>(vertices.size()) - 1;
}

int SquareComplex::add_edge(const std::string& name, int src, int dst, const std::string& color) {
    edges.push_back({name, src, dst, color});
    return static_cast<int>(edges.size()) - 1;
}

int SquareComplex::add_square(const std::array<Dart, 4>& darts) {
    for (int i = 0; i < 4; ++i) {
        if (end(darts[i]) != start(darts[(i + 1) % 4]))
            throw SemanticError("square darts do not form a closed path", edges[darts[i].edge].name);
    }
    squares.push_back({darts});
    return static_cast<int>(squares.size()) - 1;
}

int SquareComplex::vertex_index(const std::string& name) const {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int SquareComplex::edge_index(const std::string& name) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return static_cast<int>(i);
    return -1;
}

bool SquareComplex::colored() const {
    return !edges.empty() && std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return !e.color.empty(); });
}

std::vector<HalfEdge> SquareComplex::half_edges_at(int v) const {
    std::vector<HalfEdge> out;
    for (size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].src == v) out.push_back({static_cast<int>(e), true});
        if (edges[e].dst == v) out.push_back({static_cast<int>(e), false});
    }
    return out;
}

std::vector<SquareComplex::Corner> SquareComplex::corners() const {
    std::vector<Corner> out;
    out.reserve(squares.size() * 4);
    for (size_t s = 0; s < squares.size(); ++s) {
        const auto& d = squares[s].darts;
        for (int i = 0; i < 4; ++i) {
            const Dart& prev = d[(i + 3) % 4];
            out.push_back({static_cast<int>(s), i, start(d[i]), entering(prev), leaving(d[i])});
        }
    }
    return out;
}

int SquareComplex::source_corner(int s) const {
    const auto& d = squares[s].darts;
    for (int i = 0; i < 4; ++i)
        if (d[i].forward && !d[(i + 3) % 4].forward) return i;
    return -1;
}

bool is_admissible(const SquareComplex& c) {
    for (const auto& sq : c.squares) {
        const auto& d = sq.darts;
        if (d[0].forward == d[2].forward || d[1].forward == d[3].forward) return false;
    }
    return true;
}

namespace {

struct ParityUnionFind {
    std::vector<int> parent, parity;
    explicit ParityUnionFind(size_t n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    std::pair<int, int> find(int x) {
        std::vector<int> path;
        while (parent[x] != x) {
            path.push_back(x);
            x = parent[x];
        }
        // path holds nodes from the query upwards; fix parities from the top down
        for (size_t i = path.size(); i-- > 0;) {
            int n = path[i];
            if (parent[n] != x) parity[n] ^= parity[parent[n]];
            parent[n] = x;
        }
        return {x, path.empty() ? 0 : parity[path[0]]};
    }
    // Returns false on a parity contradiction.
    bool unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        parent[rb] = ra;
        parity[rb] = pa ^ pb ^ rel;
        return true;
    }
};

std::string he_name(const SquareComplex& c, const HalfEdge& h) {
    return c.edges[h.edge].name + (h.out ? "(out)" : "(in)");
}

}  // namespace

HyperplaneSystem hyperplanes(const SquareComplex& c) {
    const size_t ne = c.edges.size();
    ParityUnionFind uf(ne);
    std::vector<char> contradiction_edge(ne, 0);
    for (const auto& sq : c.squares) {
        const auto& d = sq.darts;
        for (int i = 0; i < 2; ++i) {
            const Dart& x = d[i];
            const Dart& y = d[i + 2];
            // Opposite sides are traversed in opposite directions, so the edges agree
            // geometrically exactly when the dart signs differ.
            int rel = (x.forward == y.forward) ? 1 : 0;
            if (!uf.unite(x.edge, y.edge, rel)) contradiction_edge[x.edge] = 1;
        }
    }
    HyperplaneSystem hs;
    hs.of_edge.assign(ne, -1);
    hs.flip.assign(ne, 0);
    std::map<int, int> root_id;
    for (size_t e = 0; e < ne; ++e) {
        auto [r, p] = uf.find(static_cast<int>(e));
        auto it = root_id.find(r);
        if (it == root_id.end()) {
            it = root_id.emplace(r, static_cast<int>(hs.planes.size())).first;
            hs.planes.push_back({it->second, {}, true});
        }
        hs.of_edge[e] = it->second;
        hs.flip[e] = p;
        hs.planes[it->second].edges.push_back(static_cast<int>(e));
    }
    for (size_t e = 0; e < ne; ++e)
        if (contradiction_edge[e]) hs.planes[hs.of_edge[e]].two_sided = false;
    return hs;
}

namespace {

Dart reversed(const Dart& d) { return {d.edge, !d.forward}; }

// Walks one leg of the corner (s, i) starting along half-edge h, and returns the side of the square
// that leaves the end of that leg, parallel to the other leg.
Dart far_side(const SquareComplex& c, int s, int i, const HalfEdge& h) {
    const auto& d = c.squares[s].darts;
    if (SquareComplex::leaving(d[i]) == h) return d[(i + 1) % 4];
    return reversed(d[(i + 2) % 4]);
}

}  // namespace

NpcReport check_npc(const SquareComplex& c) {
    NpcReport rep;
    // vertex -> link edge -> corners realizing it
    std::map<int, std::map<std::pair<HalfEdge, HalfEdge>, std::vector<std::pair<int, int>>>> link;
    for (const auto& k : c.corners()) {
        if (k.a == k.b) {
            rep.ok = false;
            rep.violations.push_back("link loop at vertex " + c.vertices[k.vertex] + " from square " +
                                     std::to_string(k.square));
            continue;
        }
        auto key = std::minmax(k.a, k.b);
        auto& at = link[k.vertex][key];
        at.emplace_back(k.square, k.index);
        if (at.size() == 2) {
            rep.ok = false;
            rep.violations.push_back("parallel link edges at vertex " + c.vertices[k.vertex] + " between " +
                                     he_name(c, key.first) + " and " + he_name(c, key.second));
        }
    }
    auto corner = [&](int v, const HalfEdge& x, const HalfEdge& y) -> const std::pair<int, int>* {
        auto lv = link.find(v);
        if (lv == link.end()) return nullptr;
        auto it = lv->second.find(std::minmax(x, y));
        return it == lv->second.end() ? nullptr : &it->second.front();
    };
    // A link triangle is the corner of a 3-cube when the three opposite squares exist and share their far
    // corner; the cube is then part of the cube complex this square complex is the 2-skeleton of.
    auto fills_cube = [&](int v, const std::array<HalfEdge, 3>& h) {
        int far = -1;
        for (int i = 0; i < 3; ++i) {
            const HalfEdge& hj = h[(i + 1) % 3];
            const HalfEdge& hk = h[(i + 2) % 3];
            const auto* sj = corner(v, h[i], hj);
            const auto* sk = corner(v, h[i], hk);
            if (!sj || !sk) return false;
            Dart pj = far_side(c, sj->first, sj->second, h[i]);
            Dart pk = far_side(c, sk->first, sk->second, h[i]);
            const auto* top = corner(c.start(pj), SquareComplex::leaving(pj), SquareComplex::leaving(pk));
            if (!top) return false;
            int x = c.end(c.squares[top->first].darts[(top->second + 1) % 4]);
            if (far >= 0 && x != far) return false;
            far = x;
        }
        return true;
    };
    for (const auto& [v, edges] : link) {
        std::map<HalfEdge, std::set<HalfEdge>> adj;
        for (const auto& [key, at] : edges) {
            adj[key.first].insert(key.second);
            adj[key.second].insert(key.first);
        }
        for (const auto& [key, at] : edges) {
            for (const auto& z : adj[key.first]) {
                if (key.second < z && adj[key.second].count(z) && !fills_cube(v, {key.first, key.second, z})) {
                    rep.ok = false;
                    rep.violations.push_back("link triangle at vertex " + c.vertices[v] + " on " +
                                             he_name(c, key.first) + ", " + he_name(c, key.second) + ", " +
                                             he_name(c, z) + " does not bound a cube");
                }
            }
        }
    }
    return rep;
}

SpecialnessReport check_special(const SquareComplex& c) {
    if (!is_admissible(c)) throw NotAdmissible("orientation is not admissible");
    SpecialnessReport rep;
    HyperplaneSystem hs = hyperplanes(c);
    for (const auto& h : hs.planes)
        if (!h.two_sided) rep.one_sided.push_back(h.id);

    std::set<int> self_int;
    std::set<std::pair<int, int>> crossing;
    std::map<std::pair<int, int>, int> crossing_square;
    for (size_t s = 0; s < c.squares.size(); ++s) {
        const auto& d = c.squares[s].darts;
        for (int i = 0; i < 4; ++i) {
            int h1 = hs.of_edge[d[i].edge];
            int h2 = hs.of_edge[d[(i + 1) % 4].edge];
            if (h1 == h2) {
                if (self_int.insert(h1).second) rep.self_intersecting.emplace_back(h1, static_cast<int>(s));
            } else {
                auto key = std::minmax(h1, h2);
                if (crossing.insert(key).second) crossing_square[key] = static_cast<int>(s);
            }
        }
    }

    std::map<int, std::set<std::pair<HalfEdge, HalfEdge>>> linked;
    for (const auto& k : c.corners()) linked[k.vertex].insert(std::minmax(k.a, k.b));

    std::set<int> direct_seen, indirect_seen;
    std::set<std::pair<int, int>> inter_seen;
    for (size_t v = 0; v < c.vertices.size(); ++v) {
        auto hes = c.half_edges_at(static_cast<int>(v));
        const auto& lk = linked[static_cast<int>(v)];
        for (size_t i = 0; i < hes.size(); ++i) {
            for (size_t j = i + 1; j < hes.size(); ++j) {
                const HalfEdge& a = hes[i];
                const HalfEdge& b = hes[j];
                if (a.edge == b.edge) continue;
                if (lk.count(std::minmax(a, b))) continue;
                int h1 = hs.of_edge[a.edge];
                int h2 = hs.of_edge[b.edge];
                Osculation w{static_cast<int>(v), a, b};
                if (h1 == h2) {
                    if (!hs.planes[h1].two_sided) continue;
                    bool ea = a.out ^ static_cast<bool>(hs.flip[a.edge]);
                    bool eb = b.out ^ static_cast<bool>(hs.flip[b.edge]);
                    if (ea == eb) {
                        if (direct_seen.insert(h1).second) rep.direct_self_osculating.emplace_back(h1, w);
                    } else {
                        if (indirect_seen.insert(h1).second) rep.indirect_self_osculating.emplace_back(h1, w);
                    }
                } else {
                    auto key = std::minmax(h1, h2);
                    if (crossing.count(key) && inter_seen.insert(key).second)
                        rep.inter_osculating.push_back({key.first, key.second, crossing_square[key], w});
                }
            }
        }
    }
    rep.is_special = rep.one_sided.empty() && rep.self_intersecting.empty() && rep.direct_self_osculating.empty() &&
                     rep.inter_osculating.empty();
    return rep;
}

std::string SpecialnessReport::first_pathology(const SquareComplex& c) const {
    auto osc = [&](const Osculation& o) {
        return "at vertex " + c.vertices[o.vertex] + " via " + he_name(c, o.a) + " and " + he_name(c, o.b);
    };
    if (!one_sided.empty()) return "hyperplane H" + std::to_string(one_sided[0]) + " is one-sided";
    if (!self_intersecting.empty())
        return "hyperplane H" + std::to_string(self_intersecting[0].first) + " self-intersects in square " +
               std::to_string(self_intersecting[0].second);
    if (!direct_self_osculating.empty())
        return "hyperplane H" + std::to_string(direct_self_osculating[0].first) + " directly self-osculates " +
               osc(direct_self_osculating[0].second);
    if (!inter_osculating.empty())
        return "hyperplanes H" + std::to_string(inter_osculating[0].h1) + " and H" +
               std::to_string(inter_osculating[0].h2) + " inter-osculate " + osc(inter_osculating[0].where);
    return "";
}

LabelingReport check_trace_labeling(const SquareComplex& c, const TraceAlphabet& alpha) {
    LabelingReport rep;
    auto fail = [&](const std::string& axiom, const std::string& witness) {
        rep.ok = false;
        rep.axiom = axiom;
        rep.witness = witness;
        return rep;
    };
    if (!is_admissible(c)) throw NotAdmissible("orientation is not admissible");
    std::vector<int> label(c.edges.size());
    for (size_t e = 0; e < c.edges.size(); ++e) {
        if (c.edges[e].color.empty()) throw UnknownLetter("edge " + c.edges[e].name + " has no label");
        label[e] = alpha.index(c.edges[e].color);
    }
    for (size_t s = 0; s < c.squares.size(); ++s) {
        const auto& d = c.squares[s].darts;
        if (label[d[0].edge] != label[d[2].edge] || label[d[1].edge] != label[d[3].edge])
            return fail("TL1", "square " + std::to_string(s) + " has opposite edges with different labels");
        if (!alpha.indep(label[d[0].edge], label[d[1].edge]))
            return fail("TL1", "square " + std::to_string(s) + " carries dependent labels " +
                                   alpha.name(label[d[0].edge]) + "," + alpha.name(label[d[1].edge]));
    }
    std::map<int, std::set<std::pair<HalfEdge, HalfEdge>>> linked;
    for (const auto& k : c.corners()) linked[k.vertex].insert(std::minmax(k.a, k.b));
    for (size_t v = 0; v < c.vertices.size(); ++v) {
        auto hes = c.half_edges_at(static_cast<int>(v));
        const auto& lk = linked[static_cast<int>(v)];
        for (size_t i = 0; i < hes.size(); ++i) {
            for (size_t j = i + 1; j < hes.size(); ++j) {
                const HalfEdge& a = hes[i];
                const HalfEdge& b = hes[j];
                int la = label[a.edge], lb = label[b.edge];
                std::string axiom = (a.out && b.out) ? "TL2" : (!a.out && !b.out) ? "TL4" : "TL3";
                std::string where = " at vertex " + c.vertices[v] + " on " + he_name(c, a) + " and " + he_name(c, b);
                if (a.out == b.out && la == lb) return fail(axiom, "equal labels" + where);
                bool in_square = lk.count(std::minmax(a, b)) > 0;
                if (alpha.indep(la, lb) != in_square)
                    return fail(axiom, std::string(in_square ? "dependent labels in a common square"
                                                             : "independent labels not in a common square") +
                                           where);
            }
        }
    }
    return rep;
}

SquareComplex canonical_hyperplane_labeling(const SquareComplex& c) {
    SquareComplex out = c;
    HyperplaneSystem hs = hyperplanes(c);
    for (size_t e = 0; e < c.edges.size(); ++e) out.edges[e].color = "H" + std::to_string(hs.of_edge[e]);
    return out;
}

TraceAlphabet crossing_alphabet(const SquareComplex& c) {
    HyperplaneSystem hs = hyperplanes(c);
    std::vector<std::string> letters;
    for (const auto& h : hs.planes) letters.push_back("H" + std::to_string(h.id));
    TraceAlphabet alpha(letters, {});
    for (const auto& sq : c.squares) {
        const auto& d = sq.darts;
        for (int i = 0; i < 4; ++i) {
            int h1 = hs.of_edge[d[i].edge], h2 = hs.of_edge[d[(i + 1) % 4].edge];
            if (h1 != h2) alpha.set_independent(h1, h2, true);
        }
    }
    return alpha;
}

SquareComplex hair_complex(const SquareComplex& c, const std::string& hair_color) {
    SquareComplex out = c;
    std::set<std::string> used(c.vertices.begin(), c.vertices.end());
    std::set<std::string> used_edges;
    for (const auto& e : c.edges) used_edges.insert(e.name);
    auto fresh = [](std::set<std::string>& pool, std::string name) {
        while (pool.count(name)) name += "'";
        pool.insert(name);
        return name;
    };
    const bool colored = c.colored();
    for (size_t v = 0; v < c.vertices.size(); ++v) {
        int w = out.add_vertex(fresh(used, c.vertices[v] + "_h"));
        out.add_edge(fresh(used_edges, "h_" + c.vertices[v]), static_cast<int>(v), w, colored ? hair_color : "");
    }
    return out;
}

XNResult build_XN(const NetSystem& net, long long budget) {
    XNResult r;
    r.graph = marking_graph(net, budget);
    auto& c = r.complex;
    for (size_t i = 0; i < r.graph.vertices.size(); ++i) c.add_vertex("m" + std::to_string(i));
    std::map<std::pair<int, int>, int> arc_edge;  // (src, transition) -> edge
    for (const auto& a : r.graph.arcs) {
        int e = c.add_edge("e" + std::to_string(c.edges.size()), a.src, a.dst, net.transitions[a.label]);
        arc_edge[{a.src, a.label}] = e;
        r.edge_label.push_back(a.label);
    }
    const int nt = static_cast<int>(net.transitions.size());
    for (size_t m = 0; m < r.graph.vertices.size(); ++m) {
        for (int a = 0; a < nt; ++a) {
            auto ea = arc_edge.find({static_cast<int>(m), a});
            if (ea == arc_edge.end()) continue;
            for (int b = a + 1; b < nt; ++b) {
                if (!independent(net, a, b)) continue;
                auto eb = arc_edge.find({static_cast<int>(m), b});
                if (eb == arc_edge.end()) continue;
                int m1 = c.edges[ea->second].dst;
                int m2 = c.edges[eb->second].dst;
                int e1 = arc_edge.at({m1, b});
                int e2 = arc_edge.at({m2, a});
                c.add_square({Dart{ea->second, true}, Dart{e1, true}, Dart{e2, false}, Dart{eb->second, false}});
            }
        }
    }
    return r;
}

}  // namespace netcube
