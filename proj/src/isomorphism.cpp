#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "netcube/complex.hpp"

namespace netcube {

namespace {

using DartKey = std::array<std::pair<int, int>, 4>;  // (edge, forward)

// Minimum over rotations and reversal of a closed dart path.
DartKey canonical_cycle(const std::array<Dart, 4>& d) {
    DartKey best{};
    bool first = true;
    for (int rev = 0; rev < 2; ++rev) {
        std::array<Dart, 4> seq = d;
        if (rev) {
            for (int i = 0; i < 4; ++i) seq[i] = Dart{d[3 - i].edge, !d[3 - i].forward};
        }
        for (int r = 0; r < 4; ++r) {
            DartKey k;
            for (int i = 0; i < 4; ++i) {
                const Dart& x = seq[(i + r) % 4];
                k[i] = {x.edge, x.forward ? 1 : 0};
            }
            if (first || k < best) {
                best = k;
                first = false;
            }
        }
    }
    return best;
}

struct VertexSig {
    int out_deg = 0, in_deg = 0, loops = 0, corners = 0;
    std::vector<std::string> colors;
    auto tie() const { return std::tie(out_deg, in_deg, loops, corners, colors); }
    bool operator==(const VertexSig& o) const { return tie() == o.tie(); }
};

std::vector<VertexSig> signatures(const SquareComplex& c, const IsoOptions& opt) {
    std::vector<VertexSig> sig(c.vertices.size());
    for (const auto& e : c.edges) {
        if (e.src == e.dst) sig[e.src].loops++;
        if (opt.orientation) {
            sig[e.src].out_deg++;
            sig[e.dst].in_deg++;
        } else {
            sig[e.src].out_deg++;
            sig[e.dst].out_deg++;
        }
        if (opt.colors) {
            sig[e.src].colors.push_back((opt.orientation ? "o" : "") + e.color);
            sig[e.dst].colors.push_back((opt.orientation ? "i" : "") + e.color);
        }
    }
    for (const auto& k : c.corners()) sig[k.vertex].corners++;
    for (auto& s : sig) std::sort(s.colors.begin(), s.colors.end());
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const SquareComplex& a, const SquareComplex& b, const IsoOptions& opt) : a_(a), b_(b), opt_(opt) {
        sa_ = signatures(a, opt);
        sb_ = signatures(b, opt);
        for (const auto& sq : b.squares) squares_b_.insert(canonical_cycle(sq.darts));
        squares_of_edge_.resize(a.edges.size());
        for (size_t s = 0; s < a.squares.size(); ++s)
            for (const auto& d : a.squares[s].darts) squares_of_edge_[d.edge].push_back(static_cast<int>(s));
        for (size_t e = 0; e < a.edges.size(); ++e) {
            adj_a_[{a.edges[e].src, a.edges[e].dst}].push_back(static_cast<int>(e));
        }
        for (size_t e = 0; e < b.edges.size(); ++e) {
            adj_b_[{b.edges[e].src, b.edges[e].dst}].push_back(static_cast<int>(e));
        }
    }

    std::optional<IsoWitness> run() {
        if (a_.vertices.size() != b_.vertices.size() || a_.edges.size() != b_.edges.size() ||
            a_.squares.size() != b_.squares.size())
            return std::nullopt;
        vmap_.assign(a_.vertices.size(), -1);
        vused_.assign(b_.vertices.size(), 0);
        emap_.assign(a_.edges.size(), -1);
        erev_.assign(a_.edges.size(), 0);
        eused_.assign(b_.edges.size(), 0);
        order_ = vertex_order();
        if (opt_.basepoints) {
            auto [x, y] = *opt_.basepoints;
            if (!(sa_[x] == sb_[y])) return std::nullopt;
        }
        if (!map_vertex(0)) return std::nullopt;
        return IsoWitness{vmap_, emap_, erev_};
    }

private:
    // BFS order so that each vertex after the first of its component has a mapped neighbour.
    std::vector<int> vertex_order() {
        const int n = static_cast<int>(a_.vertices.size());
        std::vector<std::vector<int>> nb(n);
        for (const auto& e : a_.edges) {
            nb[e.src].push_back(e.dst);
            nb[e.dst].push_back(e.src);
        }
        std::vector<int> order;
        std::vector<char> seen(n, 0);
        auto bfs = [&](int s) {
            seen[s] = 1;
            size_t head = order.size();
            order.push_back(s);
            while (head < order.size()) {
                int v = order[head++];
                for (int w : nb[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        order.push_back(w);
                    }
            }
        };
        if (opt_.basepoints) bfs(opt_.basepoints->first);
        for (int v = 0; v < n; ++v)
            if (!seen[v]) bfs(v);
        return order;
    }

    // Multiset of (colour, direction) of edges between two vertices.
    std::vector<std::string> between(const SquareComplex& c, const std::map<std::pair<int, int>, std::vector<int>>& adj,
                                     int u, int v) const {
        std::vector<std::string> out;
        auto add = [&](int x, int y, const std::string& tag) {
            auto it = adj.find({x, y});
            if (it == adj.end()) return;
            for (int e : it->second) out.push_back((opt_.orientation ? tag : "") + (opt_.colors ? c.edges[e].color : ""));
        };
        add(u, v, ">");
        if (u != v) add(v, u, "<");
        std::sort(out.begin(), out.end());
        return out;
    }

    bool consistent(int v, int w) const {
        if (!(sa_[v] == sb_[w])) return false;
        for (int u = 0; u < static_cast<int>(vmap_.size()); ++u) {
            if (vmap_[u] < 0 && u != v) continue;
            int wu = (u == v) ? w : vmap_[u];
            if (between(a_, adj_a_, v, u) != between(b_, adj_b_, w, wu)) return false;
        }
        return true;
    }

    bool map_vertex(size_t i) {
        if (i == order_.size()) return map_edge(0);
        int v = order_[i];
        std::vector<int> cands;
        if (i == 0 && opt_.basepoints) cands.push_back(opt_.basepoints->second);
        else
            for (int w = 0; w < static_cast<int>(b_.vertices.size()); ++w) cands.push_back(w);
        for (int w : cands) {
            if (vused_[w] || !consistent(v, w)) continue;
            if (opt_.basepoints && w == opt_.basepoints->second && v != opt_.basepoints->first) continue;
            vmap_[v] = w;
            vused_[w] = 1;
            if (map_vertex(i + 1)) return true;
            vmap_[v] = -1;
            vused_[w] = 0;
        }
        return false;
    }

    bool squares_ok(int e) const {
        for (int s : squares_of_edge_[e]) {
            std::array<Dart, 4> img;
            bool complete = true;
            for (int i = 0; i < 4; ++i) {
                const Dart& d = a_.squares[s].darts[i];
                if (emap_[d.edge] < 0) {
                    complete = false;
                    break;
                }
                img[i] = Dart{emap_[d.edge], d.forward != static_cast<bool>(erev_[d.edge])};
            }
            if (complete && !squares_b_.count(canonical_cycle(img))) return false;
        }
        return true;
    }

    bool map_edge(size_t e) {
        if (e == a_.edges.size()) return true;
        const Edge& ea = a_.edges[e];
        int s = vmap_[ea.src], d = vmap_[ea.dst];
        for (int rev = 0; rev < (opt_.orientation ? 1 : 2); ++rev) {
            auto it = adj_b_.find(rev ? std::make_pair(d, s) : std::make_pair(s, d));
            if (it == adj_b_.end()) continue;
            for (int f : it->second) {
                if (eused_[f]) continue;
                if (opt_.colors && b_.edges[f].color != ea.color) continue;
                emap_[e] = f;
                erev_[e] = rev;
                eused_[f] = 1;
                if (squares_ok(static_cast<int>(e)) && map_edge(e + 1)) return true;
                emap_[e] = -1;
                erev_[e] = 0;
                eused_[f] = 0;
            }
        }
        return false;
    }

    const SquareComplex& a_;
    const SquareComplex& b_;
    IsoOptions opt_;
    std::vector<VertexSig> sa_, sb_;
    std::set<DartKey> squares_b_;
    std::vector<std::vector<int>> squares_of_edge_;
    std::map<std::pair<int, int>, std::vector<int>> adj_a_, adj_b_;
    std::vector<int> order_, vmap_, vused_, emap_, erev_, eused_;
};

}  // namespace

std::optional<IsoWitness> isomorphic(const SquareComplex& c1, const SquareComplex& c2, const IsoOptions& opt) {
    IsoSearch search(c1, c2, opt);
    return search.run();
}

std::vector<int> covering_map_by_color(const SquareComplex& cover, const SquareComplex& base) {
    std::vector<int> out;
    for (const auto& e : cover.edges) out.push_back(base.edge_index(e.color));
    return out;
}

CoverReport check_covering(const SquareComplex& cover, const SquareComplex& base, const std::vector<int>& edge_map) {
    CoverReport rep;
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        rep.reason = why;
        return rep;
    };
    if (edge_map.size() != cover.edges.size()) return fail("edge map has wrong size");
    std::vector<int> vmap(cover.vertices.size(), -1);
    auto bind = [&](int v, int w) {
        if (vmap[v] >= 0 && vmap[v] != w) return false;
        vmap[v] = w;
        return true;
    };
    for (size_t e = 0; e < cover.edges.size(); ++e) {
        int f = edge_map[e];
        if (f < 0 || f >= static_cast<int>(base.edges.size())) return fail("edge " + cover.edges[e].name + " unmapped");
        if (!bind(cover.edges[e].src, base.edges[f].src) || !bind(cover.edges[e].dst, base.edges[f].dst))
            return fail("edge " + cover.edges[e].name + " does not induce a vertex map");
    }
    for (size_t v = 0; v < cover.vertices.size(); ++v) {
        if (vmap[v] < 0) return fail("isolated vertex " + cover.vertices[v]);
        std::vector<HalfEdge> img;
        for (const auto& h : cover.half_edges_at(static_cast<int>(v))) img.push_back({edge_map[h.edge], h.out});
        auto target = base.half_edges_at(vmap[v]);
        std::sort(img.begin(), img.end());
        std::sort(target.begin(), target.end());
        if (img != target) return fail("star of vertex " + cover.vertices[v] + " is not mapped bijectively");
    }
    std::set<DartKey> base_sq;
    for (const auto& sq : base.squares) base_sq.insert(canonical_cycle(sq.darts));
    for (size_t s = 0; s < cover.squares.size(); ++s) {
        std::array<Dart, 4> img;
        for (int i = 0; i < 4; ++i) img[i] = {edge_map[cover.squares[s].darts[i].edge], cover.squares[s].darts[i].forward};
        if (!base_sq.count(canonical_cycle(img))) return fail("square " + std::to_string(s) + " maps to no base square");
    }
    std::map<int, std::multiset<std::pair<HalfEdge, HalfEdge>>> link_cover, link_base;
    for (const auto& k : cover.corners()) {
        HalfEdge a{edge_map[k.a.edge], k.a.out}, b{edge_map[k.b.edge], k.b.out};
        link_cover[k.vertex].insert(std::minmax(a, b));
    }
    for (const auto& k : base.corners()) link_base[k.vertex].insert(std::minmax(k.a, k.b));
    for (size_t v = 0; v < cover.vertices.size(); ++v) {
        if (link_cover[static_cast<int>(v)] != link_base[vmap[v]])
            return fail("link of vertex " + cover.vertices[v] + " is not mapped bijectively");
    }
    return rep;
}

}  // namespace netcube
