#include "netcube/unfold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "netcube/errors.hpp"

namespace netcube {

int DomainPrefix::add_vertex(int d, int p) {
    depth.push_back(d);
    proj.push_back(p);
    return static_cast<int>(depth.size()) - 1;
}

int DomainPrefix::add_arc(int src, int dst, int label, int base) {
    arcs.push_back({src, dst, label, base});
    return static_cast<int>(arcs.size()) - 1;
}

int DomainPrefix::label_id(const std::string& name) {
    int l = find_label(name);
    if (l >= 0) return l;
    labels.push_back(name);
    return static_cast<int>(labels.size()) - 1;
}

int DomainPrefix::find_label(const std::string& name) const {
    auto it = std::find(labels.begin(), labels.end(), name);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

void DomainPrefix::finalize() {
    const int n = num_vertices();
    auto build = [&](std::vector<int>& off, std::vector<int>& list, bool outgoing) {
        off.assign(n + 1, 0);
        for (const auto& a : arcs) off[(outgoing ? a.src : a.dst) + 1]++;
        for (int v = 0; v < n; ++v) off[v + 1] += off[v];
        list.assign(arcs.size(), 0);
        std::vector<int> pos(off.begin(), off.end() - 1);
        for (size_t i = 0; i < arcs.size(); ++i) list[pos[outgoing ? arcs[i].src : arcs[i].dst]++] = static_cast<int>(i);
        for (int v = 0; v < n; ++v) {
            std::sort(list.begin() + off[v], list.begin() + off[v + 1], [&](int x, int y) {
                return std::tie(arcs[x].label, arcs[x].dst, arcs[x].src) < std::tie(arcs[y].label, arcs[y].dst, arcs[y].src);
            });
        }
    };
    build(out_off_, out_arcs_, true);
    build(in_off_, in_arcs_, false);
}

int DomainPrefix::child(int v, int label) const {
    for (int a : out(v))
        if (arcs[a].label == label) return arcs[a].dst;
    return -1;
}

int DomainPrefix::arc_between(int u, int v) const {
    for (int a : out(u))
        if (arcs[a].dst == v) return a;
    return -1;
}

int DomainPrefix::max_depth() const {
    return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::vector<std::string> DomainPrefix::path_word(int v) const {
    // Collect the down-set of v, then compute least words in depth order.
    std::vector<int> down{v};
    std::unordered_map<int, std::vector<std::string>> best;
    std::unordered_map<int, char> seen{{v, 1}};
    for (size_t i = 0; i < down.size(); ++i)
        for (int a : in(down[i]))
            if (!seen.count(arcs[a].src)) {
                seen[arcs[a].src] = 1;
                down.push_back(arcs[a].src);
            }
    std::sort(down.begin(), down.end(), [&](int x, int y) { return depth[x] < depth[y]; });
    for (int x : down) {
        if (x == root) {
            best[x] = {};
            continue;
        }
        std::optional<std::vector<std::string>> w;
        for (int a : in(x)) {
            auto cand = best[arcs[a].src];
            cand.push_back(labels[arcs[a].label]);
            if (!w || cand < *w) w = cand;
        }
        best[x] = w.value_or(std::vector<std::string>{});
    }
    return best[v];
}

DomainPrefix unfold_complex(const SquareComplex& c, int base, int K, long long budget) {
    if (!is_admissible(c)) throw NotAdmissible("orientation is not admissible");
    DomainPrefix d;
    d.K = K;
    const int nv = static_cast<int>(c.vertices.size());
    auto label_of = [&](int e) { return c.edges[e].color.empty() ? c.edges[e].name : c.edges[e].color; };
    {
        std::vector<std::string> names;
        for (size_t e = 0; e < c.edges.size(); ++e) names.push_back(label_of(static_cast<int>(e)));
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        for (const auto& s : names) d.label_id(s);
    }
    std::vector<std::vector<int>> outs(nv);
    for (size_t e = 0; e < c.edges.size(); ++e) outs[c.edges[e].src].push_back(static_cast<int>(e));
    for (auto& o : outs)
        std::sort(o.begin(), o.end(), [&](int x, int y) { return std::make_pair(label_of(x), x) < std::make_pair(label_of(y), y); });
    std::vector<int> local(c.edges.size());
    for (int v = 0; v < nv; ++v)
        for (size_t i = 0; i < outs[v].size(); ++i) local[outs[v][i]] = static_cast<int>(i);

    struct BaseSquare {
        int ea, eb, f, g;  // source out-edges ea, eb; closing edges f from ea's target, g from eb's target
    };
    std::vector<std::vector<BaseSquare>> sq_at(nv);
    for (size_t s = 0; s < c.squares.size(); ++s) {
        int i = c.source_corner(static_cast<int>(s));
        const auto& dt = c.squares[s].darts;
        sq_at[c.start(dt[i])].push_back({dt[i].edge, dt[(i + 3) % 4].edge, dt[(i + 1) % 4].edge, dt[(i + 2) % 4].edge});
    }

    std::vector<long long> slot_off;
    std::vector<int> slots;
    auto create = [&](int dep, int p) {
        if (d.num_vertices() >= budget) throw BudgetExceeded(budget);
        int v = d.add_vertex(dep, p);
        slot_off.push_back(static_cast<long long>(slots.size()));
        slots.insert(slots.end(), outs[p].size(), -1);
        return v;
    };
    auto slot = [&](int v, int e) -> int& { return slots[slot_off[v] + local[e]]; };

    create(0, base);
    std::vector<int> level_start{0, 1};
    for (int L = 0; L < K; ++L) {
        if (L >= 1) {
            for (int s = level_start[L - 1]; s < level_start[L]; ++s) {
                for (const auto& q : sq_at[d.proj[s]]) {
                    int u = slot(s, q.ea), w = slot(s, q.eb);
                    int& xu = slot(u, q.f);
                    int& xw = slot(w, q.g);
                    if (xu < 0 && xw < 0) {
                        int x = create(L + 1, c.edges[q.f].dst);
                        // create() may reallocate slots; re-resolve references
                        slot(u, q.f) = x;
                        slot(w, q.g) = x;
                    } else if (xu < 0) {
                        xu = xw;
                    } else if (xw < 0) {
                        xw = xu;
                    } else if (xu != xw) {
                        d.post_hoc_merges++;
                    }
                }
            }
        }
        for (int v = level_start[L]; v < level_start[L + 1]; ++v) {
            for (int e : outs[d.proj[v]]) {
                if (slot(v, e) < 0) {
                    int x = create(L + 1, c.edges[e].dst);
                    slot(v, e) = x;
                }
            }
        }
        level_start.push_back(d.num_vertices());
    }
    for (int v = 0; v < d.num_vertices(); ++v) {
        if (d.depth[v] >= K) continue;
        for (int e : outs[d.proj[v]]) d.add_arc(v, slot(v, e), d.find_label(label_of(e)), e);
    }
    d.finalize();
    return d;
}

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& w) const {
        size_t h = 1469598103934665603ull;
        for (int x : w) h = (h ^ static_cast<size_t>(x + 1)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

DomainPrefix unfold_net(const NetSystem& net, int K, long long budget) {
    DomainPrefix d;
    d.K = K;
    for (const auto& t : net.transitions) d.label_id(t);
    TraceAlphabet alpha = TraceAlphabet::from_net(net);
    std::unordered_map<Word, int, VecHash> index;
    std::unordered_map<Marking, int, VecHash> mindex;
    auto marking_id = [&](const Marking& m) {
        auto [it, fresh] = mindex.emplace(m, static_cast<int>(d.markings.size()));
        if (fresh) d.markings.push_back(m);
        return it->second;
    };
    d.add_vertex(0, marking_id(net.initial));
    d.traces.push_back(Trace{});
    index[{}] = 0;
    const int nt = static_cast<int>(net.transitions.size());
    for (int v = 0; v < d.num_vertices(); ++v) {
        if (d.depth[v] >= K) continue;
        const Marking m = d.markings[d.proj[v]];
        for (int a = 0; a < nt; ++a) {
            auto m2 = try_fire(net, m, a);
            if (!m2) continue;
            Word w = d.traces[v].word;
            w.push_back(a);
            Trace t = normalize(w, alpha);
            auto it = index.find(t.word);
            int x;
            if (it == index.end()) {
                if (d.num_vertices() >= budget) throw BudgetExceeded(budget);
                x = d.add_vertex(d.depth[v] + 1, marking_id(*m2));
                index.emplace(t.word, x);
                d.traces.push_back(std::move(t));
            } else {
                x = it->second;
            }
            d.add_arc(v, x, a, a);
        }
    }
    d.finalize();
    return d;
}

DomainPrefix truncate(const DomainPrefix& d, int K) {
    DomainPrefix out;
    out.K = K;
    out.labels = d.labels;
    out.markings = d.markings;
    std::vector<int> remap(d.num_vertices(), -1);
    for (int v = 0; v < d.num_vertices(); ++v) {
        if (d.depth[v] > K) continue;
        remap[v] = out.add_vertex(d.depth[v], d.proj[v]);
        if (!d.traces.empty()) out.traces.push_back(d.traces[v]);
        if (!d.hair.empty()) out.hair.push_back(d.hair[v]);
    }
    out.root = remap[d.root];
    for (const auto& a : d.arcs)
        if (remap[a.src] >= 0 && remap[a.dst] >= 0) out.add_arc(remap[a.src], remap[a.dst], a.label, a.base);
    out.finalize();
    return out;
}

DomainIsoResult check_domain_isomorphism(const DomainPrefix& d1, const DomainPrefix& d2) {
    DomainIsoResult r;
    if (d1.K != d2.K) {
        r.mismatch = "depth bounds differ";
        return r;
    }
    if (d1.num_vertices() != d2.num_vertices()) {
        r.mismatch = "vertex counts differ (" + std::to_string(d1.num_vertices()) + " vs " +
                     std::to_string(d2.num_vertices()) + ")";
        return r;
    }
    std::vector<int> f(d1.num_vertices(), -1), g(d2.num_vertices(), -1);
    std::vector<int> queue{d1.root};
    f[d1.root] = d2.root;
    g[d2.root] = d1.root;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        int w = f[v];
        auto o1 = d1.out(v);
        auto o2 = d2.out(w);
        if (o1.size() != o2.size()) {
            r.mismatch = "out-degree differs at depth " + std::to_string(d1.depth[v]);
            return r;
        }
        for (int a : o1) {
            const std::string& lab = d1.labels[d1.arcs[a].label];
            int l2 = d2.find_label(lab);
            int y = l2 < 0 ? -1 : d2.child(w, l2);
            if (y < 0) {
                r.mismatch = "label " + lab + " missing at depth " + std::to_string(d1.depth[v]);
                return r;
            }
            int x = d1.arcs[a].dst;
            if (f[x] < 0 && g[y] < 0) {
                f[x] = y;
                g[y] = x;
                queue.push_back(x);
            } else if (f[x] != y || g[y] != x) {
                r.mismatch = "label-driven map is not a bijection at depth " + std::to_string(d1.depth[x]);
                return r;
            }
        }
    }
    if (static_cast<int>(queue.size()) != d1.num_vertices()) {
        r.mismatch = "unreached vertices";
        return r;
    }
    r.ok = true;
    r.mapping = std::move(f);
    return r;
}

std::vector<DomainSquare> squares_at(const DomainPrefix& d, int s) {
    std::vector<DomainSquare> out;
    auto o = d.out(s);
    for (size_t i = 0; i < o.size(); ++i) {
        for (size_t j = i + 1; j < o.size(); ++j) {
            int su = o[i], sw = o[j];
            int u = d.arcs[su].dst, w = d.arcs[sw].dst;
            if (u == w) continue;
            if (u > w) {
                std::swap(u, w);
                std::swap(su, sw);
            }
            for (int ux : d.out(u))
                for (int wx : d.out(w))
                    if (d.arcs[ux].dst == d.arcs[wx].dst) out.push_back({s, u, w, d.arcs[ux].dst, su, sw, ux, wx});
        }
    }
    return out;
}

std::vector<DomainSquare> all_squares(const DomainPrefix& d) {
    std::vector<DomainSquare> out;
    for (int s = 0; s < d.num_vertices(); ++s) {
        auto q = squares_at(d, s);
        out.insert(out.end(), q.begin(), q.end());
    }
    return out;
}

std::vector<int> bfs_distances(const DomainPrefix& d, int src) {
    std::vector<int> dist(d.num_vertices(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        auto visit = [&](int w) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        };
        for (int a : d.out(v)) visit(d.arcs[a].dst);
        for (int a : d.in(v)) visit(d.arcs[a].src);
    }
    return dist;
}

IntervalResult interval(const DomainPrefix& d, int u, int v) {
    IntervalResult r;
    auto du = bfs_distances(d, u);
    auto dv = bfs_distances(d, v);
    r.distance = du[v];
    if (r.distance < 0) return r;
    for (int x = 0; x < d.num_vertices(); ++x)
        if (du[x] >= 0 && dv[x] >= 0 && du[x] + dv[x] == r.distance) r.vertices.push_back(x);
    // Geodesics stay below the join, whose depth is at most depth(u) + depth(v).
    r.exact = d.depth[u] + d.depth[v] <= d.K || (d.depth[u] + r.distance <= d.K && d.depth[v] + r.distance <= d.K);
    return r;
}

PrefixHyperplanes prefix_hyperplanes(const DomainPrefix& d, const SquareComplex* base) {
    const int na = static_cast<int>(d.arcs.size());
    std::vector<int> parent(na);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (int s = 0; s < d.num_vertices(); ++s) {
        for (const auto& q : squares_at(d, s)) {
            unite(q.su, q.wx);
            unite(q.sw, q.ux);
        }
    }
    PrefixHyperplanes h;
    h.of_arc.assign(na, -1);
    // Number classes by their gate arc: order of (first depth, arc index).
    std::vector<int> order(na);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d.depth[d.arcs[x].src] < d.depth[d.arcs[y].src]; });
    std::vector<int> id_of_root(na, -1);
    for (int a : order) {
        int r = find(a);
        if (id_of_root[r] < 0) {
            id_of_root[r] = h.count();
            h.first_depth.push_back(d.depth[d.arcs[a].src]);
            h.gate_arc.push_back(a);
        } else if (d.depth[d.arcs[a].src] == h.first_depth[id_of_root[r]]) {
            h.unique_gates = false;
        }
        h.of_arc[a] = id_of_root[r];
    }
    const int nh = h.count();
    h.arc_off.assign(nh + 1, 0);
    for (int a = 0; a < na; ++a) h.arc_off[h.of_arc[a] + 1]++;
    for (int i = 0; i < nh; ++i) h.arc_off[i + 1] += h.arc_off[i];
    h.arc_list.assign(na, 0);
    std::vector<int> pos(h.arc_off.begin(), h.arc_off.end() - 1);
    for (int a = 0; a < na; ++a) h.arc_list[pos[h.of_arc[a]]++] = a;
    h.base.assign(nh, -1);
    if (base) {
        HyperplaneSystem bh = hyperplanes(*base);
        for (int i = 0; i < nh; ++i) {
            int e = d.arcs[h.gate_arc[i]].base;
            if (e >= 0) h.base[i] = bh.of_edge[e];
        }
    }
    return h;
}

Configurations::Configurations(const DomainPrefix& d, const PrefixHyperplanes& h) {
    const int n = d.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d.depth[x] < d.depth[y]; });
    // Vertices are stored in depth order, so parents are written before children.
    std::vector<std::int64_t> start(n, -1);
    std::vector<int> len(n, 0);
    data_.reserve(static_cast<size_t>(n) * 4);
    std::vector<int> tmp;
    for (int v : order) {
        tmp.clear();
        auto in = d.in(v);
        if (!in.empty()) {
            int a = in[0];
            int u = d.arcs[a].src;
            tmp.assign(data_.begin() + start[u], data_.begin() + start[u] + len[u]);
            int hv = h.of_arc[a];
            tmp.insert(std::upper_bound(tmp.begin(), tmp.end(), hv), hv);
        }
        start[v] = static_cast<std::int64_t>(data_.size());
        len[v] = static_cast<int>(tmp.size());
        data_.insert(data_.end(), tmp.begin(), tmp.end());
    }
    // Re-pack in vertex order for span access.
    std::vector<int> packed;
    packed.reserve(data_.size());
    off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        off_[v] = static_cast<std::int64_t>(packed.size());
        packed.insert(packed.end(), data_.begin() + start[v], data_.begin() + start[v] + len[v]);
    }
    off_[n] = static_cast<std::int64_t>(packed.size());
    data_ = std::move(packed);
}

bool Configurations::contains(int v, int h) const {
    auto c = of(v);
    return std::binary_search(c.begin(), c.end(), h);
}

int Configurations::common(int u, int v) const {
    auto a = of(u), b = of(v);
    int n = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++n;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return n;
}

int Configurations::distance(int u, int v) const {
    return static_cast<int>(of(u).size() + of(v).size()) - 2 * common(u, v);
}

std::optional<int> join_vertex(const DomainPrefix& d, const PrefixHyperplanes& h, const Configurations& conf, int u,
                               int v) {
    auto cv = conf.of(v);
    int target = static_cast<int>(conf.of(u).size() + cv.size()) - conf.common(u, v);
    int x = u;
    while (static_cast<int>(conf.of(x).size()) < target) {
        int next = -1;
        for (int a : d.out(x)) {
            int hh = h.of_arc[a];
            if (std::binary_search(cv.begin(), cv.end(), hh)) {
                next = d.arcs[a].dst;
                break;
            }
        }
        if (next < 0) return std::nullopt;
        x = next;
    }
    return x;
}

int vertex_of_configuration(const DomainPrefix& d, const PrefixHyperplanes& h, const std::vector<int>& conf) {
    int x = d.root;
    for (size_t step = 0; step < conf.size(); ++step) {
        int next = -1;
        for (int a : d.out(x)) {
            if (std::binary_search(conf.begin(), conf.end(), h.of_arc[a])) {
                next = d.arcs[a].dst;
                break;
            }
        }
        if (next < 0) return -1;
        x = next;
    }
    return x;
}

int meet_vertex(const DomainPrefix& d, const PrefixHyperplanes& h, const Configurations& conf, int u, int v) {
    auto a = conf.of(u), b = conf.of(v);
    std::vector<int> m;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return vertex_of_configuration(d, h, m);
}

}  // namespace netcube
