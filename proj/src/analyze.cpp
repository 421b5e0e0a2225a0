#include "netcube/analyze.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "netcube/errors.hpp"

namespace netcube {

std::vector<int> sphere(const DomainPrefix& d, int k) {
    std::vector<int> s;
    for (int v = 0; v < d.num_vertices(); ++v)
        if (d.depth[v] == k) s.push_back(v);
    return s;
}

std::vector<Cluster> clusters(const DomainPrefix& d, int k) {
    const int n = d.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& a : d.arcs) {
        if (d.depth[a.src] <= k) continue;
        int x = find(a.src), y = find(a.dst);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    std::vector<char> reaches_bound(n, 0);
    for (int v = 0; v < n; ++v)
        if (d.depth[v] > k && d.depth[v] >= d.K) reaches_bound[find(v)] = 1;
    std::map<int, Cluster> by_root;
    int touching = 0;
    for (int v = 0; v < n; ++v) {
        if (d.depth[v] != k + 1) continue;
        int r = find(v);
        auto& c = by_root[r];
        c.level = k;
        c.component = r;
        c.contaminated = reaches_bound[r] != 0;
        c.frontier.push_back(v);
    }
    for (auto& [r, c] : by_root) touching += c.contaminated;
    std::vector<Cluster> out;
    for (auto& [r, c] : by_root) {
        // A lone component reaching the bound has nothing to merge with.
        c.contaminated = c.contaminated && touching >= 2;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) { return a.frontier[0] < b.frontier[0]; });
    return out;
}

// Configuration distance of two vertices at the same depth is 2*depth - 2*depth(meet). The meet m of u and v
// is the common ancestor at which the sets of out-neighbours of m lying below u and below v are disjoint,
// so the diameter follows from the shallowest such m.
int cluster_diameter(const DomainPrefix& d, const DomainIndex& ix, const std::vector<int>& frontier) {
    (void)ix;
    if (frontier.size() < 2) return 0;
    const int n = d.num_vertices();
    std::vector<int> stamp(n, -1);
    std::vector<std::pair<int, std::uint64_t>> entries;
    std::vector<int> down;
    for (int u : frontier) {
        down.assign(1, u);
        stamp[u] = u;
        for (size_t i = 0; i < down.size(); ++i)
            for (int a : d.in(down[i])) {
                int w = d.arcs[a].src;
                if (stamp[w] != u) {
                    stamp[w] = u;
                    down.push_back(w);
                }
            }
        for (int m : down) {
            std::uint64_t mask = 0;
            auto out = d.out(m);
            for (size_t i = 0; i < out.size() && i < 64; ++i)
                if (stamp[d.arcs[out[i]].dst] == u) mask |= std::uint64_t{1} << i;
            entries.emplace_back(m, mask);
        }
    }
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    int best = -1;
    for (size_t i = 0; i < entries.size();) {
        size_t j = i;
        while (j < entries.size() && entries[j].first == entries[i].first) ++j;
        int m = entries[i].first;
        if (best < 0 || d.depth[m] < best) {
            bool disjoint = false;
            for (size_t a = i; a < j && !disjoint; ++a)
                for (size_t b = a + 1; b < j; ++b)
                    if ((entries[a].second & entries[b].second) == 0) {
                        disjoint = true;
                        break;
                    }
            if (disjoint) best = d.depth[m];
        }
        i = j;
    }
    return 2 * d.depth[frontier[0]] - 2 * best;
}

const LevelDiameters* ClusterReport::at(int k) const {
    for (const auto& l : levels)
        if (l.k == k) return &l;
    return nullptr;
}

bool ClusterReport::strictly_increasing(int from, int to) const {
    for (int k = from; k < to; ++k) {
        auto a = at(k), b = at(k + 1);
        if (!a || !b || b->max_diameter <= a->max_diameter) return false;
    }
    return true;
}

ClusterReport cluster_diameters(const DomainPrefix& d, const DomainIndex& ix, int kmin, int kmax) {
    ClusterReport r;
    if (kmax < 0) kmax = d.K - 1;
    for (int k = std::max(0, kmin); k <= kmax && k + 1 <= d.K; ++k) {
        LevelDiameters l;
        l.k = k;
        for (const auto& c : clusters(d, k)) {
            int dia = cluster_diameter(d, ix, c.frontier);
            l.diameters.push_back(dia);
            l.max_diameter = std::max(l.max_diameter, dia);
            l.contaminated = l.contaminated || c.contaminated;
            l.clusters++;
        }
        r.levels.push_back(std::move(l));
    }
    return r;
}

ClusterReport cluster_diameters(const DomainPrefix& d, int kmin, int kmax) {
    DomainIndex ix(d);
    return cluster_diameters(d, ix, kmin, kmax);
}

int sphere_diameter(const DomainPrefix& d, const DomainIndex& ix, int k) { return cluster_diameter(d, ix, sphere(d, k)); }

namespace {

// Label-driven BFS from m over out-arcs inside `inside`; members of `mark` are tagged.
std::string canonical_form(const DomainPrefix& d, int m, const std::vector<int>& inside_stamp, int stamp,
                           const std::vector<int>& mark_stamp, int mark) {
    std::unordered_map<int, int> name{{m, 0}};
    std::vector<int> order{m};
    std::string s;
    for (size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        if (mark_stamp[x] == mark) s += "*" + std::to_string(i) + ";";
        for (int a : d.out(x)) {
            int y = d.arcs[a].dst;
            if (inside_stamp[y] != stamp) continue;
            auto [it, fresh] = name.emplace(y, static_cast<int>(order.size()));
            if (fresh) order.push_back(y);
            s += std::to_string(i) + ">" + d.labels[d.arcs[a].label] + ">" + std::to_string(it->second) + ";";
        }
    }
    return s;
}

}  // namespace

EndTypeCensus end_type_census(const DomainPrefix& d, const DomainIndex& ix, int k) {
    if (k + 1 > d.K) throw InsufficientDepth("end types at level " + std::to_string(k) + " need depth " +
                                             std::to_string(k + 1));
    EndTypeCensus e;
    e.k = k;
    const int n = d.num_vertices();
    std::vector<int> inside(n, -1), member(n, -1);
    std::unordered_map<std::string, int> types;
    int cid = 0;
    for (const auto& c : clusters(d, k)) {
        e.contaminated = e.contaminated || c.contaminated;
        std::vector<int> meet(ix.conf.of(c.frontier[0]).begin(), ix.conf.of(c.frontier[0]).end());
        for (int x : c.frontier) {
            auto cx = ix.conf.of(x);
            std::vector<int> t;
            std::set_intersection(meet.begin(), meet.end(), cx.begin(), cx.end(), std::back_inserter(t));
            meet.swap(t);
            member[x] = cid;
        }
        int m = vertex_of_configuration(d, ix.h, meet);
        if (m < 0) throw InsufficientDepth("meet of a level " + std::to_string(k) + " cluster is missing");
        auto cm = ix.conf.of(m);
        // Union of the intervals I(m, x): the vertices above m and below some frontier vertex.
        std::vector<int> queue(c.frontier.begin(), c.frontier.end());
        for (int x : queue) inside[x] = cid;
        for (size_t i = 0; i < queue.size(); ++i)
            for (int a : d.in(queue[i])) {
                int w = d.arcs[a].src;
                if (inside[w] == cid || d.depth[w] < d.depth[m]) continue;
                auto cw = ix.conf.of(w);
                if (!std::includes(cw.begin(), cw.end(), cm.begin(), cm.end())) continue;
                inside[w] = cid;
                queue.push_back(w);
            }
        std::string form = canonical_form(d, m, inside, cid, member, cid);
        auto [it, fresh] = types.emplace(form, static_cast<int>(types.size()));
        if (fresh) e.forms.push_back(form);
        e.meets.push_back(m);
        e.type_of.push_back(it->second);
        ++cid;
    }
    e.clusters = cid;
    e.types = static_cast<int>(types.size());
    return e;
}

std::vector<EndTypeCensus> end_type_series(const DomainPrefix& d, const DomainIndex& ix, int kmin, int kmax) {
    std::vector<EndTypeCensus> out;
    std::unordered_map<std::string, int> seen;
    for (int k = kmin; k <= kmax; ++k) {
        auto e = end_type_census(d, ix, k);
        for (const auto& f : e.forms) seen.emplace(f, 0);
        e.cumulative_types = static_cast<int>(seen.size());
        out.push_back(std::move(e));
    }
    return out;
}

EndTypeCensus end_type_census(const DomainPrefix& d, int k) {
    DomainIndex ix(d);
    return end_type_census(d, ix, k);
}

std::string analyze_to_json(const DomainPrefix& d, const AnalyzeOptions& opt) {
    using nlohmann::json;
    DomainIndex ix(d);
    json j;
    j["schema_version"] = 1;
    j["K"] = d.K;
    j["vertices"] = d.num_vertices();
    auto rep = cluster_diameters(d, ix, opt.kmin, opt.kmax);
    auto& levels = j["levels"] = json::array();
    for (const auto& l : rep.levels)
        levels.push_back({{"k", l.k},
                          {"clusters", l.clusters},
                          {"max_diameter", l.max_diameter},
                          {"exact", l.exact},
                          {"contaminated", l.contaminated},
                          {"diameters", l.diameters}});
    if (opt.end_types) {
        auto& et = j["end_types"] = json::array();
        int kmax = opt.end_kmax >= 0 ? opt.end_kmax : d.K - 1;
        kmax = std::min(kmax, d.K - 1);
        for (const auto& e : end_type_series(d, ix, std::max(0, opt.kmin), kmax))
            et.push_back({{"k", e.k},
                          {"clusters", e.clusters},
                          {"types", e.types},
                          {"cumulative_types", e.cumulative_types},
                          {"contaminated", e.contaminated}});
    }
    if (opt.grids) {
        auto g = flat_grid_max(d, ix);
        auto iso = isometric_grid_search(d, ix, opt.grid_n, &g);
        j["grids"] = {{"max_min_side", g.max_min_side},
                      {"best", {{"source", g.best.source}, {"rows", g.best.rows}, {"cols", g.best.cols}}},
                      {"maximal_dims", g.maximal_dims},
                      {"two_dimensional", g.two_dimensional},
                      {"truncated", g.truncated},
                      {"isometric", {{"n", iso.n},
                                     {"found", iso.found},
                                     {"by_reduction", iso.by_reduction},
                                     {"exhausted", iso.exhausted},
                                     {"note", iso.note}}}};
    }
    if (opt.bicliques) {
        auto b = biclique_thinness(d, ix, opt.biclique_n);
        j["bicliques"] = {{"max_side", b.max_side},
                          {"side_a", b.side_a},
                          {"side_b", b.side_b},
                          {"hyperplanes", b.hyperplanes},
                          {"crossing_pairs", b.crossing_pairs},
                          {"truncated", b.truncated}};
    }
    return j.dump(2);
}

}  // namespace netcube
