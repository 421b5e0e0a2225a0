#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lexer.hpp"
#include "netcube/errors.hpp"
#include "netcube/unfold.hpp"

namespace netcube {

namespace {

// BFS over arcs restricted to vertices with depth in [lo, hi].
std::vector<int> bfs_band(const DomainPrefix& d, int src, int lo, int hi) {
    std::vector<int> dist(d.num_vertices(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        auto visit = [&](int w) {
            if (dist[w] < 0 && d.depth[w] >= lo && d.depth[w] <= hi) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        };
        for (int a : d.out(v)) visit(d.arcs[a].dst);
        for (int a : d.in(v)) visit(d.arcs[a].src);
    }
    return dist;
}

void witness(MedianReport& r, const std::string& s) {
    r.ok = false;
    if (r.witnesses.size() < 20) r.witnesses.push_back(s);
}

}  // namespace

MedianReport validate_median(const DomainPrefix& d, int samples, std::uint64_t seed) {
    MedianReport r;
    const int n = d.num_vertices();
    if (n == 0) return r;

    for (const auto& a : d.arcs) {
        if (d.depth[a.dst] != d.depth[a.src] + 1) {
            r.layering_violations++;
            witness(r, "arc " + std::to_string(a.src) + "->" + std::to_string(a.dst) + " does not go up one level");
        }
    }

    // Quadrangle: two in-neighbours of x have a common in-neighbour; no K_{2,3}.
    std::vector<int> mark(n, -1), count(n, 0);
    for (int x = 0; x < n; ++x) {
        auto in = d.in(x);
        for (size_t i = 0; i < in.size(); ++i) {
            int u = d.arcs[in[i]].src;
            for (int b : d.in(u)) {
                int s = d.arcs[b].src;
                if (mark[s] != x) {
                    mark[s] = x;
                    count[s] = 0;
                }
                count[s]++;
            }
        }
        for (size_t i = 0; i < in.size(); ++i) {
            int u = d.arcs[in[i]].src;
            for (int b : d.in(u)) {
                int s = d.arcs[b].src;
                if (mark[s] == x && count[s] > 2) {
                    r.quadrangle_violations++;
                    witness(r, "K_{2,3} between " + std::to_string(s) + " and " + std::to_string(x));
                    count[s] = 0;
                }
            }
        }
        for (size_t i = 0; i < in.size(); ++i) {
            for (size_t j = i + 1; j < in.size(); ++j) {
                int u = d.arcs[in[i]].src, w = d.arcs[in[j]].src;
                bool found = false;
                for (int a : d.in(u)) {
                    for (int b : d.in(w))
                        if (d.arcs[a].src == d.arcs[b].src) found = true;
                }
                if (!found) {
                    r.quadrangle_violations++;
                    witness(r, "in-neighbours " + std::to_string(u) + "," + std::to_string(w) + " of " +
                                   std::to_string(x) + " have no common in-neighbour");
                }
            }
        }
    }

    // Two vertices share at most one upper cover; a second one closes a K_{2,3} through their common lower cover.
    {
        std::map<std::pair<int, int>, int> covers;
        for (int x = 0; x < n; ++x) {
            auto in = d.in(x);
            for (size_t i = 0; i < in.size(); ++i)
                for (size_t j = i + 1; j < in.size(); ++j) {
                    int u = d.arcs[in[i]].src, w = d.arcs[in[j]].src;
                    if (++covers[{std::min(u, w), std::max(u, w)}] == 2) {
                        r.quadrangle_violations++;
                        witness(r, "vertices " + std::to_string(u) + "," + std::to_string(w) + " have two common upper covers");
                    }
                }
        }
    }

    // 3-cube condition, bottom form: three pairwise squares at a source close to a cube.
    for (int s = 0; s < n; ++s) {
        if (d.depth[s] + 3 > d.K) continue;
        auto sq = squares_at(d, s);
        if (sq.size() < 3) continue;
        auto tip = [&](int u, int w) {
            for (const auto& q : sq)
                if ((q.u == u && q.w == w) || (q.u == w && q.w == u)) return q.x;
            return -1;
        };
        auto out = d.out(s);
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                for (size_t k = j + 1; k < out.size(); ++k) {
                    int a = d.arcs[out[i]].dst, b = d.arcs[out[j]].dst, c = d.arcs[out[k]].dst;
                    int x1 = tip(a, b), x2 = tip(a, c), x3 = tip(b, c);
                    if (x1 < 0 || x2 < 0 || x3 < 0) continue;
                    r.checked_cubes++;
                    bool found = false;
                    for (int p : d.out(x1)) {
                        int y = d.arcs[p].dst;
                        if (d.arc_between(x2, y) >= 0 && d.arc_between(x3, y) >= 0) found = true;
                    }
                    if (!found) {
                        r.cube_violations++;
                        witness(r, "three squares at " + std::to_string(s) + " do not close to a cube");
                    }
                }
    }
    // Top form: three pairwise squares under a sink share a bottom corner.
    for (int x = 0; x < n; ++x) {
        auto in = d.in(x);
        if (in.size() < 3) continue;
        auto bottom = [&](int u, int w) {
            for (int a : d.in(u))
                for (int b : d.in(w))
                    if (d.arcs[a].src == d.arcs[b].src) return d.arcs[a].src;
            return -1;
        };
        for (size_t i = 0; i < in.size(); ++i)
            for (size_t j = i + 1; j < in.size(); ++j)
                for (size_t k = j + 1; k < in.size(); ++k) {
                    int a = d.arcs[in[i]].src, b = d.arcs[in[j]].src, c = d.arcs[in[k]].src;
                    int s1 = bottom(a, b), s2 = bottom(a, c), s3 = bottom(b, c);
                    if (s1 < 0 || s2 < 0 || s3 < 0) continue;
                    r.checked_cubes++;
                    bool found = false;
                    for (int p : d.in(s1)) {
                        int y = d.arcs[p].src;
                        if (d.arc_between(y, s2) >= 0 && d.arc_between(y, s3) >= 0) found = true;
                    }
                    if (!found) {
                        r.cube_violations++;
                        witness(r, "three squares under " + std::to_string(x) + " have no common bottom");
                    }
                }
    }

    // Directed paths from the root are geodesics.
    {
        auto dist = bfs_distances(d, d.root);
        for (int v = 0; v < n; ++v)
            if (dist[v] != d.depth[v]) {
                r.geodesic_violations++;
                witness(r, "vertex " + std::to_string(v) + " is closer to the root than its depth");
            }
    }

    std::mt19937_64 rng(seed);
    // Full-prefix BFS is the expensive step; scale the number of sampled sources to the prefix size.
    const long long work = std::max<long long>(4, std::min<long long>(samples, 40000000LL / std::max(n, 1)));
    auto pick = [&](int maxdepth) {
        std::vector<int> pool;
        for (int v = 0; v < n && pool.size() < 200000; ++v)
            if (d.depth[v] <= maxdepth) pool.push_back(v);
        return pool;
    };

    // Directed paths from sampled sources are geodesics (the order interval holds all geodesics).
    {
        auto pool = pick(d.K);
        for (long long t = 0; t < work; ++t) {
            int u = pool[rng() % pool.size()];
            auto dist = bfs_band(d, u, d.depth[u], d.K);
            std::vector<int> up{u};
            std::vector<char> seen(0);
            std::vector<int> ddist(n, -1);
            ddist[u] = 0;
            for (size_t i = 0; i < up.size(); ++i)
                for (int a : d.out(up[i])) {
                    int w = d.arcs[a].dst;
                    if (ddist[w] < 0) {
                        ddist[w] = ddist[up[i]] + 1;
                        up.push_back(w);
                    }
                }
            for (int w : up)
                if (dist[w] != ddist[w]) {
                    r.geodesic_violations++;
                    witness(r, "directed path " + std::to_string(u) + "->" + std::to_string(w) + " is not geodesic");
                }
        }
    }

    // Median uniqueness on sampled triples whose pairwise intervals stay inside the prefix.
    {
        const int D = d.K / 3;
        auto pool = pick(D);
        for (int t = 0; t < samples && !pool.empty(); ++t) {
            int a = pool[rng() % pool.size()], b = pool[rng() % pool.size()], c = pool[rng() % pool.size()];
            auto da = bfs_band(d, a, 0, 2 * D), db = bfs_band(d, b, 0, 2 * D), dc = bfs_band(d, c, 0, 2 * D);
            int ab = da[b], ac = da[c], bc = db[c];
            int medians = 0;
            for (int x = 0; x < n; ++x) {
                if (da[x] < 0 || db[x] < 0 || dc[x] < 0) continue;
                if (da[x] + db[x] == ab && da[x] + dc[x] == ac && db[x] + dc[x] == bc) ++medians;
            }
            r.checked_triples++;
            if (medians != 1) {
                r.median_violations++;
                witness(r, "triple " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + " has " +
                               std::to_string(medians) + " medians");
            }
        }
    }

    // Intervals from full BFS agree with the configuration description.
    {
        auto h = prefix_hyperplanes(d);
        Configurations conf(d, h);
        auto pool = pick(d.K / 2);
        for (long long t = 0; t < work && !pool.empty(); ++t) {
            int u = pool[rng() % pool.size()], v = pool[rng() % pool.size()];
            auto iv = interval(d, u, v);
            if (!iv.exact) continue;
            auto cu = conf.of(u), cv = conf.of(v);
            std::vector<int> lo, hi;
            std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(lo));
            std::set_union(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(hi));
            std::vector<int> expect;
            for (int x = 0; x < n; ++x) {
                auto cx = conf.of(x);
                if (cx.size() < lo.size() || cx.size() > hi.size()) continue;
                if (std::includes(cx.begin(), cx.end(), lo.begin(), lo.end()) &&
                    std::includes(hi.begin(), hi.end(), cx.begin(), cx.end()))
                    expect.push_back(x);
            }
            if (expect != iv.vertices || conf.distance(u, v) != iv.distance) {
                r.interval_violations++;
                witness(r, "interval " + std::to_string(u) + "," + std::to_string(v) + " disagrees with configurations");
            }
        }
    }
    return r;
}

std::string domain_to_json(const DomainPrefix& d) {
    nlohmann::json j;
    j["K"] = d.K;
    j["root"] = d.root;
    j["labels"] = d.labels;
    auto& vs = j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < d.num_vertices(); ++v) {
        nlohmann::json o{{"id", v}, {"depth", d.depth[v]}, {"proj", d.proj[v]}, {"interior", d.interior(v)}};
        if (!d.traces.empty()) {
            std::vector<std::string> w;
            for (int a : d.traces[v].word) w.push_back(d.labels[a]);
            o["trace"] = w;
        }
        if (!d.hair.empty()) o["hair"] = d.hair[v] != 0;
        vs.push_back(std::move(o));
    }
    auto& as = j["arcs"] = nlohmann::json::array();
    for (const auto& a : d.arcs) as.push_back({{"src", a.src}, {"dst", a.dst}, {"label", d.labels[a.label]}});
    return j.dump(2);
}

DomainPrefix domain_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("invalid JSON", line, col);
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs")) throw SemanticError("expected a domain object", "<root>");
    try {
        DomainPrefix d;
        d.K = j.at("K").get<int>();
        d.root = j.value("root", 0);
        for (const auto& l : j.value("labels", nlohmann::json::array())) d.label_id(l.get<std::string>());
        const auto& vs = j.at("vertices");
        bool traces = false, hair = false;
        for (size_t i = 0; i < vs.size(); ++i) {
            const auto& v = vs[i];
            if (v.value("id", static_cast<int>(i)) != static_cast<int>(i))
                throw SemanticError("vertex ids must be 0..n-1 in order", std::to_string(i));
            d.add_vertex(v.at("depth").get<int>(), v.value("proj", -1));
            traces = traces || v.contains("trace");
            hair = hair || v.contains("hair");
        }
        if (traces) d.traces.resize(vs.size());
        if (hair) d.hair.resize(vs.size());
        for (size_t i = 0; i < vs.size(); ++i) {
            if (traces)
                for (const auto& l : vs[i].value("trace", nlohmann::json::array()))
                    d.traces[i].word.push_back(d.label_id(l.get<std::string>()));
            if (hair) d.hair[i] = vs[i].value("hair", false);
        }
        const int n = d.num_vertices();
        if (d.root < 0 || d.root >= n) throw SemanticError("root out of range", std::to_string(d.root));
        for (const auto& a : j.at("arcs")) {
            int s = a.at("src").get<int>(), t = a.at("dst").get<int>();
            if (s < 0 || s >= n || t < 0 || t >= n) throw SemanticError("arc endpoint out of range", std::to_string(s) + "->" + std::to_string(t));
            if (d.depth[t] != d.depth[s] + 1) throw SemanticError("arc must climb one level", std::to_string(s) + "->" + std::to_string(t));
            d.add_arc(s, t, d.label_id(a.at("label").get<std::string>()));
        }
        d.finalize();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw SemanticError(std::string("malformed domain: ") + e.what(), "<root>");
    }
}

std::string domain_to_dot(const DomainPrefix& d) {
    std::ostringstream os;
    os << "digraph domain {\n  rankdir=BT;\n";
    for (int k = 0; k <= d.max_depth(); ++k) {
        os << "  { rank=same;";
        for (int v = 0; v < d.num_vertices(); ++v)
            if (d.depth[v] == k) os << " v" << v << ";";
        os << " }\n";
    }
    for (int v = 0; v < d.num_vertices(); ++v)
        os << "  v" << v << " [label=\"" << v << "\"" << (d.interior(v) ? "" : ", style=dashed") << "];\n";
    for (const auto& a : d.arcs) os << "  v" << a.src << " -> v" << a.dst << " [label=\"" << d.labels[a.label] << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace netcube
