#include <algorithm>
#include <set>

#include "netcube/analyze.hpp"

namespace netcube {

namespace {

int common_out(const DomainPrefix& d, int u, int w) {
    for (int a : d.out(u)) {
        int x = d.arcs[a].dst;
        if (d.arc_between(w, x) >= 0) return x;
    }
    return -1;
}

std::vector<int> neighbours(const DomainPrefix& d, int v) {
    std::vector<int> n;
    for (int a : d.out(v)) n.push_back(d.arcs[a].dst);
    for (int a : d.in(v)) n.push_back(d.arcs[a].src);
    return n;
}

// Directed grid g[i][j] grown along the first index, then the second.
class GridSearch {
public:
    GridSearch(const DomainPrefix& d, const DomainIndex& ix, GridReport& rep, long long budget)
        : d_(d), ix_(ix), rep_(rep), budget_(budget) {}

    void run_from(int s) {
        auto out = d_.out(s);
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = 0; j < out.size(); ++j) {
                if (i == j) continue;
                int u = d_.arcs[out[i]].dst, w = d_.arcs[out[j]].dst;
                if (u > w) continue;  // transposes give the same grid
                int x = common_out(d_, u, w);
                if (x < 0 || d_.depth[x] > d_.K - 1) continue;
                g_ = {{s, w}, {u, x}};
                if (!accept_vertex(1, 1) || !flat_along(1, 1)) continue;
                record();
                grow(true);
            }
    }

    bool exhausted() const { return rep_.grids_checked >= budget_; }

private:
    int rows() const { return static_cast<int>(g_.size()) - 1; }
    int cols() const { return static_cast<int>(g_[0].size()) - 1; }

    // Isometry of the vertex at (i,j) against the placed part of the grid.
    bool accept_vertex(int i, int j) {
        int x = g_[i][j];
        if (d_.depth[x] > d_.K - 1) return false;
        for (int a = 0; a <= rows(); ++a)
            for (int b = 0; b < static_cast<int>(g_[a].size()); ++b) {
                if (a == i && b == j) continue;
                int y = g_[a][b];
                if (y < 0) continue;
                if (ix_.conf.distance(x, y) != std::abs(a - i) + std::abs(b - j)) return false;
            }
        return true;
    }

    // Common-neighbour clause for pairs at distance 2 involving row i or column j of the completed grid.
    bool flat_along(int i, int j) {
        for (int a = 0; a <= rows(); ++a)
            for (int b = 0; b <= cols(); ++b) {
                if (a != i && b != j) continue;
                int x = g_[a][b];
                auto nx = neighbours(d_, x);
                for (int c = 0; c <= rows(); ++c)
                    for (int e = 0; e <= cols(); ++e) {
                        if (std::abs(a - c) + std::abs(b - e) != 2) continue;
                        auto ny = neighbours(d_, g_[c][e]);
                        for (int z : nx)
                            if (std::find(ny.begin(), ny.end(), z) != ny.end() && !in_grid(z)) return false;
                    }
            }
        return true;
    }

    bool in_grid(int z) const {
        for (const auto& row : g_)
            for (int v : row)
                if (v == z) return true;
        return false;
    }

    void record() {
        rep_.grids_checked++;
        int p = rows(), q = cols();
        int lo = std::min(p, q), hi = std::max(p, q);
        dims_.insert({lo, hi});
        auto& b = rep_.best;
        int blo = std::min(b.rows, b.cols), bhi = std::max(b.rows, b.cols);
        if (lo > blo || (lo == blo && hi > bhi)) {
            b.source = g_[0][0];
            b.rows = p;
            b.cols = q;
            b.vertices = g_;
        }
        rep_.max_min_side = std::max(rep_.max_min_side, lo);
    }

    // Extending along the first index is only allowed before the first extension along the second.
    void grow(bool first_allowed) {
        if (exhausted()) {
            rep_.truncated = true;
            return;
        }
        if (first_allowed) {
            int corner = g_[rows()][0];
            for (int a : d_.out(corner)) {
                int y = d_.arcs[a].dst;
                if (in_grid(y)) continue;
                g_.push_back(std::vector<int>(cols() + 1, -1));
                bool ok = place(rows(), 0, y);
                for (int j = 1; ok && j <= cols(); ++j) ok = place(rows(), j, common_out(d_, g_[rows()][j - 1], g_[rows() - 1][j]));
                if (ok && !flat_along(rows(), -1)) {
                    ok = false;
                    non_flat_ = true;
                }
                if (ok) {
                    record();
                    grow(true);
                } else if (non_flat_) {
                    rep_.non_flat++;
                }
                non_flat_ = false;
                g_.pop_back();
            }
        }
        int corner = g_[0][cols()];
        for (int a : d_.out(corner)) {
            int y = d_.arcs[a].dst;
            if (in_grid(y)) continue;
            for (auto& row : g_) row.push_back(-1);
            bool ok = place(0, cols(), y);
            for (int i = 1; ok && i <= rows(); ++i) ok = place(i, cols(), common_out(d_, g_[i - 1][cols()], g_[i][cols() - 1]));
            if (ok && !flat_along(-1, cols())) {
                ok = false;
                non_flat_ = true;
            }
            if (ok) {
                record();
                grow(false);
            } else if (non_flat_) {
                rep_.non_flat++;
            }
            non_flat_ = false;
            for (auto& row : g_) row.pop_back();
        }
    }

    bool place(int i, int j, int v) {
        if (v < 0 || in_grid(v)) return false;
        g_[i][j] = v;
        return accept_vertex(i, j);
    }

public:
    std::set<std::pair<int, int>> dims_;

private:
    const DomainPrefix& d_;
    const DomainIndex& ix_;
    GridReport& rep_;
    long long budget_;
    std::vector<std::vector<int>> g_;
    bool non_flat_ = false;
};

bool has_three_cube_corner(const DomainPrefix& d) {
    for (int s = 0; s < d.num_vertices(); ++s) {
        auto sq = squares_at(d, s);
        if (sq.size() < 3) continue;
        std::set<std::pair<int, int>> pairs;
        std::set<int> ends;
        for (const auto& q : sq) {
            pairs.insert({q.u, q.w});
            ends.insert(q.u);
            ends.insert(q.w);
        }
        std::vector<int> e(ends.begin(), ends.end());
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b)
                for (size_t c = b + 1; c < e.size(); ++c)
                    if (pairs.count({e[a], e[b]}) && pairs.count({e[a], e[c]}) && pairs.count({e[b], e[c]})) return true;
    }
    return false;
}

}  // namespace

GridReport flat_grid_max(const DomainPrefix& d, const DomainIndex& ix, long long budget) {
    GridReport rep;
    rep.two_dimensional = !has_three_cube_corner(d);
    GridSearch search(d, ix, rep, budget);
    for (int s = 0; s < d.num_vertices() && !search.exhausted(); ++s)
        if (d.depth[s] + 2 <= d.K - 1) search.run_from(s);
    if (search.exhausted()) rep.truncated = true;
    for (auto [lo, hi] : search.dims_) {
        bool dominated = false;
        for (auto [lo2, hi2] : search.dims_)
            if ((lo2 >= lo && hi2 >= hi) && (lo2 != lo || hi2 != hi)) dominated = true;
        if (!dominated) rep.maximal_dims.emplace_back(lo, hi);
    }
    return rep;
}

GridReport flat_grid_max(const DomainPrefix& d) {
    DomainIndex ix(d);
    return flat_grid_max(d, ix);
}

bool is_isometric_grid(const DomainPrefix& d, const DomainIndex& ix, const GridWitness& g) {
    const auto& V = g.vertices;
    if (static_cast<int>(V.size()) != g.rows + 1) return false;
    for (const auto& row : V)
        if (static_cast<int>(row.size()) != g.cols + 1) return false;
    for (int i = 0; i <= g.rows; ++i)
        for (int j = 0; j <= g.cols; ++j) {
            if (V[i][j] < 0) return false;
            if (i < g.rows && d.arc_between(V[i][j], V[i + 1][j]) < 0 && d.arc_between(V[i + 1][j], V[i][j]) < 0)
                return false;
            if (j < g.cols && d.arc_between(V[i][j], V[i][j + 1]) < 0 && d.arc_between(V[i][j + 1], V[i][j]) < 0)
                return false;
            for (int a = 0; a <= g.rows; ++a)
                for (int b = 0; b <= g.cols; ++b)
                    if (ix.conf.distance(V[i][j], V[a][b]) != std::abs(a - i) + std::abs(b - j)) return false;
        }
    return true;
}

namespace {

void rays_from(const DomainPrefix& d, int v, int len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len + 1) {
        out.push_back(cur);
        return;
    }
    for (int a : d.out(cur.back())) {
        cur.push_back(d.arcs[a].dst);
        rays_from(d, v, len, cur, out);
        cur.pop_back();
    }
}

// Closes the quadrant spanned by two rays from the same source; empty on failure.
std::vector<std::vector<int>> close_quadrant(const DomainPrefix& d, const std::vector<int>& r1, const std::vector<int>& r2) {
    std::vector<std::vector<int>> q(r1.size(), std::vector<int>(r2.size(), -1));
    for (size_t i = 0; i < r1.size(); ++i) q[i][0] = r1[i];
    for (size_t j = 0; j < r2.size(); ++j) q[0][j] = r2[j];
    for (size_t i = 1; i < r1.size(); ++i)
        for (size_t j = 1; j < r2.size(); ++j) {
            q[i][j] = common_out(d, q[i - 1][j], q[i][j - 1]);
            if (q[i][j] < 0) return {};
        }
    return q;
}

}  // namespace

IsoGridResult isometric_grid_search(const DomainPrefix& d, const DomainIndex& ix, int n, const GridReport* flat,
                                    long long budget) {
    IsoGridResult r;
    r.n = n;
    GridReport local;
    if (!flat) {
        local = flat_grid_max(d, ix);
        flat = &local;
    }
    if (flat->max_min_side >= n) {
        r.found = true;
        r.witness.source = flat->best.source;
        r.witness.rows = r.witness.cols = n;
        for (int i = 0; i <= n; ++i)
            r.witness.vertices.emplace_back(flat->best.vertices[i].begin(), flat->best.vertices[i].begin() + n + 1);
        r.note = "directed grid";
        return r;
    }
    // The gate of the root in an isometric grid is its unique source, so one of the four quadrants at the gate
    // is a directed grid with both sides at least ceil(n/2).
    const int half = (n + 1) / 2;
    if (flat->two_dimensional && !flat->truncated && flat->max_min_side < half) {
        r.by_reduction = true;
        r.note = "largest directed grid has min side " + std::to_string(flat->max_min_side) + " < " +
                 std::to_string(half);
        return r;
    }
    long long work = 0;
    for (int v = 0; v < d.num_vertices(); ++v) {
        if (d.depth[v] + n > d.K) continue;
        std::vector<std::vector<std::vector<int>>> rays(n + 1);
        for (int len = 0; len <= n; ++len) {
            std::vector<int> cur{v};
            rays_from(d, v, len, cur, rays[len]);
        }
        for (int a = half; a <= n; ++a)
            for (int c = half; c <= n; ++c) {
                int b = n - a, e = n - c;
                for (const auto& E : rays[a])
                    for (const auto& N : rays[c]) {
                        if (++work > budget) {
                            r.exhausted = false;
                            r.note = "search budget exhausted";
                            return r;
                        }
                        auto ne = close_quadrant(d, E, N);
                        if (ne.empty()) continue;
                        for (const auto& W : rays[b]) {
                            auto nw = close_quadrant(d, W, N);
                            if (nw.empty()) continue;
                            for (const auto& S : rays[e]) {
                                auto se = close_quadrant(d, E, S);
                                auto sw = close_quadrant(d, W, S);
                                if (se.empty() || sw.empty()) continue;
                                GridWitness g;
                                g.source = v;
                                g.rows = n;
                                g.cols = n;
                                // Column x in [-b, a], row y in [-e, c].
                                g.vertices.assign(n + 1, std::vector<int>(n + 1, -1));
                                for (int x = -b; x <= a; ++x)
                                    for (int y = -e; y <= c; ++y) {
                                        int val;
                                        if (x >= 0 && y >= 0) val = ne[x][y];
                                        else if (x < 0 && y >= 0) val = nw[-x][y];
                                        else if (x >= 0) val = se[x][-y];
                                        else val = sw[-x][-y];
                                        g.vertices[x + b][y + e] = val;
                                    }
                                if (is_isometric_grid(d, ix, g)) {
                                    r.found = true;
                                    r.witness = std::move(g);
                                    r.note = "gate with four rays";
                                    return r;
                                }
                            }
                        }
                    }
            }
    }
    r.note = "no isometric grid within the prefix";
    return r;
}

IsoGridResult isometric_grid_search(const DomainPrefix& d, int n) {
    DomainIndex ix(d);
    return isometric_grid_search(d, ix, n);
}

BicliqueReport biclique_thinness(const DomainPrefix& d, const DomainIndex& ix, int n, long long budget) {
    BicliqueReport rep;
    const int nh = ix.h.count();
    rep.hyperplanes = nh;
    std::vector<std::vector<int>> adj(nh);
    for (int s = 0; s < d.num_vertices(); ++s)
        for (const auto& q : squares_at(d, s)) {
            int a = ix.h.of_arc[q.su], b = ix.h.of_arc[q.sw];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    for (auto& l : adj) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        rep.crossing_pairs += static_cast<long long>(l.size());
    }
    rep.crossing_pairs /= 2;
    long long work = 0;
    std::vector<int> count(nh, 0);
    for (int t = 1; t <= n; ++t) {
        // t-core: vertices of degree >= t after iterated deletion.
        std::vector<char> alive(nh, 1);
        std::vector<int> deg(nh);
        std::vector<int> stack;
        for (int v = 0; v < nh; ++v) {
            deg[v] = static_cast<int>(adj[v].size());
            if (deg[v] < t) {
                alive[v] = 0;
                stack.push_back(v);
            }
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (alive[w] && --deg[w] < t) {
                    alive[w] = 0;
                    stack.push_back(w);
                }
        }
        bool found = false;
        std::vector<int> A, B;
        for (int x = 0; x < nh && !found; ++x) {
            if (!alive[x]) continue;
            std::vector<int> nx;
            for (int y : adj[x])
                if (alive[y]) nx.push_back(y);
            if (static_cast<int>(nx.size()) < t) continue;
            if (t == 1) {
                A = {x};
                B = {nx[0]};
                found = true;
                break;
            }
            // Candidates: larger vertices sharing at least t alive neighbours with x.
            std::vector<int> touched;
            for (int y : nx)
                for (int z : adj[y])
                    if (z > x && alive[z]) {
                        if (count[z]++ == 0) touched.push_back(z);
                    }
            std::vector<int> cand;
            for (int z : touched) {
                if (count[z] >= t) cand.push_back(z);
                count[z] = 0;
            }
            std::sort(cand.begin(), cand.end());
            std::vector<int> chosen{x};
            // Depth-first choice of t-1 more vertices keeping the common neighbourhood >= t.
            auto dfs = [&](auto&& self, size_t from, const std::vector<int>& cn) -> bool {
                if (static_cast<int>(chosen.size()) == t) {
                    A = chosen;
                    B.assign(cn.begin(), cn.begin() + t);
                    return true;
                }
                for (size_t i = from; i < cand.size(); ++i) {
                    if (++work > budget) {
                        rep.truncated = true;
                        return false;
                    }
                    std::vector<int> next;
                    std::set_intersection(cn.begin(), cn.end(), adj[cand[i]].begin(), adj[cand[i]].end(),
                                          std::back_inserter(next));
                    if (static_cast<int>(next.size()) < t) continue;
                    chosen.push_back(cand[i]);
                    if (self(self, i + 1, next)) return true;
                    chosen.pop_back();
                    if (rep.truncated) return false;
                }
                return false;
            };
            found = dfs(dfs, 0, nx);
            if (rep.truncated) break;
        }
        if (!found) break;
        rep.max_side = t;
        rep.side_a = A;
        rep.side_b = B;
    }
    return rep;
}

BicliqueReport biclique_thinness(const DomainPrefix& d, int n) {
    DomainIndex ix(d);
    return biclique_thinness(d, ix, n);
}

}  // namespace netcube
