#include "netcube/events.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "netcube/errors.hpp"

namespace netcube {

void EventStructurePrefix::init(int n) {
    rel_.assign(static_cast<size_t>(n) * n, Relation::Unknown);
    mu_.assign(static_cast<size_t>(n) * n, -1);
    below_.assign(n, {});
}

void EventStructurePrefix::set(int e1, int e2, Relation r) {
    rel_[idx(e1, e2)] = r;
    Relation mirror = r == Relation::Below ? Relation::Above : r == Relation::Above ? Relation::Below : r;
    rel_[idx(e2, e1)] = mirror;
}

void EventStructurePrefix::set_minimal_conflict(int e1, int e2, std::optional<bool> v) {
    std::int8_t x = v ? static_cast<std::int8_t>(*v) : -1;
    mu_[idx(e1, e2)] = x;
    mu_[idx(e2, e1)] = x;
}

std::optional<bool> EventStructurePrefix::minimal_conflict(int e1, int e2) const {
    std::int8_t x = mu_[idx(e1, e2)];
    if (x < 0) return std::nullopt;
    return x == 1;
}

void EventStructurePrefix::add_cover(int lower, int upper) { below_[upper].push_back(lower); }

bool EventStructurePrefix::covers(int e1, int e2) const {
    const auto& b = below_[e2];
    return std::find(b.begin(), b.end(), e1) != b.end();
}

std::vector<std::pair<int, int>> EventStructurePrefix::hasse() const {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < size(); ++e)
        for (int p : below_[e]) out.emplace_back(p, e);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> EventStructurePrefix::minimal_conflicts() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (minimal_conflict(a, b) == std::optional<bool>(true)) out.emplace_back(a, b);
    return out;
}

EventStructurePrefix extract_events(const DomainPrefix& d, long long max_events) {
    auto h = prefix_hyperplanes(d);
    Configurations conf(d, h);
    const int n = h.count();
    if (n > max_events) throw BudgetExceeded(max_events);
    EventStructurePrefix es;
    es.K = d.K;
    es.labels = d.labels;
    es.events.resize(n);
    es.init(n);
    for (int e = 0; e < n; ++e) {
        const auto& g = d.arcs[h.gate_arc[e]];
        Event& ev = es.events[e];
        ev.id = e;
        ev.label = g.label;
        ev.prime_vertex = g.dst;
        ev.gate_source = g.src;
        ev.depth = d.depth[g.dst];
        if (!d.traces.empty()) ev.prime_trace = d.traces[g.dst];
        // Immediate predecessors are the maximal events of the gate source's configuration.
        for (int a : d.in(g.src)) es.add_cover(h.of_arc[a], e);
    }
    // Crossing pairs: hyperplanes dual to the two directions of a prefix square.
    std::set<std::pair<int, int>> cross;
    for (int s = 0; s < d.num_vertices(); ++s)
        for (const auto& q : squares_at(d, s)) {
            int a = h.of_arc[q.su], b = h.of_arc[q.sw];
            cross.emplace(std::min(a, b), std::max(a, b));
        }
    for (int a = 0; a < n; ++a) {
        es.set(a, a, Relation::Same);
        const int u = es.events[a].prime_vertex;
        for (int b = a + 1; b < n; ++b) {
            const int v = es.events[b].prime_vertex;
            Relation r = Relation::Unknown;
            if (conf.contains(v, a)) {
                r = Relation::Below;
            } else if (conf.contains(u, b)) {
                r = Relation::Above;
            } else if (cross.count({a, b})) {
                r = Relation::Concurrent;
            } else if (d.depth[u] + d.depth[v] <= d.K) {
                // A compatible pair has its join within depth(u)+depth(v), where the crossing square shows.
                r = Relation::Conflict;
            }
            es.set(a, b, r);
            if (r == Relation::Conflict) {
                // Minimal iff both events are enabled at the join of the gate sources.
                auto j = join_vertex(d, h, conf, es.events[a].gate_source, es.events[b].gate_source);
                bool mu = false;
                if (j && d.depth[*j] < d.K) {
                    bool ea = false, eb = false;
                    for (int arc : d.out(*j)) {
                        ea = ea || h.of_arc[arc] == a;
                        eb = eb || h.of_arc[arc] == b;
                    }
                    mu = ea && eb;
                }
                es.set_minimal_conflict(a, b, mu);
            } else if (r != Relation::Unknown) {
                es.set_minimal_conflict(a, b, false);
            }
        }
    }
    return es;
}

TraceAlphabet domain_alphabet(const DomainPrefix& d) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& q : all_squares(d)) {
        int a = d.arcs[q.su].label, b = d.arcs[q.sw].label;
        pairs.insert({std::min(a, b), std::max(a, b)});
    }
    return TraceAlphabet(d.labels, {pairs.begin(), pairs.end()});
}

EventCheck check_LES(const EventStructurePrefix& es, const TraceAlphabet& alpha) {
    std::vector<int> letter(es.labels.size());
    for (size_t i = 0; i < es.labels.size(); ++i) letter[i] = alpha.index(es.labels[i]);
    auto dep = [&](int e1, int e2) {
        int a = letter[es.events[e1].label], b = letter[es.events[e2].label];
        return !alpha.indep(a, b);
    };
    auto fail = [](const char* ax, int a, int b, const std::string& detail) {
        EventCheck c;
        c.ok = false;
        c.axiom = ax;
        c.e1 = a;
        c.e2 = b;
        c.detail = detail;
        return c;
    };
    for (int a = 0; a < es.size(); ++a) {
        for (int b = 0; b < es.size(); ++b) {
            if (a == b) continue;
            bool mu = es.minimal_conflict(a, b) == std::optional<bool>(true);
            if (mu && es.events[a].label == es.events[b].label)
                return fail("LES1", a, b, "events in minimal conflict share a label");
            if ((mu || es.covers(a, b)) && !dep(a, b))
                return fail("LES2", a, b, "immediate causality or minimal conflict between independent labels");
            if (es.exact(a, b) && dep(a, b) && es.concurrent(a, b))
                return fail("LES3", a, b, "concurrent events with dependent labels");
        }
    }
    return {};
}

EventCheck check_nice_labeling(const DomainPrefix& d) {
    EventCheck c;
    for (int v = 0; v < d.num_vertices() && c.ok; ++v) {
        std::set<int> seen;
        for (int a : d.out(v))
            if (!seen.insert(d.arcs[a].label).second) {
                c.ok = false;
                c.axiom = "determinism";
                c.detail = "vertex " + std::to_string(v) + " has two out-arcs labelled " + d.labels[d.arcs[a].label];
            }
    }
    for (int s = 0; s < d.num_vertices() && c.ok; ++s)
        for (const auto& q : squares_at(d, s))
            if (d.arcs[q.su].label != d.arcs[q.wx].label || d.arcs[q.sw].label != d.arcs[q.ux].label) {
                c.ok = false;
                c.axiom = "concurrency";
                c.detail = "square at " + std::to_string(s) + " has mismatched opposite labels";
                break;
            }
    return c;
}

EventCheck check_event_bijection(const DomainPrefix& d, const EventStructurePrefix& es) {
    EventCheck c;
    auto h = prefix_hyperplanes(d);
    std::vector<int> prime;
    for (int v = 0; v < d.num_vertices(); ++v)
        if (d.in(v).size() == 1) prime.push_back(v);
    std::vector<int> pv;
    for (const auto& e : es.events) pv.push_back(e.prime_vertex);
    std::sort(pv.begin(), pv.end());
    if (!h.unique_gates) {
        c.ok = false;
        c.axiom = "bijection";
        c.detail = "a hyperplane has two gate arcs";
    } else if (es.size() != h.count() || pv != prime) {
        c.ok = false;
        c.axiom = "bijection";
        c.detail = std::to_string(es.size()) + " events, " + std::to_string(h.count()) + " hyperplanes, " +
                   std::to_string(prime.size()) + " prime vertices";
    }
    return c;
}

DomainPrefix hair_domain(const DomainPrefix& d, const std::string& hair_label) {
    DomainPrefix out = d;
    int hl = out.label_id(hair_label);
    if (out.hair.empty()) out.hair.assign(d.num_vertices(), 0);
    const int n = d.num_vertices();
    for (int v = 0; v < n; ++v) {
        int x = out.add_vertex(d.depth[v] + 1, -1);
        out.hair.push_back(1);
        if (!out.traces.empty()) {
            Trace t = out.traces[v];
            t.word.push_back(hl);
            out.traces.push_back(t);
        }
        out.add_arc(v, x, hl, -1);
    }
    out.finalize();
    return out;
}

std::string out_ball_form(const DomainPrefix& d, int v, int r) {
    std::vector<int> order{v};
    std::unordered_map<int, int> name{{v, 0}};
    std::unordered_map<int, int> dist{{v, 0}};
    std::string s;
    for (size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        if (dist[x] >= r) continue;
        for (int a : d.out(x)) {
            int y = d.arcs[a].dst;
            auto [it, fresh] = name.emplace(y, static_cast<int>(order.size()));
            if (fresh) {
                order.push_back(y);
                dist[y] = dist[x] + 1;
            }
            s += std::to_string(name[x]) + ":" + d.labels[d.arcs[a].label] + ":" + std::to_string(it->second) + ";";
        }
    }
    return s;
}

IndexEstimate estimate_index(const DomainPrefix& d, int r, int max_depth) {
    IndexEstimate est;
    est.radius = r;
    if (max_depth < 0) max_depth = d.K - r;
    std::unordered_map<std::string, int> forms;
    for (int v = 0; v < d.num_vertices(); ++v) {
        if (d.depth[v] > max_depth) continue;
        est.vertices++;
        auto [it, fresh] = forms.emplace(out_ball_form(d, v, r), v);
        if (fresh) est.representatives.push_back(v);
    }
    est.types = static_cast<int>(forms.size());
    return est;
}

std::string events_to_json(const EventStructurePrefix& es) {
    using nlohmann::json;
    json j;
    j["schema_version"] = 1;
    j["K"] = es.K;
    auto& evs = j["events"] = json::array();
    for (const auto& e : es.events) {
        json o{{"id", e.id}, {"label", es.labels[e.label]}, {"prime_vertex", e.prime_vertex}, {"depth", e.depth}};
        if (e.prime_trace) {
            std::vector<std::string> w;
            for (int a : e.prime_trace->word) w.push_back(es.labels[a]);
            o["prime_trace"] = w;
        }
        evs.push_back(std::move(o));
    }
    j["hasse"] = es.hasse();
    j["minimal_conflicts"] = es.minimal_conflicts();
    long long unknown = 0, conc = 0, conf = 0;
    for (int a = 0; a < es.size(); ++a)
        for (int b = a + 1; b < es.size(); ++b) {
            auto r = es.rel(a, b);
            unknown += r == Relation::Unknown;
            conc += r == Relation::Concurrent;
            conf += r == Relation::Conflict;
        }
    j["pairs"] = {{"concurrent", conc}, {"conflict", conf}, {"inexact", unknown}};
    return j.dump(2);
}

}  // namespace netcube
