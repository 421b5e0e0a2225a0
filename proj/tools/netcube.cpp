// netcube: nets to special square complexes, domain prefixes, events and diagnostics.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 bad input or usage, 3 budget or internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance/suite.hpp"
#include "netcube/analyze.hpp"
#include "netcube/complex.hpp"
#include "netcube/errors.hpp"
#include "netcube/events.hpp"
#include "netcube/examples.hpp"
#include "netcube/net.hpp"
#include "netcube/unfold.hpp"

using namespace netcube;
using nlohmann::json;

namespace {

enum class Kind { Net, Complex, Domain };

struct Input {
    Kind kind = Kind::Net;
    std::string name;
    NetSystem net;
    SquareComplex complex;
    DomainPrefix domain;
};

struct Common {
    std::string input;
    int depth = 8;
    long long budget = 0;  // 0: defaults, possibly overridden by NETCUBE_BUDGET
    std::string format = "text";
    bool cross_check = false;
    bool verify = false;
    std::uint64_t seed = 1;
    std::string output;
    std::string base;
};

class UsageError : public Error {
public:
    using Error::Error;
};

long long env_budget() {
    const char* s = std::getenv("NETCUBE_BUDGET");
    if (!s || !*s) return 0;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (*end || v <= 0) throw UsageError(std::string("NETCUBE_BUDGET must be a positive integer, got '") + s + "'");
    return v;
}

long long budget_or(const Common& c, long long fallback) {
    if (c.budget > 0) return c.budget;
    long long e = env_budget();
    return e > 0 ? e : fallback;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Kind detect(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error&) {
            return Kind::Net;  // let the net parser report the position
        }
        if (j.contains("arcs")) return Kind::Domain;
        if (j.contains("edges") || j.contains("squares")) return Kind::Complex;
        return Kind::Net;
    }
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line.substr(0, line.find('#')));
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertex" || kw == "edge" || kw == "square") return Kind::Complex;
        return Kind::Net;
    }
    return Kind::Net;
}

Input load(const Common& c) {
    Input in;
    in.name = c.input;
    namespace fs = std::filesystem;
    if (!fs::exists(c.input) && c.input == "bdr") {
        in.kind = Kind::Domain;
        in.domain = bdr_generate(std::max(1, c.depth));
        return in;
    }
    std::string text = !fs::exists(c.input) && has_example(c.input) ? example_text(c.input) : read_file(c.input);
    in.kind = detect(text);
    switch (in.kind) {
        case Kind::Net: in.net = parse_net(text); break;
        case Kind::Complex: in.complex = parse_complex(text); break;
        case Kind::Domain: in.domain = domain_from_json(text); break;
    }
    return in;
}

int base_vertex(const SquareComplex& cx, const std::string& base) {
    if (base.empty()) return 0;
    int v = cx.vertex_index(base);
    if (v < 0) throw UsageError("unknown base vertex '" + base + "'");
    return v;
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + c.output + "'");
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

const char* yes(bool b) { return b ? "yes" : "no"; }

// Unfolds whatever the input is into a domain prefix of depth K.
DomainPrefix domain_of(const Input& in, const Common& c, std::optional<TraceAlphabet>* alpha = nullptr) {
    const long long budget = budget_or(c, 5000000);
    switch (in.kind) {
        case Kind::Net:
            if (alpha) *alpha = TraceAlphabet::from_net(in.net);
            return unfold_net(in.net, c.depth, budget);
        case Kind::Complex:
            return unfold_complex(in.complex, base_vertex(in.complex, c.base), c.depth, budget);
        case Kind::Domain:
            return in.domain.K > c.depth ? truncate(in.domain, c.depth) : in.domain;
    }
    return {};
}

int cmd_complex(const Common& c) {
    Input in = load(c);
    if (in.kind == Kind::Domain) throw UsageError("complex expects a net or a complex");
    SquareComplex cx;
    std::optional<TraceAlphabet> alpha;
    std::vector<int> degenerate;
    if (in.kind == Kind::Net) {
        cx = build_XN(in.net, budget_or(c, 100000)).complex;
        alpha = TraceAlphabet::from_net(in.net);
        degenerate = degenerate_transitions(in.net);
    } else {
        cx = in.complex;
    }
    const bool admissible = is_admissible(cx);
    auto npc = check_npc(cx);
    auto hs = hyperplanes(cx);
    int one_sided = 0;
    for (const auto& h : hs.planes) one_sided += !h.two_sided;
    std::optional<SpecialnessReport> sp;
    if (admissible) sp = check_special(cx);
    std::optional<LabelingReport> tl;
    if (alpha && admissible) tl = check_trace_labeling(cx, *alpha);
    const bool special = sp && sp->is_special;
    const bool ok = admissible && npc.ok && special && (!tl || tl->ok);

    if (c.format == "dot") {
        emit(c, complex_to_dot(cx));
        return ok ? 0 : 1;
    }
    if (c.format == "json") {
        json j{{"schema_version", 1},
               {"vertices", cx.vertices.size()},
               {"edges", cx.edges.size()},
               {"squares", cx.squares.size()},
               {"admissible", admissible},
               {"npc", npc.ok},
               {"npc_violations", npc.violations},
               {"hyperplanes", hs.planes.size()},
               {"one_sided_hyperplanes", one_sided},
               {"special", special},
               {"pathology", sp ? sp->first_pathology(cx) : "orientation not admissible"},
               {"complex", json::parse(complex_to_json(cx))}};
        if (tl) j["trace_labeling"] = {{"ok", tl->ok}, {"axiom", tl->axiom}, {"witness", tl->witness}};
        if (in.kind == Kind::Net) {
            std::vector<std::string> names;
            for (int a : degenerate) names.push_back(in.net.transitions[a]);
            j["degenerate_transitions"] = names;
        }
        emit(c, j.dump(2));
        return ok ? 0 : 1;
    }
    std::ostringstream os;
    os << cx.vertices.size() << " vertices, " << cx.edges.size() << " edges, " << cx.squares.size()
       << " squares; special: " << yes(special) << "\n";
    os << "admissible orientation: " << yes(admissible) << "\n";
    os << "NPC: " << yes(npc.ok) << "\n";
    if (!npc.ok && !npc.violations.empty()) os << "  " << npc.violations.front() << "\n";
    os << "hyperplanes: " << hs.planes.size() << " (" << one_sided << " one-sided)\n";
    if (sp && !sp->is_special) os << "pathology: " << sp->first_pathology(cx) << "\n";
    if (tl) os << "trace labeling: " << yes(tl->ok) << (tl->ok ? "" : " (" + tl->axiom + ": " + tl->witness + ")") << "\n";
    if (in.kind == Kind::Net) {
        os << "degenerate transitions:";
        if (degenerate.empty()) os << " none";
        for (int a : degenerate) os << " " << in.net.transitions[a];
        os << "\n1-safety is enforced by the firing rule (contact condition)\n";
    }
    std::cout << os.str();
    if (!c.output.empty()) emit(c, complex_to_text(cx));
    return ok ? 0 : 1;
}

int cmd_unfold(const Common& c) {
    Input in = load(c);
    std::optional<TraceAlphabet> alpha;
    DomainPrefix d = domain_of(in, c, &alpha);
    auto med = validate_median(d, 200, c.seed);

    std::optional<DomainIsoResult> cross;
    if (c.cross_check) {
        if (in.kind != Kind::Net) throw UsageError("--cross-check needs a net input");
        auto xn = build_XN(in.net, budget_or(c, 100000));
        cross = check_domain_isomorphism(d, unfold_complex(xn.complex, xn.graph.root, c.depth, budget_or(c, 5000000)));
    }
    const bool ok = med.ok && (!cross || cross->ok);

    std::vector<long long> levels(d.max_depth() + 1, 0);
    for (int v = 0; v < d.num_vertices(); ++v) levels[d.depth[v]]++;

    if (c.format == "dot") {
        emit(c, domain_to_dot(d));
        return ok ? 0 : 1;
    }
    if (c.format == "json") {
        json j{{"schema_version", 1},
               {"K", d.K},
               {"vertices", d.num_vertices()},
               {"arcs", d.arcs.size()},
               {"levels", levels},
               {"median", {{"ok", med.ok},
                           {"quadrangle_violations", med.quadrangle_violations},
                           {"cube_violations", med.cube_violations},
                           {"median_violations", med.median_violations},
                           {"interval_violations", med.interval_violations},
                           {"geodesic_violations", med.geodesic_violations},
                           {"layering_violations", med.layering_violations},
                           {"witnesses", med.witnesses}}},
               {"domain", json::parse(domain_to_json(d))}};
        if (cross) j["cross_check"] = {{"isomorphic", cross->ok}, {"mismatch", cross->mismatch}};
        emit(c, j.dump(2));
        return ok ? 0 : 1;
    }
    std::ostringstream os;
    os << "K=" << d.K << ": " << d.num_vertices() << " vertices, " << d.arcs.size() << " arcs\n";
    os << "depth  vertices\n";
    for (size_t k = 0; k < levels.size(); ++k) os << std::setw(5) << k << "  " << levels[k] << "\n";
    os << "median: " << yes(med.ok) << "\n";
    for (const auto& w : med.witnesses) os << "  " << w << "\n";
    if (cross) os << "isomorphic: " << yes(cross->ok) << (cross->ok ? "" : " (" + cross->mismatch + ")") << "\n";
    emit(c, os.str());
    return ok ? 0 : 1;
}

int cmd_events(const Common& c) {
    Input in = load(c);
    std::optional<TraceAlphabet> alpha;
    DomainPrefix d = domain_of(in, c, &alpha);
    if (!alpha) alpha = domain_alphabet(d);
    auto es = extract_events(d, budget_or(c, 20000));
    auto les = check_LES(es, *alpha);
    auto nice = check_nice_labeling(d);
    auto bij = check_event_bijection(d, es);
    const bool ok = les.ok && nice.ok && bij.ok;

    json j = json::parse(events_to_json(es));
    auto verdict = [](const EventCheck& e) {
        return json{{"ok", e.ok}, {"axiom", e.axiom}, {"e1", e.e1}, {"e2", e.e2}, {"detail", e.detail}};
    };
    j["checks"] = {{"LES", verdict(les)}, {"nice_labeling", verdict(nice)}, {"bijection", verdict(bij)}};
    if (c.format == "json") {
        emit(c, j.dump(2));
        return ok ? 0 : 1;
    }
    if (c.format == "dot") {
        std::ostringstream os;
        os << "digraph events {\n  rankdir=BT;\n";
        for (const auto& e : es.events) os << "  e" << e.id << " [label=\"" << es.labels[e.label] << "\"];\n";
        for (const auto& [a, b] : es.hasse()) os << "  e" << a << " -> e" << b << ";\n";
        for (const auto& [a, b] : es.minimal_conflicts())
            os << "  e" << a << " -> e" << b << " [dir=none, style=dashed, color=red];\n";
        os << "}\n";
        emit(c, os.str());
        return ok ? 0 : 1;
    }
    std::ostringstream os;
    os << j["events"].size() << " events, " << j["hasse"].size() << " covering pairs, " << j["minimal_conflicts"].size()
       << " minimal-conflict pairs\n";
    os << "pairs: " << j["pairs"]["concurrent"] << " concurrent, " << j["pairs"]["conflict"] << " in conflict, "
       << j["pairs"]["inexact"] << " undecided in the prefix\n";
    auto line = [&](const char* name, const EventCheck& e) {
        os << name << ": " << yes(e.ok);
        if (!e.ok) os << " (" << e.axiom << (e.detail.empty() ? "" : ": " + e.detail) << ")";
        os << "\n";
    };
    line("LES", les);
    line("nice labeling", nice);
    line("bijection", bij);
    emit(c, os.str());
    return ok ? 0 : 1;
}

struct AnalyzeFlags {
    int kmin = 0, kmax = -1, end_kmax = -1, grid_n = 5, biclique_n = 6;
    bool no_end_types = false, no_grids = false, no_bicliques = false;
};

int cmd_analyze(const Common& c, const AnalyzeFlags& f) {
    Input in = load(c);
    DomainPrefix d = domain_of(in, c);
    AnalyzeOptions opt;
    opt.kmin = f.kmin;
    opt.kmax = f.kmax;
    opt.end_kmax = f.end_kmax;
    opt.grid_n = f.grid_n;
    opt.biclique_n = f.biclique_n;
    opt.end_types = !f.no_end_types;
    opt.grids = !f.no_grids;
    opt.bicliques = !f.no_bicliques;
    json j = json::parse(analyze_to_json(d, opt));

    // Growth and uniqueness verdicts over the non-degenerate levels.
    std::vector<int> diam;
    bool one_cluster = true, clean = true;
    int first = -1, last = -1;
    for (const auto& l : j["levels"]) {
        if (l["contaminated"].get<bool>()) continue;
        if (first < 0) first = l["k"];
        last = l["k"];
        diam.push_back(l["max_diameter"]);
        one_cluster = one_cluster && l["clusters"] == 1;
    }
    bool increasing = diam.size() >= 2;
    for (size_t i = 1; i < diam.size(); ++i) increasing = increasing && diam[i] > diam[i - 1];
    j["summary"] = {{"levels", {first, last}}, {"diameters_increasing", increasing}, {"one_cluster_per_level", one_cluster}};
    if (j.contains("grids")) clean = !j["grids"]["truncated"].get<bool>() && j["grids"]["isometric"]["exhausted"].get<bool>();
    if (j.contains("bicliques")) clean = clean && !j["bicliques"]["truncated"].get<bool>();
    j["summary"]["complete"] = clean;

    if (c.format == "json") {
        emit(c, j.dump(2));
        return clean ? 0 : 1;
    }
    std::ostringstream os;
    os << "K=" << d.K << ", " << d.num_vertices() << " vertices\n";
    os << "    k  clusters  max_diameter\n";
    for (const auto& l : j["levels"])
        os << std::setw(5) << l["k"].get<int>() << std::setw(10) << l["clusters"].get<int>() << std::setw(14)
           << l["max_diameter"].get<int>() << (l["contaminated"].get<bool>() ? "  (cut by the prefix)" : "") << "\n";
    if (first >= 0) {
        os << "cluster diameters increasing on " << first << ".." << last << ": " << yes(increasing) << "\n";
        os << "one cluster per level (= sphere) on " << first << ".." << last << ": " << yes(one_cluster) << "\n";
    }
    if (j.contains("end_types")) {
        os << "end types per level (cumulative):";
        for (const auto& e : j["end_types"]) os << " " << e["k"] << ":" << e["types"] << "(" << e["cumulative_types"] << ")";
        os << "\n";
    }
    if (j.contains("grids")) {
        const auto& g = j["grids"];
        os << "flat grids: min side <= " << g["max_min_side"] << "; maximal";
        for (const auto& dims : g["maximal_dims"]) os << " " << dims[0] << "x" << dims[1];
        os << (g["truncated"].get<bool>() ? " (search truncated)" : "") << "\n";
        const auto& iso = g["isometric"];
        os << "isometric " << iso["n"] << "x" << iso["n"] << " grid: " << (iso["found"].get<bool>() ? "found" : "not found")
           << " (" << iso["note"].get<std::string>() << ")\n";
    }
    if (j.contains("bicliques")) {
        const auto& b = j["bicliques"];
        os << "largest crossing biclique: K_{" << b["max_side"] << "," << b["max_side"] << "} among " << b["hyperplanes"]
           << " hyperplanes" << (b["truncated"].get<bool>() ? " (search truncated)" : "") << "\n";
    }
    emit(c, os.str());
    return clean ? 0 : 1;
}

int cmd_hair(const Common& c) {
    Input in = load(c);
    bool ok = true;
    std::ostringstream report;
    std::string out;
    switch (in.kind) {
        case Kind::Net: {
            NetSystem h = hair_net(in.net);
            out = c.format == "json" ? net_to_json(h) : net_to_text(h);
            if (c.verify) {
                auto xn = build_XN(in.net, budget_or(c, 100000));
                auto hx = build_XN(h, budget_or(c, 100000));
                IsoOptions opt;
                opt.colors = true;
                opt.basepoints = std::make_pair(hx.graph.root, xn.graph.root);
                const std::string hl = h.transitions.back();
                bool cx_ok = isomorphic(hx.complex, hair_complex(xn.complex, hl), opt).has_value();
                auto dom = check_domain_isomorphism(truncate(hair_domain(unfold_net(in.net, c.depth), hl), c.depth),
                                                    unfold_net(h, c.depth, budget_or(c, 5000000)));
                report << "complex of haired net ~ haired complex: " << yes(cx_ok) << "\n";
                report << "haired domain ~ domain of haired net (K=" << c.depth << "): " << yes(dom.ok)
                       << (dom.ok ? "" : " (" + dom.mismatch + ")") << "\n";
                ok = cx_ok && dom.ok;
            }
            break;
        }
        case Kind::Complex: {
            SquareComplex h = hair_complex(in.complex);
            out = c.format == "json" ? complex_to_json(h) : c.format == "dot" ? complex_to_dot(h) : complex_to_text(h);
            if (c.verify) {
                const size_t n = in.complex.vertices.size();
                bool shape = h.vertices.size() == 2 * n && h.edges.size() == in.complex.edges.size() + n &&
                             h.squares.size() == in.complex.squares.size();
                for (size_t v = n; v < h.vertices.size() && shape; ++v) shape = h.half_edges_at(static_cast<int>(v)).size() == 1;
                bool npc = !check_npc(in.complex).ok || check_npc(h).ok;
                report << "one pendant edge per vertex: " << yes(shape) << "\n";
                report << "NPC preserved: " << yes(npc) << "\n";
                ok = shape && npc;
            }
            break;
        }
        case Kind::Domain: {
            DomainPrefix h = hair_domain(in.domain);
            out = c.format == "dot" ? domain_to_dot(h) : domain_to_json(h);
            if (c.verify) {
                bool shape = h.num_vertices() == 2 * in.domain.num_vertices();
                int hl = h.find_label("h");
                for (int v = 0; v < in.domain.num_vertices() && shape; ++v) shape = h.child(v, hl) >= 0 && h.hair[h.child(v, hl)];
                report << "one hair per vertex: " << yes(shape) << "\n";
                ok = shape;
            }
            break;
        }
    }
    emit(c, out);
    std::cerr << report.str();
    return ok ? 0 : 1;
}

int cmd_examples(const std::string& name, const Common& c) {
    if (name.empty()) {
        for (const auto& n : example_names()) std::cout << n << "\n";
        std::cout << "bdr\n";
        return 0;
    }
    if (name == "bdr") {
        DomainPrefix d = bdr_generate(std::max(1, c.depth));
        emit(c, c.format == "dot" ? domain_to_dot(d) : domain_to_json(d));
        return 0;
    }
    if (!has_example(name)) throw UsageError("unknown example '" + name + "'");
    std::string text = example_text(name);
    if (c.format == "json") text = name == "nstar" ? net_to_json(parse_net(text)) : complex_to_json(parse_complex(text));
    else if (c.format == "dot") {
        if (name == "nstar") throw UsageError("no dot output for nets");
        text = complex_to_dot(parse_complex(text));
    }
    emit(c, text);
    return 0;
}

int cmd_selftest(const acceptance::Options& opt) {
    auto results = acceptance::run(opt, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += !r.pass;
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"netcube: 1-safe nets, special square complexes and their event-structure domains"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "netcube 1.0");

    Common c;
    AnalyzeFlags af;
    std::string example;
    acceptance::Options suite;

    auto common = [&](CLI::App* sub, bool input) {
        if (input) sub->add_option("input", c.input, "net or complex file, domain JSON, or a built-in example name")->required();
        sub->add_option("--depth,-K", c.depth, "depth bound K")->check(CLI::NonNegativeNumber);
        sub->add_option("--budget", c.budget, "vertex budget (overrides NETCUBE_BUDGET)")->check(CLI::PositiveNumber);
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--seed", c.seed, "seed for sampled checks");
        sub->add_option("--output,-o", c.output, "write the main output to a file");
    };
    auto* complex = app.add_subcommand("complex", "build X_N from a net (or load a complex) and check it");
    common(complex, true);
    auto* unfold = app.add_subcommand("unfold", "unfold a depth-K prefix and validate it");
    common(unfold, true);
    unfold->add_flag("--cross-check", c.cross_check, "compare the net and complex unfoldings");
    unfold->add_option("--base", c.base, "base vertex of a complex");
    auto* events = app.add_subcommand("events", "extract the event structure of a prefix");
    common(events, true);
    events->add_option("--base", c.base, "base vertex of a complex");
    auto* analyze = app.add_subcommand("analyze", "clusters, end types, grids and bicliques");
    common(analyze, true);
    analyze->add_option("--base", c.base, "base vertex of a complex");
    analyze->add_option("--kmin", af.kmin, "first level");
    analyze->add_option("--kmax", af.kmax, "last level (default K-1)");
    analyze->add_option("--end-kmax", af.end_kmax, "last level of the end-type census");
    analyze->add_option("--grid-n", af.grid_n, "size of the isometric grid to search")->check(CLI::Range(2, 1000));
    analyze->add_option("--biclique-n", af.biclique_n, "largest biclique side to search")->check(CLI::Range(1, 1000));
    analyze->add_flag("--no-end-types", af.no_end_types);
    analyze->add_flag("--no-grids", af.no_grids);
    analyze->add_flag("--no-bicliques", af.no_bicliques);
    auto* hair = app.add_subcommand("hair", "hair a net, complex or domain");
    common(hair, true);
    hair->add_flag("--verify", c.verify, "check that hairing commutes with building and unfolding");
    auto* examples = app.add_subcommand("examples", "list or print the shipped examples");
    common(examples, false);
    examples->add_option("name", example, "example name");
    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--seed", suite.seed, "seed for the random nets and alphabets");
    selftest->add_option("--only", suite.only, "criterion numbers to run")->delimiter(',')->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*complex) return cmd_complex(c);
        if (*unfold) return cmd_unfold(c);
        if (*events) return cmd_events(c);
        if (*analyze) return cmd_analyze(c, af);
        if (*hair) return cmd_hair(c);
        if (*examples) return cmd_examples(example, c);
        if (*selftest) return cmd_selftest(suite);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownLetter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --budget or NETCUBE_BUDGET)\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
