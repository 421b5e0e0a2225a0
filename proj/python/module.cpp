#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netcube/analyze.hpp"
#include "netcube/complex.hpp"
#include "netcube/errors.hpp"
#include "netcube/events.hpp"
#include "netcube/examples.hpp"
#include "netcube/net.hpp"
#include "netcube/trace.hpp"
#include "netcube/unfold.hpp"

namespace py = pybind11;
using namespace netcube;

PYBIND11_MODULE(_netcube, m) {
    m.doc() = "Nets, square complexes, domain prefixes and event structures";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<SemanticError>(m, "SemanticError", error);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
    py::register_exception<NotAdmissible>(m, "NotAdmissible", error);
    py::register_exception<UnknownLetter>(m, "UnknownLetter", error);
    py::register_exception<NotEnabled>(m, "NotEnabled", error);
    py::register_exception<NotCoEnabled>(m, "NotCoEnabled", error);
    py::register_exception<InsufficientDepth>(m, "InsufficientDepth", error);

    py::class_<TraceAlphabet>(m, "TraceAlphabet")
        .def(py::init([](std::vector<std::string> letters, const std::vector<std::pair<std::string, std::string>>& pairs) {
                 TraceAlphabet probe(letters, {});
                 std::vector<std::pair<int, int>> ids;
                 for (const auto& [a, b] : pairs) ids.emplace_back(probe.index(a), probe.index(b));
                 return TraceAlphabet(std::move(letters), ids);
             }),
             py::arg("letters"), py::arg("independent") = std::vector<std::pair<std::string, std::string>>{})
        .def_property_readonly("letters", &TraceAlphabet::letters)
        .def("independent", [](const TraceAlphabet& a, const std::string& x, const std::string& y) {
            return a.indep(a.index(x), a.index(y));
        })
        .def("normalize", [](const TraceAlphabet& a, const std::string& w) { return a.show(normalize(a.parse_word(w), a).word); })
        .def("equivalent", [](const TraceAlphabet& a, const std::string& u, const std::string& v) {
            return equivalent(a.parse_word(u), a.parse_word(v), a);
        })
        .def("is_prime", [](const TraceAlphabet& a, const std::string& w) { return is_prime(normalize(a.parse_word(w), a), a); })
        .def("is_prefix", [](const TraceAlphabet& a, const std::string& u, const std::string& v) {
            return is_prefix(normalize(a.parse_word(u), a), normalize(a.parse_word(v), a), a);
        })
        .def("join", [](const TraceAlphabet& a, const std::string& u, const std::string& v) -> std::optional<std::string> {
            auto j = join(normalize(a.parse_word(u), a), normalize(a.parse_word(v), a), a);
            if (!j) return std::nullopt;
            return a.show(j->word);
        })
        .def("prime_prefixes", [](const TraceAlphabet& a, const std::string& w) {
            std::vector<std::string> out;
            for (const auto& t : prime_prefixes(normalize(a.parse_word(w), a), a)) out.push_back(a.show(t.word));
            return out;
        });

    py::class_<NetSystem>(m, "Net")
        .def_readonly("places", &NetSystem::places)
        .def_readonly("transitions", &NetSystem::transitions)
        .def_property_readonly("initial", [](const NetSystem& n) { return n.names_of(n.initial); })
        .def("to_text", &net_to_text)
        .def("to_json", &net_to_json)
        .def("alphabet", &TraceAlphabet::from_net)
        .def("hair", &hair_net)
        .def("independence", [](const NetSystem& n) {
            std::vector<std::pair<std::string, std::string>> out;
            for (auto [a, b] : independence(n)) out.emplace_back(n.transitions[a], n.transitions[b]);
            return out;
        })
        .def("fire", [](const NetSystem& n, const std::vector<std::string>& marking, const std::string& t) {
            int a = n.transition_index(t);
            if (a < 0) throw SemanticError("unknown transition", t);
            return n.names_of(fire(n, n.marking_of(marking), a));
        })
        .def("build_xn", [](const NetSystem& n, long long budget) { return build_XN(n, budget).complex; },
             py::arg("budget") = 100000)
        .def("unfold", [](const NetSystem& n, int K, long long budget) { return unfold_net(n, K, budget); }, py::arg("K"),
             py::arg("budget") = 5000000);

    py::class_<SquareComplex>(m, "Complex")
        .def_property_readonly("num_vertices", [](const SquareComplex& c) { return c.vertices.size(); })
        .def_property_readonly("num_edges", [](const SquareComplex& c) { return c.edges.size(); })
        .def_property_readonly("num_squares", [](const SquareComplex& c) { return c.squares.size(); })
        .def_readonly("vertices", &SquareComplex::vertices)
        .def("to_text", &complex_to_text)
        .def("to_json", &complex_to_json)
        .def("to_dot", &complex_to_dot)
        .def("is_admissible", &is_admissible)
        .def("num_hyperplanes", [](const SquareComplex& c) { return hyperplanes(c).planes.size(); })
        .def("npc_violations", [](const SquareComplex& c) { return check_npc(c).violations; })
        .def("is_special", [](const SquareComplex& c) { return check_special(c).is_special; })
        .def("first_pathology", [](const SquareComplex& c) { return check_special(c).first_pathology(c); })
        .def("hair", &hair_complex, py::arg("color") = "h")
        .def("isomorphic", [](const SquareComplex& a, const SquareComplex& b, bool colors, bool orientation) {
            IsoOptions opt;
            opt.colors = colors;
            opt.orientation = orientation;
            return isomorphic(a, b, opt).has_value();
        }, py::arg("other"), py::arg("colors") = false, py::arg("orientation") = true)
        .def("unfold", [](const SquareComplex& c, const std::string& base, int K, long long budget) {
            int v = c.vertex_index(base);
            if (v < 0) throw SemanticError("unknown vertex", base);
            return unfold_complex(c, v, K, budget);
        }, py::arg("base"), py::arg("K"), py::arg("budget") = 5000000);

    py::class_<DomainPrefix>(m, "Domain")
        .def_readonly("K", &DomainPrefix::K)
        .def_readonly("labels", &DomainPrefix::labels)
        .def_property_readonly("num_vertices", &DomainPrefix::num_vertices)
        .def_property_readonly("num_arcs", [](const DomainPrefix& d) { return d.arcs.size(); })
        .def_property_readonly("num_squares", [](const DomainPrefix& d) { return all_squares(d).size(); })
        .def("levels", [](const DomainPrefix& d) {
            std::vector<int> out(d.max_depth() + 1, 0);
            for (int v = 0; v < d.num_vertices(); ++v) out[d.depth[v]]++;
            return out;
        })
        .def("to_json", &domain_to_json)
        .def("to_dot", &domain_to_dot)
        .def("truncate", &netcube::truncate, py::arg("K"))
        .def("hair", &hair_domain, py::arg("label") = "h")
        .def("num_hyperplanes", [](const DomainPrefix& d) { return prefix_hyperplanes(d).count(); })
        .def("is_median", [](const DomainPrefix& d) { return validate_median(d).ok; })
        .def("isomorphic", [](const DomainPrefix& a, const DomainPrefix& b) { return check_domain_isomorphism(a, b).ok; })
        .def("events_json", [](const DomainPrefix& d) { return events_to_json(extract_events(d)); })
        .def("analyze_json", [](const DomainPrefix& d, int kmin, int kmax, int grid_n, int biclique_n, bool end_types,
                                bool grids, bool bicliques) {
            AnalyzeOptions opt;
            opt.kmin = kmin;
            opt.kmax = kmax;
            opt.grid_n = grid_n;
            opt.biclique_n = biclique_n;
            opt.end_types = end_types;
            opt.grids = grids;
            opt.bicliques = bicliques;
            return analyze_to_json(d, opt);
        }, py::arg("kmin") = 0, py::arg("kmax") = -1, py::arg("grid_n") = 5, py::arg("biclique_n") = 6,
           py::arg("end_types") = true, py::arg("grids") = true, py::arg("bicliques") = true)
        .def("index_estimate", [](const DomainPrefix& d, int r) { return estimate_index(d, r).types; }, py::arg("radius"));

    m.def("parse_net", &parse_net, py::arg("text"));
    m.def("parse_complex", &parse_complex, py::arg("text"));
    m.def("domain_from_json", &domain_from_json, py::arg("text"));
    m.def("bdr", &bdr_generate, py::arg("K"));
    m.def("example_names", &example_names);
    m.def("example_text", &example_text, py::arg("name"));
    m.def("nstar", &nstar_net);
    m.def("z", &z_complex);
    m.def("zprime", &zprime_complex);
}
