#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lexer.hpp"
#include "netcube/complex.hpp"
#include "netcube/errors.hpp"

namespace netcube {

using detail::TokenCursor;
using json = nlohmann::json;

namespace {

Dart parse_dart_token(const SquareComplex& c, const std::string& text, int line, int col) {
    if (text.empty()) throw ParseError("empty dart", line, col);
    bool forward = true;
    std::string name = text;
    if (text[0] == '+' || text[0] == '-') {
        forward = text[0] == '+';
        name = text.substr(1);
    }
    int e = c.edge_index(name);
    if (e < 0) throw SemanticError("square names unknown edge", name);
    return {e, forward};
}

std::string dart_text(const SquareComplex& c, const Dart& d) {
    return (d.forward ? "+" : "-") + c.edges[d.edge].name;
}

SquareComplex parse_complex_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("invalid JSON", line, col);
    }
    SquareComplex c;
    std::set<std::string> seen;
    for (const auto& v : j.value("vertices", json::array())) {
        auto name = v.get<std::string>();
        if (!seen.insert(name).second) throw SemanticError("duplicate vertex", name);
        c.add_vertex(name);
    }
    std::set<std::string> seen_e;
    for (const auto& e : j.value("edges", json::array())) {
        auto name = e.at("id").get<std::string>();
        if (!seen_e.insert(name).second) throw SemanticError("duplicate edge", name);
        int s = c.vertex_index(e.at("src").get<std::string>());
        int d = c.vertex_index(e.at("dst").get<std::string>());
        if (s < 0) throw SemanticError("edge names unknown vertex", e.at("src").get<std::string>());
        if (d < 0) throw SemanticError("edge names unknown vertex", e.at("dst").get<std::string>());
        c.add_edge(name, s, d, e.value("color", std::string()));
    }
    for (const auto& sq : j.value("squares", json::array())) {
        if (!sq.is_array() || sq.size() != 4) throw SemanticError("square must list four darts", sq.dump());
        std::array<Dart, 4> darts;
        for (int i = 0; i < 4; ++i) darts[i] = parse_dart_token(c, sq[i].get<std::string>(), 0, 0);
        c.add_square(darts);
    }
    return c;
}

}  // namespace

SquareComplex parse_complex(const std::string& text) {
    if (detail::looks_like_json(text)) return parse_complex_json(text);
    SquareComplex c;
    std::set<std::string> vseen, eseen;
    auto lines = detail::split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        TokenCursor cur(detail::tokenize_line(lines[i], lineno, "+-"));
        if (cur.at_end()) continue;
        std::string kw = cur.ident("keyword");
        if (kw == "vertex") {
            do {
                std::string v = cur.ident("vertex identifier");
                if (!vseen.insert(v).second) throw SemanticError("duplicate vertex", v);
                c.add_vertex(v);
            } while (!cur.at_end());
        } else if (kw == "edge") {
            std::string name = cur.ident("edge identifier");
            if (!eseen.insert(name).second) throw SemanticError("duplicate edge", name);
            std::string s = cur.ident("source vertex");
            std::string d = cur.ident("target vertex");
            std::string color;
            if (!cur.at_end()) {
                cur.keyword("color");
                color = cur.ident("color");
            }
            cur.finish();
            int si = c.vertex_index(s), di = c.vertex_index(d);
            if (si < 0) throw SemanticError("edge " + name + " names unknown vertex", s);
            if (di < 0) throw SemanticError("edge " + name + " names unknown vertex", d);
            c.add_edge(name, si, di, color);
        } else if (kw == "square") {
            std::array<Dart, 4> darts;
            for (int k = 0; k < 4; ++k) {
                const auto& t = cur.peek();
                int col = t.column;
                std::string sign = "+";
                if (cur.accept("+")) sign = "+";
                else if (cur.accept("-")) sign = "-";
                std::string name = cur.ident("edge identifier");
                darts[k] = parse_dart_token(c, sign + name, lineno, col);
            }
            cur.finish();
            c.add_square(darts);
        } else {
            throw ParseError("unknown keyword '" + kw + "'", lineno, 1);
        }
    }
    return c;
}

std::string complex_to_text(const SquareComplex& c) {
    std::ostringstream os;
    for (const auto& v : c.vertices) os << "vertex " << v << "\n";
    for (const auto& e : c.edges) {
        os << "edge " << e.name << " " << c.vertices[e.src] << " " << c.vertices[e.dst];
        if (!e.color.empty()) os << " color " << e.color;
        os << "\n";
    }
    for (const auto& sq : c.squares) {
        os << "square";
        for (const auto& d : sq.darts) os << " " << dart_text(c, d);
        os << "\n";
    }
    return os.str();
}

std::string complex_to_json(const SquareComplex& c) {
    json j;
    j["vertices"] = c.vertices;
    j["edges"] = json::array();
    for (const auto& e : c.edges) {
        json je = {{"id", e.name}, {"src", c.vertices[e.src]}, {"dst", c.vertices[e.dst]}};
        if (!e.color.empty()) je["color"] = e.color;
        j["edges"].push_back(je);
    }
    j["squares"] = json::array();
    for (const auto& sq : c.squares) {
        json js = json::array();
        for (const auto& d : sq.darts) js.push_back(dart_text(c, d));
        j["squares"].push_back(js);
    }
    return j.dump(2);
}

std::string complex_to_dot(const SquareComplex& c) {
    std::ostringstream os;
    os << "digraph complex {\n";
    for (const auto& v : c.vertices) os << "  \"" << v << "\";\n";
    for (const auto& e : c.edges) {
        os << "  \"" << c.vertices[e.src] << "\" -> \"" << c.vertices[e.dst] << "\" [label=\""
           << (e.color.empty() ? e.name : e.color) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace netcube
