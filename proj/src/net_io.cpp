#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lexer.hpp"
#include "netcube/errors.hpp"
#include "netcube/net.hpp"

namespace netcube {

using detail::TokenCursor;
using json = nlohmann::json;

namespace {

using TransitionSpec = std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>;

// Semantic checks that need source positions are done here rather than in make_net.
NetSystem assemble(std::vector<std::string> places, const std::vector<TransitionSpec>& transitions,
                   const std::vector<std::string>& initial) {
    std::set<std::string> pl(places.begin(), places.end());
    for (const auto& [name, pre, post] : transitions) {
        for (const auto& p : pre)
            if (!pl.count(p)) throw SemanticError("transition " + name + " names unknown place", p);
        for (const auto& p : post)
            if (!pl.count(p)) throw SemanticError("transition " + name + " names unknown place", p);
    }
    for (const auto& p : initial)
        if (!pl.count(p)) throw SemanticError("initial marking names unknown place", p);
    return make_net(std::move(places), transitions, initial);
}

}  // namespace

NetSystem parse_net(const std::string& text) {
    if (detail::looks_like_json(text)) return parse_net_json(text);
    std::vector<std::string> places;
    std::vector<TransitionSpec> transitions;
    std::vector<std::string> initial;
    bool have_initial = false;
    auto lines = detail::split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        TokenCursor cur(detail::tokenize_line(lines[i], static_cast<int>(i) + 1, "{},"));
        if (cur.at_end()) continue;
        std::string kw = cur.ident("keyword");
        if (kw == "place") {
            places.push_back(cur.ident("place identifier"));
            while (!cur.at_end()) {
                cur.accept(",");
                places.push_back(cur.ident("place identifier"));
            }
        } else if (kw == "transition") {
            std::string name = cur.ident("transition identifier");
            cur.keyword("pre");
            auto pre = cur.id_set();
            cur.keyword("post");
            auto post = cur.id_set();
            cur.finish();
            transitions.emplace_back(name, pre, post);
        } else if (kw == "initial") {
            if (have_initial) throw ParseError("initial marking given twice", static_cast<int>(i) + 1, 1);
            initial = cur.id_set();
            have_initial = true;
            cur.finish();
        } else {
            throw ParseError("unknown keyword '" + kw + "'", static_cast<int>(i) + 1, 1);
        }
    }
    return assemble(std::move(places), transitions, initial);
}

NetSystem parse_net_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("invalid JSON", line, col);
    }
    auto strings = [](const json& v, const char* what) {
        std::vector<std::string> out;
        if (!v.is_array()) throw SemanticError("expected an array of identifiers", what);
        for (const auto& s : v) {
            if (!s.is_string()) throw SemanticError("expected an identifier string", what);
            out.push_back(s.get<std::string>());
        }
        return out;
    };
    if (!j.is_object()) throw SemanticError("expected a JSON object", "<root>");
    std::vector<std::string> places = strings(j.value("places", json::array()), "places");
    std::vector<TransitionSpec> transitions;
    for (const auto& t : j.value("transitions", json::array())) {
        std::string name;
        if (t.contains("id")) name = t["id"].get<std::string>();
        else if (t.contains("name")) name = t["name"].get<std::string>();
        else throw SemanticError("transition without id", "transitions");
        transitions.emplace_back(name, strings(t.value("pre", json::array()), "pre"),
                                 strings(t.value("post", json::array()), "post"));
    }
    auto initial = strings(j.value("initial", json::array()), "initial");
    return assemble(std::move(places), transitions, initial);
}

std::string net_to_text(const NetSystem& net) {
    std::ostringstream os;
    for (const auto& p : net.places) os << "place " << p << "\n";
    auto set = [&](const std::vector<int>& s) {
        std::string out = "{";
        for (size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + net.places[s[i]];
        return out + "}";
    };
    for (size_t a = 0; a < net.transitions.size(); ++a)
        os << "transition " << net.transitions[a] << " pre " << set(net.pre[a]) << " post " << set(net.post[a]) << "\n";
    os << "initial " << set(net.initial) << "\n";
    return os.str();
}

std::string net_to_json(const NetSystem& net) {
    json j;
    j["places"] = net.places;
    j["transitions"] = json::array();
    for (size_t a = 0; a < net.transitions.size(); ++a) {
        j["transitions"].push_back({{"id", net.transitions[a]},
                                    {"pre", net.names_of(net.pre[a])},
                                    {"post", net.names_of(net.post[a])}});
    }
    j["initial"] = net.names_of(net.initial);
    return j.dump(2);
}

}  // namespace netcube
