#include "netcube/examples.hpp"

#include <map>

#include "netcube/errors.hpp"

namespace netcube {

namespace detail {
const std::map<std::string, std::string>& embedded_examples();
}

std::vector<std::string> example_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : detail::embedded_examples()) out.push_back(name);
    return out;
}

bool has_example(const std::string& name) { return detail::embedded_examples().count(name) != 0; }

std::string example_text(const std::string& name) {
    auto it = detail::embedded_examples().find(name);
    if (it == detail::embedded_examples().end()) throw Error("unknown example: " + name);
    return it->second;
}

NetSystem nstar_net() { return parse_net(example_text("nstar")); }
SquareComplex z_complex() { return parse_complex(example_text("z")); }
SquareComplex zprime_complex() { return parse_complex(example_text("zprime")); }

}  // namespace netcube
