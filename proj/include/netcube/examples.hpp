#pragma once

#include <string>
#include <vector>

#include "netcube/complex.hpp"
#include "netcube/net.hpp"

namespace netcube {

// Shipped objects: "nstar" (net), "z" and "zprime" (complexes).
std::vector<std::string> example_names();
bool has_example(const std::string& name);
std::string example_text(const std::string& name);  // throws Error for unknown names

NetSystem nstar_net();
SquareComplex z_complex();
SquareComplex zprime_complex();

}  // namespace netcube
