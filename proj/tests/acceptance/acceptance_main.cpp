#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance/suite.hpp"

int main(int argc, char** argv) {
    netcube::acceptance::Options opt;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--seed" && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
        else if (a == "--only" && i + 1 < argc) opt.only.push_back(std::stoi(argv[++i]));
        else {
            std::cerr << "usage: netcube_acceptance [--seed S] [--only N]...\n";
            return 2;
        }
    }
    auto results = netcube::acceptance::run(opt, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += !r.pass;
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
