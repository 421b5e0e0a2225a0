#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace netcube::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct Options {
    std::uint64_t seed = 20240917;
    int random_nets = 24;   // criteria 4, 5, 7
    int alphabets = 100;    // criterion 10
    std::vector<int> only;  // empty runs every criterion
};

// Runs the criteria in order; each result is also printed as one PASS/FAIL line when `log` is set.
std::vector<CriterionResult> run(const Options& opt, std::ostream* log = nullptr);

std::string format_line(const CriterionResult& r);

}  // namespace netcube::acceptance
