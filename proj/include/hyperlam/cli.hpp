#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlam::cli {

// Grid specification like "k=2..3,n=4..10,p=1,2": comma-separated
// var=range-or-list assignments; a bare token extends the previous
// variable's list, "a..b" expands to consecutive integers.
struct GridSpec {
    std::vector<std::pair<std::string, std::vector<double>>> vars;

    const std::vector<double>* find(const std::string& name) const;
    std::vector<double> get_or(const std::string& name, std::vector<double> fallback) const;
};

GridSpec parse_grid(const std::string& text);  // throws std::invalid_argument

// Runs one CLI invocation (args exclude the program name). Exit codes:
// 0 success, 1 bad input, 2 violation found, 3 budget exhausted,
// 4 non-converged or non-certified result under --strict.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlam::cli
