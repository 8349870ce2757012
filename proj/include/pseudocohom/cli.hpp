#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pseudocohom/report.hpp"

namespace pseudocohom {

/// Outcome of one command. Exit codes depend on the verdict only:
/// pass/found 0, fail/not-found 1, inconclusive 2.
struct CliReport {
    std::string command;
    std::string verdict;
    std::vector<Finding> findings;
    std::optional<std::string> witness;
    std::vector<std::string> lines;

    std::string render_text() const;
    std::string render_json() const;
};

int exit_code(const std::string& verdict);

/// Usage and model errors print to `err` and return 3.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pseudocohom
