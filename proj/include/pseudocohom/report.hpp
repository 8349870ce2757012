#pragma once

#include <string>
#include <vector>

namespace pseudocohom {

/// One violated identity: which check, at which basis tuple, and the rendered
/// nonzero difference (lhs - rhs).
struct Finding {
    std::string check;
    std::vector<std::string> locator;
    std::string difference;
};

/// Result of an identity checker. Findings are produced in lexicographic
/// order of the scanned basis tuples.
struct CheckReport {
    std::vector<Finding> findings;

    bool passed() const { return findings.empty(); }
    void append(const CheckReport& o) { findings.insert(findings.end(), o.findings.begin(), o.findings.end()); }
    std::string summary(std::size_t max_lines = 10) const;
};

} // namespace pseudocohom
