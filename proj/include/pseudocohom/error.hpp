#pragma once

#include <stdexcept>
#include <string>

namespace pseudocohom {

/// Raised for contract violations: mismatched fields, modules, arities or
/// malformed input. Messages are meant to be shown to a user verbatim.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pseudocohom
