#pragma once

#include <stdexcept>
#include <string>

namespace semint {

// Input-level failure: malformed documents, dangling references, cycles,
// bad CLI values. Maps to exit code 1. Messages carry source context
// (file name, JSON position, offending field) where available.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller bugs and broken internal invariants map to std::logic_error
// (exit code 2 at the CLI boundary).

} // namespace semint
