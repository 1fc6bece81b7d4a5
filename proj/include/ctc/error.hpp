#pragma once

#include <stdexcept>
#include <string>

namespace ctc {

/// Raised for precondition violations, malformed input and failed
/// construction self-checks. Verification outcomes are reported through
/// verdict objects instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ctc
