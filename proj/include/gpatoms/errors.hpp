#pragma once

#include <stdexcept>
#include <string>

namespace gpatoms {

// Invalid input: bad graph data, out-of-range weights, malformed rationals, ...
// The CLI maps this to exit code 1.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed a configured cap.  The CLI maps this to exit code 2.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Default cap for enumerations (word classes, atom selections).
inline constexpr std::size_t kDefaultCap = 1000000;

}  // namespace gpatoms
