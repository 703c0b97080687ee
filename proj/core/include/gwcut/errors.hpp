#pragma once

#include <stdexcept>
#include <string>

namespace gwcut {

// Bad user input: malformed files, size mismatches, invalid parameters.
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance too large for an exact method (brute-force cap). Exit code 2.
class capacity_error : public input_error {
public:
    explicit capacity_error(const std::string& what) : input_error(what) {}
};

// Numerical failure on otherwise well-formed input (indefinite Gram matrix,
// non-finite values). The CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gwcut
