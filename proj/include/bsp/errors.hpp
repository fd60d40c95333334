#pragma once

#include <stdexcept>
#include <string>

namespace bsp {

/// Malformed textual input (vectors, space labels, direct-sum specs).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration guard was exceeded (brute-force oracles, block counts).
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bsp
