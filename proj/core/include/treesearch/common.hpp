#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treesearch {

using VertexId = int;          // vertices are 1..n; 0 means "none"
using Weight = std::int64_t;   // query costs, always >= 1

constexpr VertexId kNoVertex = 0;

// Base error for invalid instances, violated preconditions and bad inputs.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Error raised by the text-format parsers; carries a 1-based line number
// (0 when the problem is not tied to a single line).
class ParseError : public Error {
  public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

constexpr bool is_power_of_two(Weight w) { return w > 0 && (w & (w - 1)) == 0; }

// Least power of two >= w.  Throws on overflow instead of wrapping.
inline Weight ceil_power_of_two(Weight w) {
    if (w <= 0) throw Error("weight must be positive");
    constexpr Weight kMax = Weight{1} << 62;
    if (w > kMax) throw Error("weight overflow: " + std::to_string(w) + " cannot be rounded up");
    Weight p = 1;
    while (p < w) p <<= 1;
    return p;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b;  // a >= 0, b > 0
}

}  // namespace treesearch
