#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ibet {

using NodeId = std::uint32_t;

/// Per-node betweenness scores, ordered-pair convention.
using Scores = std::vector<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Relative tolerance used for every distance comparison.
inline constexpr double kDistanceTolerance = 1e-9;

inline double distance_slack(double a, double b) {
  return kDistanceTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Equality of two distances; two infinities compare equal.
inline bool dist_equal(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= distance_slack(a, b);
}

/// a < b by more than the tolerance.
inline bool dist_less(double a, double b) {
  if (std::isinf(a)) return false;
  if (std::isinf(b)) return true;
  return a < b - distance_slack(a, b);
}

/// a <= b up to the tolerance.
inline bool dist_less_equal(double a, double b) { return !dist_less(b, a); }

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotFoundError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for operations outside the incremental model, or engines fed a graph kind they cannot handle.
class UnsupportedError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The quadratic state would not fit the configured memory cap.
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ibet
