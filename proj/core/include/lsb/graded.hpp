#pragma once

#include <compare>
#include <string>

namespace lsb {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// Dimension of a Z2-graded space as an (even, odd) pair.
struct GradedDim {
  int even = 0;
  int odd = 0;

  int total() const { return even + odd; }

  /// Parity of basis index i under the convention that the first `even`
  /// indices are even and the rest odd.
  Parity parity(int i) const { return i < even ? Parity::even : Parity::odd; }

  GradedDim operator+(const GradedDim& o) const { return {even + o.even, odd + o.odd}; }
  GradedDim operator-(const GradedDim& o) const { return {even - o.even, odd - o.odd}; }
  auto operator<=>(const GradedDim&) const = default;
};

inline std::string to_string(const GradedDim& d) {
  return "(" + std::to_string(d.even) + "," + std::to_string(d.odd) + ")";
}

}  // namespace lsb
