#pragma once

#include <optional>

#include "lsb/breadth.hpp"
#include "lsb/catalog.hpp"

namespace lsb {

struct SearchConstraints {
  GradedDim derived;
  GradedDim quotient;
  /// When present, require odd_square_vanishes == value. Requiring vanishing
  /// also prunes generation: a 2-step extension has vanishing odd squares
  /// exactly when every odd-odd cocycle entry is zero.
  std::optional<bool> odd_square;
  int max_total = 6;
  std::uint64_t cocycle_cap = 100'000'000;
};

struct SearchOutcome {
  std::optional<LieSuperAlgebra> witness;
  std::optional<CrossCheckResult> witness_check;
  std::uint64_t candidates = 0;
  std::uint64_t splits = 0;
};

/// Exhaustive sweep over 2-step central extensions: every dimension split
/// (base + center, total <= max_total) and every cocycle, one representative
/// per scalar class. Returns the first algebra whose invariant profile
/// matches the constraints, with its oracle/classifier cross-check, or Empty
/// with the exact number of candidates examined. Fields F_3 and F_5 only.
SearchOutcome inhabitation_search(Field f, const SearchConstraints& c);

}  // namespace lsb
