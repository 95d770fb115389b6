#pragma once

#include <cstdint>
#include <vector>

#include "lsb/errors.hpp"

namespace lsb {

/// Canonical representatives of the nonzero projective classes of F_p^n,
/// ordered by ascending coordinate-lexicographic order. A representative has
/// first nonzero coordinate equal to 1, so the order starts at
/// (0,...,0,1), then (0,...,1,0), (0,...,1,1), ... and ends at (1,p-1,...,p-1).
class ProjectiveEnumerator {
 public:
  ProjectiveEnumerator(std::int64_t p, int n);

  std::uint64_t count() const { return count_; }

  /// Write representative #index (0-based, in enumeration order) into out.
  void rep(std::uint64_t index, std::vector<std::int64_t>& out) const;

 private:
  std::int64_t p_;
  int n_;
  std::uint64_t count_;
  std::vector<std::uint64_t> block_size_;  // per leading position, later positions first
};

/// Odometer over {0..q-1}^n in ascending lexicographic order (last digit
/// fastest). Returns false when the sweep wraps back to all zeros.
bool next_tuple(std::vector<std::int64_t>& digits, std::int64_t q);

/// q^n with overflow guard; throws CapError past the cap.
std::uint64_t checked_pow(std::int64_t q, int n, std::uint64_t cap);

}  // namespace lsb
