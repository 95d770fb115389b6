#pragma once

#include <optional>
#include <vector>

#include "lsb/graded.hpp"
#include "lsb/matrix.hpp"

namespace lsb {

/// Subspace of F^n in canonical form: the basis is the unique reduced
/// row-echelon basis, so subspace equality is value equality.
///
/// When the ambient space carries a Z2-grading (an (even, odd) split of the
/// coordinates), the subspace records whether it is graded, i.e. the direct
/// sum of its even and odd projections; this holds exactly when every
/// echelon basis row is supported on a single parity block.
class Subspace {
 public:
  static Subspace zero_space(Field f, std::size_t ambient,
                             std::optional<GradedDim> split = std::nullopt);
  static Subspace full_space(Field f, std::size_t ambient,
                             std::optional<GradedDim> split = std::nullopt);

  /// Canonicalize a spanning set. Idempotent and order-insensitive.
  static Subspace span(Field f, std::size_t ambient,
                       const std::vector<std::vector<Value>>& vectors,
                       std::optional<GradedDim> split = std::nullopt);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Value> basis_row(std::size_t r) const;

  /// The ambient grading split this subspace was built against, if any.
  std::optional<GradedDim> split() const { return split_; }
  /// Graded dimensions, present iff a split is known and the subspace is
  /// graded with respect to it.
  std::optional<GradedDim> graded() const { return graded_; }
  bool is_graded() const { return graded_.has_value(); }
  /// Re-derive the gradedness annotation against a split.
  Subspace with_split(GradedDim split) const;

  /// Residual of v after elimination against the basis rows.
  std::vector<Value> reduce(std::vector<Value> v) const;
  bool contains(const std::vector<Value>& v) const;
  bool contains(const Subspace& other) const;

  /// Equality compares ambient dimension and canonical basis entries; the
  /// grading annotation is derived data and not part of the value.
  bool operator==(const Subspace& o) const;
  bool operator<(const Subspace& o) const;  // for canonical sets

 private:
  Subspace(std::size_t ambient, Matrix basis, std::optional<GradedDim> split);

  std::size_t ambient_;
  Matrix basis_;
  std::optional<GradedDim> split_;
  std::optional<GradedDim> graded_;
};

struct SumIntersection {
  Subspace sum;
  Subspace intersection;
};

/// Sum and intersection in one elimination (Zassenhaus).
SumIntersection subspace_sum_intersect(const Subspace& a, const Subspace& b);

/// Canonical kernel of m (as a subspace of F^cols).
Subspace kernel_space(const Matrix& m, std::optional<GradedDim> split = std::nullopt);

}  // namespace lsb
