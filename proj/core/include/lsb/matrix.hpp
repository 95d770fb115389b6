#pragma once

#include <cstddef>
#include <vector>

#include "lsb/field.hpp"

namespace lsb {

class Subspace;

/// Dense matrix over an exact field, row-major.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Value& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Value& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix transpose() const;
  std::vector<Value> apply(const std::vector<Value>& v) const;  // m * v
  bool is_zero() const;

  bool operator==(const Matrix& o) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Value> a_;
};

/// Reduced row echelon form, in place. Returns the pivot columns.
std::vector<std::size_t> echelonize(Matrix& m);

std::size_t rank(const Matrix& m);

struct RankKernel {
  std::size_t rank;
  std::vector<std::vector<Value>> kernel_basis;  // raw, not yet canonical
};

/// Rank and a kernel spanning set of m (kernel of v -> m*v).
RankKernel rank_kernel_raw(const Matrix& m);

}  // namespace lsb
