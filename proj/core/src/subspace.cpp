#include "lsb/subspace.hpp"

namespace lsb {

namespace {

// RREF with zero rows dropped.
Matrix canonical_basis(Field f, std::size_t ambient,
                       const std::vector<std::vector<Value>>& vectors) {
  Matrix m(f, vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) throw DimensionError("vector length != ambient dimension");
    for (std::size_t c = 0; c < ambient; ++c) m.at(r, c) = vectors[r][c];
  }
  std::size_t rk = echelonize(m).size();
  Matrix out(f, rk, ambient);
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < ambient; ++c) out.at(r, c) = m.at(r, c);
  return out;
}

// A row is homogeneous if its support lies in one parity block.
std::optional<GradedDim> grading_of(const Matrix& basis, const GradedDim& split) {
  const Field& f = basis.field();
  GradedDim g{0, 0};
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    bool has_even = false, has_odd = false;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      if (f.is_zero(basis.at(r, c))) continue;
      (static_cast<int>(c) < split.even ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return std::nullopt;
    if (has_odd)
      ++g.odd;
    else
      ++g.even;
  }
  return g;
}

}  // namespace

Subspace::Subspace(std::size_t ambient, Matrix basis, std::optional<GradedDim> split)
    : ambient_(ambient), basis_(std::move(basis)), split_(split) {
  if (split_) graded_ = grading_of(basis_, *split_);
}

Subspace Subspace::zero_space(Field f, std::size_t ambient, std::optional<GradedDim> split) {
  return Subspace(ambient, Matrix(f, 0, ambient), split);
}

Subspace Subspace::full_space(Field f, std::size_t ambient, std::optional<GradedDim> split) {
  return Subspace(ambient, Matrix::identity(f, ambient), split);
}

Subspace Subspace::span(Field f, std::size_t ambient,
                        const std::vector<std::vector<Value>>& vectors,
                        std::optional<GradedDim> split) {
  return Subspace(ambient, canonical_basis(f, ambient, vectors), split);
}

std::vector<Value> Subspace::basis_row(std::size_t r) const {
  std::vector<Value> v(ambient_, field().zero());
  for (std::size_t c = 0; c < ambient_; ++c) v[c] = basis_.at(r, c);
  return v;
}

Subspace Subspace::with_split(GradedDim split) const {
  return Subspace(ambient_, basis_, split);
}

std::vector<Value> Subspace::reduce(std::vector<Value> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length != ambient dimension");
  const Field& f = field();
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    // Pivot of row r is its first nonzero column, with entry 1.
    std::size_t pc = 0;
    while (pc < ambient_ && f.is_zero(basis_.at(r, pc))) ++pc;
    if (pc == ambient_ || f.is_zero(v[pc])) continue;
    Value factor = v[pc];
    for (std::size_t c = pc; c < ambient_; ++c)
      v[c] = f.sub(v[c], f.mul(factor, basis_.at(r, c)));
  }
  return v;
}

bool Subspace::contains(const std::vector<Value>& v) const {
  const Field& f = field();
  std::vector<Value> r = reduce(v);
  for (const Value& x : r)
    if (!f.is_zero(x)) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_row(r))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Subspace::operator<(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (dim() != o.dim()) return dim() < o.dim();
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) {
      const Value &a = basis_.at(r, c), &b = o.basis_.at(r, c);
      if (!(a == b)) return value_less(a, b);
    }
  return false;
}

SumIntersection subspace_sum_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
    throw DimensionError("subspace sum/intersection needs matching ambient spaces");
  const Field& f = a.field();
  const std::size_t n = a.ambient_dim();

  // Zassenhaus block [[A|A],[B|0]]; after reduction, rows with nonzero left
  // half span the sum on the left, rows with zero left half span the
  // intersection on the right.
  Matrix z(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      z.at(r, c) = a.basis().at(r, c);
      z.at(r, n + c) = a.basis().at(r, c);
    }
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) z.at(a.dim() + r, c) = b.basis().at(r, c);
  echelonize(z);

  std::vector<std::vector<Value>> sum_rows, int_rows;
  for (std::size_t r = 0; r < z.rows(); ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c)
      if (!f.is_zero(z.at(r, c))) left_zero = false;
    std::vector<Value> half(n, f.zero());
    if (left_zero) {
      bool right_zero = true;
      for (std::size_t c = 0; c < n; ++c) {
        half[c] = z.at(r, n + c);
        if (!f.is_zero(half[c])) right_zero = false;
      }
      if (!right_zero) int_rows.push_back(std::move(half));
    } else {
      for (std::size_t c = 0; c < n; ++c) half[c] = z.at(r, c);
      sum_rows.push_back(std::move(half));
    }
  }
  std::optional<GradedDim> split = a.split() ? a.split() : b.split();
  return {Subspace::span(f, n, sum_rows, split), Subspace::span(f, n, int_rows, split)};
}

Subspace kernel_space(const Matrix& m, std::optional<GradedDim> split) {
  RankKernel rk = rank_kernel_raw(m);
  return Subspace::span(m.field(), m.cols(), rk.kernel_basis, split);
}

}  // namespace lsb
