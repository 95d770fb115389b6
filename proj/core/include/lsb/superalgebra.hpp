#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsb/graded.hpp"
#include "lsb/matrix.hpp"
#include "lsb/subspace.hpp"

namespace lsb {

/// Coordinates of an algebra element in the standard graded basis.
using Element = std::vector<Value>;

enum class Axiom { grading, skew_symmetry, jacobi };

std::string to_string(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  int i, j, k;
  std::string detail;
};

/// Raw structure-constant tensor c[i][j][k] with [e_i,e_j] = sum_k c[i][j][k] e_k.
/// All ordered pairs are stored, so inconsistent (axiom-violating) tensors are
/// representable; verify_axioms is the gatekeeper.
class StructureTensor {
 public:
  StructureTensor(Field f, GradedDim dims);

  const Field& field() const { return field_; }
  const GradedDim& dims() const { return dims_; }
  int n() const { return dims_.total(); }

  Value& at(int i, int j, int k) { return c_[(static_cast<std::size_t>(i) * n() + j) * n() + k]; }
  const Value& at(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * n() + j) * n() + k];
  }

  /// Set c[i][j][*] = coeffs and c[j][i][*] by the sign rule.
  void set_bracket(int i, int j, const std::vector<Value>& coeffs);

 private:
  Field field_;
  GradedDim dims_;
  std::vector<Value> c_;
};

/// Check the three axioms in order (grading, graded skew-symmetry, graded
/// Jacobi); returns the first violation in scan order, if any. Skew
/// violations are reported at the derived-side entry (j,i,k) of the offending
/// pair i<j.
std::optional<AxiomViolation> verify_axioms(const StructureTensor& t);

class AxiomError : public Error {
 public:
  explicit AxiomError(AxiomViolation v);
  const AxiomViolation& violation() const { return v_; }

 private:
  AxiomViolation v_;
};

/// Verified Lie superalgebra over an exact field. Structure constants are
/// stored for pairs i<j plus the diagonal of odd indices; the other half is
/// derived through the sign rule and never stored.
class LieSuperAlgebra {
 public:
  /// Verify and adopt a raw tensor. Throws AxiomError on violation.
  static LieSuperAlgebra from_tensor(const StructureTensor& t,
                                     std::vector<std::string> names = {});

  const Field& field() const { return field_; }
  const GradedDim& dims() const { return dims_; }
  int n() const { return dims_.total(); }
  Parity parity(int i) const { return dims_.parity(i); }

  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if unknown

  /// c[i][j][k] for any ordered pair (the j<i half via the sign rule).
  Value sc(int i, int j, int k) const;
  /// [e_i, e_j] as a coordinate vector.
  Element bracket_basis(int i, int j) const;

  Element zero_element() const { return Element(n(), field_.zero()); }
  Element basis_element(int i) const;
  Element bracket(const Element& x, const Element& y) const;
  /// Matrix of y -> [x, y]; columns indexed by basis vectors.
  Matrix ad(const Element& x) const;

  /// Full raw tensor re-derived from the stored half.
  StructureTensor tensor() const;

  bool is_abelian() const;

  bool operator==(const LieSuperAlgebra& o) const;

 private:
  LieSuperAlgebra(Field f, GradedDim dims, std::vector<std::string> names);

  std::size_t upper_index(int i, int j) const {
    return static_cast<std::size_t>(i) * n() + j;
  }

  Field field_;
  GradedDim dims_;
  std::vector<std::string> names_;
  // upper_[i*n+j] for i<=j holds c[i][j][*]; rows for even diagonals stay zero.
  std::vector<std::vector<Value>> upper_;
};

struct NilpotencyReport {
  bool nilpotent = false;
  std::optional<int> nilpotency_class;
};

/// Lower central series L^1 = L, L^{k+1} = [L, L^k]; nilpotent with class c
/// when c is least with L^{c+1} = 0.
NilpotencyReport lower_central_series(const LieSuperAlgebra& L);

/// Combined axioms + nilpotency summary for reporting.
struct AlgebraReport {
  bool axioms_ok = false;
  std::optional<AxiomViolation> violation;
  bool nilpotent = false;
  std::optional<int> nilpotency_class;
};

AlgebraReport inspect(const StructureTensor& t);

/// x restricted to the even / odd coordinate block (other block zeroed).
Element even_part(const Element& x, const LieSuperAlgebra& L);
Element odd_part(const Element& x, const LieSuperAlgebra& L);
bool is_zero_element(const Element& x, const Field& f);

/// Human-readable linear combination in the algebra's basis names.
std::string format_element(const LieSuperAlgebra& L, const Element& x);

}  // namespace lsb
