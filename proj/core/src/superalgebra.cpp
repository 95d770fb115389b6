#include "lsb/superalgebra.hpp"

namespace lsb {

namespace {

// (-1)^{|i||j|} as a flag: true when both indices are odd.
bool both_odd(const GradedDim& d, int i, int j) {
  return d.parity(i) == Parity::odd && d.parity(j) == Parity::odd;
}

}  // namespace

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::grading: return "grading";
    case Axiom::skew_symmetry: return "skew";
    case Axiom::jacobi: return "jacobi";
  }
  return "?";
}

AxiomError::AxiomError(AxiomViolation v)
    : Error("axiom violation (" + to_string(v.axiom) + ") at (" + std::to_string(v.i) + "," +
            std::to_string(v.j) + "," + std::to_string(v.k) + "): " + v.detail),
      v_(std::move(v)) {}

StructureTensor::StructureTensor(Field f, GradedDim dims)
    : field_(f),
      dims_(dims),
      c_(static_cast<std::size_t>(dims.total()) * dims.total() * dims.total(), f.zero()) {}

void StructureTensor::set_bracket(int i, int j, const std::vector<Value>& coeffs) {
  if (static_cast<int>(coeffs.size()) != n()) throw DimensionError("bracket coefficient length");
  for (int k = 0; k < n(); ++k) at(i, j, k) = coeffs[k];
  if (i == j) return;
  bool sym = both_odd(dims_, i, j);  // [e_j,e_i] = -(-1)^{|i||j|} [e_i,e_j]
  for (int k = 0; k < n(); ++k) at(j, i, k) = sym ? coeffs[k] : field_.neg(coeffs[k]);
}

std::optional<AxiomViolation> verify_axioms(const StructureTensor& t) {
  const Field& f = t.field();
  const GradedDim& d = t.dims();
  const int n = t.n();

  // (i) grading: c[i][j][k] = 0 unless |k| = |i|+|j|.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!f.is_zero(t.at(i, j, k)) && d.parity(k) != d.parity(i) + d.parity(j))
          return AxiomViolation{Axiom::grading, i, j, k,
                                "nonzero coefficient with parity mismatch"};

  // (ii) graded skew-symmetry on pairs, plus [e_i,e_i] = 0 for even i.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == j) {
        if (d.parity(i) == Parity::odd) continue;  // odd squares are unconstrained
        for (int k = 0; k < n; ++k)
          if (!f.is_zero(t.at(i, i, k)))
            return AxiomViolation{Axiom::skew_symmetry, i, i, k,
                                  "[x,x] must vanish for even x"};
        continue;
      }
      bool sym = both_odd(d, i, j);
      for (int k = 0; k < n; ++k) {
        Value expect = sym ? t.at(i, j, k) : f.neg(t.at(i, j, k));
        if (!(t.at(j, i, k) == expect))
          return AxiomViolation{Axiom::skew_symmetry, j, i, k,
                                "pair inconsistent with the sign rule"};
      }
    }

  // (iii) graded Jacobi on all basis triples.
  auto sign = [&](int a, int b) { return both_odd(d, a, b); };  // true => factor -1
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Value sum = f.zero();
          for (int m = 0; m < n; ++m) {
            // (-1)^{|i||k|} [e_i,[e_j,e_k]]
            if (!f.is_zero(t.at(j, k, m)) && !f.is_zero(t.at(i, m, l))) {
              Value term = f.mul(t.at(j, k, m), t.at(i, m, l));
              sum = f.add(sum, sign(i, k) ? f.neg(term) : term);
            }
            // (-1)^{|j||i|} [e_j,[e_k,e_i]]
            if (!f.is_zero(t.at(k, i, m)) && !f.is_zero(t.at(j, m, l))) {
              Value term = f.mul(t.at(k, i, m), t.at(j, m, l));
              sum = f.add(sum, sign(j, i) ? f.neg(term) : term);
            }
            // (-1)^{|k||j|} [e_k,[e_i,e_j]]
            if (!f.is_zero(t.at(i, j, m)) && !f.is_zero(t.at(k, m, l))) {
              Value term = f.mul(t.at(i, j, m), t.at(k, m, l));
              sum = f.add(sum, sign(k, j) ? f.neg(term) : term);
            }
          }
          if (!f.is_zero(sum))
            return AxiomViolation{Axiom::jacobi, i, j, k, "graded Jacobi sum is nonzero"};
        }
      }
  return std::nullopt;
}

LieSuperAlgebra::LieSuperAlgebra(Field f, GradedDim dims, std::vector<std::string> names)
    : field_(f), dims_(dims), names_(std::move(names)) {
  const int nn = dims_.total();
  if (names_.empty()) {
    for (int i = 0; i < dims_.even; ++i) names_.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < dims_.odd; ++i) names_.push_back("y" + std::to_string(i + 1));
  }
  if (static_cast<int>(names_.size()) != nn) throw DimensionError("basis name count mismatch");
  upper_.assign(static_cast<std::size_t>(nn) * nn, {});
}

LieSuperAlgebra LieSuperAlgebra::from_tensor(const StructureTensor& t,
                                             std::vector<std::string> names) {
  if (auto v = verify_axioms(t)) throw AxiomError(*v);
  LieSuperAlgebra L(t.field(), t.dims(), std::move(names));
  const int n = t.n();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<Value> row(n, t.field().zero());
      bool nonzero = false;
      for (int k = 0; k < n; ++k) {
        row[k] = t.at(i, j, k);
        nonzero = nonzero || !t.field().is_zero(row[k]);
      }
      if (nonzero) L.upper_[L.upper_index(i, j)] = std::move(row);
    }
  return L;
}

int LieSuperAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Value LieSuperAlgebra::sc(int i, int j, int k) const {
  const bool flip = i > j;
  const std::vector<Value>& row = upper_[flip ? upper_index(j, i) : upper_index(i, j)];
  if (row.empty()) return field_.zero();
  if (!flip) return row[k];
  return both_odd(dims_, i, j) ? row[k] : field_.neg(row[k]);
}

Element LieSuperAlgebra::bracket_basis(int i, int j) const {
  Element v(n(), field_.zero());
  for (int k = 0; k < n(); ++k) v[k] = sc(i, j, k);
  return v;
}

Element LieSuperAlgebra::basis_element(int i) const {
  Element v = zero_element();
  v[i] = field_.one();
  return v;
}

Element LieSuperAlgebra::bracket(const Element& x, const Element& y) const {
  if (static_cast<int>(x.size()) != n() || static_cast<int>(y.size()) != n())
    throw DimensionError("element length mismatch");
  Element out(n(), field_.zero());
  for (int i = 0; i < n(); ++i) {
    if (field_.is_zero(x[i])) continue;
    for (int j = 0; j < n(); ++j) {
      if (field_.is_zero(y[j])) continue;
      const std::vector<Value>* row;
      bool flip = i > j;
      row = &upper_[flip ? upper_index(j, i) : upper_index(i, j)];
      if (row->empty()) continue;
      Value scale = field_.mul(x[i], y[j]);
      if (flip && !both_odd(dims_, i, j)) scale = field_.neg(scale);
      for (int k = 0; k < n(); ++k)
        if (!field_.is_zero((*row)[k]))
          out[k] = field_.add(out[k], field_.mul(scale, (*row)[k]));
    }
  }
  return out;
}

Matrix LieSuperAlgebra::ad(const Element& x) const {
  if (static_cast<int>(x.size()) != n()) throw DimensionError("element length mismatch");
  Matrix m(field_, n(), n());
  for (int i = 0; i < n(); ++i) {
    if (field_.is_zero(x[i])) continue;
    for (int j = 0; j < n(); ++j) {
      const std::vector<Value>* row;
      bool flip = i > j;
      row = &upper_[flip ? upper_index(j, i) : upper_index(i, j)];
      if (row->empty()) continue;
      Value scale = x[i];
      if (flip && !both_odd(dims_, i, j)) scale = field_.neg(scale);
      for (int k = 0; k < n(); ++k)
        if (!field_.is_zero((*row)[k]))
          m.at(k, j) = field_.add(m.at(k, j), field_.mul(scale, (*row)[k]));
    }
  }
  return m;
}

StructureTensor LieSuperAlgebra::tensor() const {
  StructureTensor t(field_, dims_);
  for (int i = 0; i < n(); ++i)
    for (int j = i; j < n(); ++j) {
      const std::vector<Value>& row = upper_[upper_index(i, j)];
      if (row.empty()) continue;
      t.set_bracket(i, j, row);
    }
  return t;
}

bool LieSuperAlgebra::is_abelian() const {
  for (const auto& row : upper_) {
    for (const Value& v : row)
      if (!field_.is_zero(v)) return false;
  }
  return true;
}

bool LieSuperAlgebra::operator==(const LieSuperAlgebra& o) const {
  if (!(field_ == o.field_) || dims_ != o.dims_ || names_ != o.names_) return false;
  for (int i = 0; i < n(); ++i)
    for (int j = i; j < n(); ++j)
      for (int k = 0; k < n(); ++k)
        if (!(sc(i, j, k) == o.sc(i, j, k))) return false;
  return true;
}

NilpotencyReport lower_central_series(const LieSuperAlgebra& L) {
  const Field& f = L.field();
  const int n = L.n();
  Subspace term = Subspace::full_space(f, n, L.dims());
  int k = 1;  // term = L^k
  while (true) {
    if (term.dim() == 0) return {true, k - 1};
    // L^{k+1} = [L, L^k]
    std::vector<std::vector<Value>> gens;
    for (int i = 0; i < n; ++i) {
      Element ei = L.basis_element(i);
      for (std::size_t r = 0; r < term.dim(); ++r)
        gens.push_back(L.bracket(ei, term.basis_row(r)));
    }
    Subspace next = Subspace::span(f, n, gens, L.dims());
    if (next.dim() == term.dim()) return {false, std::nullopt};
    term = next;
    ++k;
  }
}

AlgebraReport inspect(const StructureTensor& t) {
  AlgebraReport rep;
  if (auto v = verify_axioms(t)) {
    rep.axioms_ok = false;
    rep.violation = *v;
    return rep;
  }
  rep.axioms_ok = true;
  LieSuperAlgebra L = LieSuperAlgebra::from_tensor(t);
  NilpotencyReport nil = lower_central_series(L);
  rep.nilpotent = nil.nilpotent;
  rep.nilpotency_class = nil.nilpotency_class;
  return rep;
}

Element even_part(const Element& x, const LieSuperAlgebra& L) {
  Element out = x;
  for (int i = L.dims().even; i < L.n(); ++i) out[i] = L.field().zero();
  return out;
}

Element odd_part(const Element& x, const LieSuperAlgebra& L) {
  Element out = x;
  for (int i = 0; i < L.dims().even; ++i) out[i] = L.field().zero();
  return out;
}

bool is_zero_element(const Element& x, const Field& f) {
  for (const Value& v : x)
    if (!f.is_zero(v)) return false;
  return true;
}

std::string format_element(const LieSuperAlgebra& L, const Element& x) {
  const Field& f = L.field();
  std::string out;
  for (int i = 0; i < L.n(); ++i) {
    if (f.is_zero(x[i])) continue;
    if (!out.empty()) out += "+";
    out += f.to_string(x[i]) + "*" + L.names()[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace lsb
