#include "lsb/invariants.hpp"

#include <algorithm>

#include "lsb/enumerate.hpp"

namespace lsb {

namespace {

constexpr std::uint64_t kEnumCap = 10'000'000;

Subspace span_of_brackets(const LieSuperAlgebra& L,
                          const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<Value>> gens;
  for (auto [i, j] : pairs) gens.push_back(L.bracket_basis(i, j));
  return Subspace::span(L.field(), L.n(), gens, L.dims());
}

// Linear combination of the basis rows of S with the given digit tuple.
Element combine(const Subspace& S, const std::vector<std::int64_t>& digits) {
  const Field& f = S.field();
  Element v(S.ambient_dim(), f.zero());
  for (std::size_t r = 0; r < S.dim(); ++r) {
    if (digits[r] == 0) continue;
    Value c = f.from_int(digits[r]);
    for (std::size_t col = 0; col < S.ambient_dim(); ++col)
      v[col] = f.add(v[col], f.mul(c, S.basis().at(r, col)));
  }
  return v;
}

}  // namespace

Subspace derived_subalgebra(const LieSuperAlgebra& L) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < L.n(); ++i)
    for (int j = i; j < L.n(); ++j) pairs.push_back({i, j});
  return span_of_brackets(L, pairs);
}

Subspace center(const LieSuperAlgebra& L) {
  const Field& f = L.field();
  const int n = L.n();
  // Solve [z, e_i] = 0 for all i: rows indexed by (i,k), columns by j with
  // entry sc(j,i,k).
  Matrix sys(f, n * n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) sys.at(i * n + k, j) = L.sc(j, i, k);
  return kernel_space(sys, L.dims());
}

Subspace centralizer(const LieSuperAlgebra& L, const Subspace& A) {
  const Field& f = L.field();
  const int n = L.n();
  if (A.ambient_dim() != static_cast<std::size_t>(n))
    throw DimensionError("subspace ambient mismatch");
  Matrix sys(f, A.dim() * n, n);
  for (std::size_t r = 0; r < A.dim(); ++r) {
    Element a = A.basis_row(r);
    for (int j = 0; j < n; ++j) {
      Element br = L.bracket(L.basis_element(j), a);  // [e_j, a]
      for (int k = 0; k < n; ++k) sys.at(r * n + k, j) = br[k];
    }
  }
  return kernel_space(sys, L.dims());
}

bool odd_square_vanishes(const LieSuperAlgebra& L) {
  const Field& f = L.field();
  for (int i = L.dims().even; i < L.n(); ++i)
    for (int j = i; j < L.n(); ++j)
      for (int k = 0; k < L.n(); ++k)
        if (!f.is_zero(L.sc(i, j, k))) return false;
  return true;
}

InvariantProfile invariant_profile(const LieSuperAlgebra& L) {
  InvariantProfile p{derived_subalgebra(L), center(L), {}, {}, {}, false, {}};
  if (!p.derived.graded() || !p.center.graded())
    throw Error("internal: derived subalgebra or center came out non-graded");
  p.derived_dims = *p.derived.graded();
  p.center_dims = *p.center.graded();
  p.quotient_center_dims = L.dims() - p.center_dims;
  p.odd_square_vanishes = odd_square_vanishes(L);

  std::vector<std::pair<int, int>> ee, oo, eo;
  for (int i = 0; i < L.n(); ++i)
    for (int j = i; j < L.n(); ++j) {
      bool i_even = L.parity(i) == Parity::even, j_even = L.parity(j) == Parity::even;
      if (i_even && j_even)
        ee.push_back({i, j});
      else if (!i_even && !j_even)
        oo.push_back({i, j});
      else
        eo.push_back({i, j});
    }
  p.derived_split = {static_cast<int>(span_of_brackets(L, ee).dim()),
                     static_cast<int>(span_of_brackets(L, oo).dim()),
                     static_cast<int>(span_of_brackets(L, eo).dim())};
  return p;
}

bool is_ideal(const LieSuperAlgebra& L, const Subspace& S) {
  for (int i = 0; i < L.n(); ++i)
    for (std::size_t r = 0; r < S.dim(); ++r)
      if (!S.contains(L.bracket(L.basis_element(i), S.basis_row(r)))) return false;
  return true;
}

bool is_abelian_subspace(const LieSuperAlgebra& L, const Subspace& S) {
  const Field& f = L.field();
  for (std::size_t r = 0; r < S.dim(); ++r)
    for (std::size_t s = r; s < S.dim(); ++s)
      if (!is_zero_element(L.bracket(S.basis_row(r), S.basis_row(s)), f)) return false;
  return true;
}

Subspace bracket_with_algebra(const LieSuperAlgebra& L, const Subspace& S) {
  std::vector<std::vector<Value>> gens;
  for (std::size_t r = 0; r < S.dim(); ++r)
    for (int j = 0; j < L.n(); ++j)
      gens.push_back(L.bracket(S.basis_row(r), L.basis_element(j)));
  return Subspace::span(L.field(), L.n(), gens, L.dims());
}

namespace {

// W(A) = { x : [L,x] in A and [A,x] = 0 }, graded whenever A is.
Subspace extension_space(const LieSuperAlgebra& L, const Subspace& A) {
  const Field& f = L.field();
  const int n = L.n();
  Matrix sys(f, (n + A.dim()) * n, n);
  for (int i = 0; i < n; ++i) {
    Element ei = L.basis_element(i);
    for (int j = 0; j < n; ++j) {
      Element red = A.reduce(L.bracket(ei, L.basis_element(j)));
      for (int k = 0; k < n; ++k) sys.at(i * n + k, j) = red[k];
    }
  }
  for (std::size_t r = 0; r < A.dim(); ++r) {
    Element a = A.basis_row(r);
    for (int j = 0; j < n; ++j) {
      Element br = L.bracket(a, L.basis_element(j));
      for (int k = 0; k < n; ++k) sys.at((n + r) * n + k, j) = br[k];
    }
  }
  return kernel_space(sys, L.dims());
}

Subspace extend_by(const LieSuperAlgebra& L, const Subspace& A, const Element& x) {
  std::vector<std::vector<Value>> gens;
  for (std::size_t r = 0; r < A.dim(); ++r) gens.push_back(A.basis_row(r));
  gens.push_back(x);
  return Subspace::span(L.field(), L.n(), gens, L.dims());
}

// Rows of a graded subspace's echelon basis restricted to one parity block.
std::vector<Element> parity_rows(const LieSuperAlgebra& L, const Subspace& S, Parity par) {
  const Field& f = L.field();
  std::vector<Element> rows;
  for (std::size_t r = 0; r < S.dim(); ++r) {
    Element v = S.basis_row(r);
    bool in_block = true, nonzero = false;
    for (int c = 0; c < L.n(); ++c) {
      if (f.is_zero(v[c])) continue;
      nonzero = true;
      if (L.parity(c) != par) in_block = false;
    }
    if (nonzero && in_block) rows.push_back(std::move(v));
  }
  return rows;
}

// One saturation run; returns the fixed point and whether maximality was
// confirmed (always true over prime fields).
MaximalAbelianIdeal saturate(const LieSuperAlgebra& L, Subspace A) {
  const Field& f = L.field();
  while (true) {
    Subspace W = extension_space(L, A);
    if (W.dim() == A.dim()) return {A, true};  // W contains A, so equality

    // Even extension: [x,x] = 0 automatically.
    bool extended = false;
    for (const Element& row : parity_rows(L, W, Parity::even)) {
      if (A.contains(row)) continue;
      A = extend_by(L, A, row);
      extended = true;
      break;
    }
    if (extended) continue;

    // Odd extension: search the odd-square quadratic for a zero outside A.
    std::vector<Element> odd_rows = parity_rows(L, W, Parity::odd);
    if (odd_rows.empty()) return {A, true};
    Subspace W1 = Subspace::span(f, L.n(), odd_rows, L.dims());
    if (A.contains(W1)) return {A, true};

    if (f.is_prime()) {
      const std::int64_t q = f.modulus();
      std::vector<std::int64_t> digits(W1.dim(), 0);
      while (next_tuple(digits, q)) {
        Element x = combine(W1, digits);
        if (A.contains(x)) continue;
        if (!is_zero_element(L.bracket(x, x), f)) continue;
        A = extend_by(L, A, x);
        extended = true;
        break;
      }
      if (!extended) return {A, true};  // exhaustive: no zero outside A
    } else {
      // Bounded-height heuristic over the rationals: integer coefficient
      // tuples with entries in [-3,3].
      std::vector<std::int64_t> digits(W1.dim(), 0);
      while (next_tuple(digits, 7)) {
        std::vector<std::int64_t> coeffs = digits;
        for (auto& c : coeffs) c -= 3;
        Element x = combine(W1, coeffs);
        if (A.contains(x)) continue;
        if (!is_zero_element(L.bracket(x, x), f)) continue;
        A = extend_by(L, A, x);
        extended = true;
        break;
      }
      if (!extended) return {A, false};  // inconclusive search
    }
  }
}

}  // namespace

MaximalAbelianResult maximal_abelian_ideals(const LieSuperAlgebra& L) {
  if (!lower_central_series(L).nilpotent)
    throw PreconditionError("maximal abelian ideals are computed for nilpotent algebras only");
  const Field& f = L.field();
  const int n = L.n();
  Subspace Z = center(L);

  std::set<Subspace> fixed;
  std::vector<MaximalAbelianIdeal> found;
  auto add = [&](MaximalAbelianIdeal ideal) {
    if (fixed.insert(ideal.space).second) found.push_back(std::move(ideal));
  };

  add(saturate(L, Z));

  // Admissible single-generator seeds: homogeneous x outside Z with
  // Z + <x> an abelian graded ideal.
  auto try_seed = [&](const Element& x) {
    if (Z.contains(x)) return;
    Element x1 = odd_part(x, L);
    if (!is_zero_element(x1, f) && !is_zero_element(L.bracket(x, x), f)) return;
    Subspace seed = extend_by(L, Z, x);
    if (!is_ideal(L, seed)) return;
    add(saturate(L, seed));
  };

  if (f.is_prime()) {
    const std::int64_t q = f.modulus();
    for (Parity par : {Parity::even, Parity::odd}) {
      int block = par == Parity::even ? L.dims().even : L.dims().odd;
      if (block == 0) continue;
      checked_pow(q, block, kEnumCap);
      ProjectiveEnumerator reps(q, block);
      std::vector<std::int64_t> coords;
      for (std::uint64_t idx = 0; idx < reps.count(); ++idx) {
        reps.rep(idx, coords);
        Element x(n, f.zero());
        int offset = par == Parity::even ? 0 : L.dims().even;
        for (int c = 0; c < block; ++c) x[offset + c] = f.from_int(coords[c]);
        try_seed(x);
      }
    }
  } else {
    for (int i = 0; i < n; ++i) try_seed(L.basis_element(i));
  }

  // Canonical order for reproducible reports.
  std::sort(found.begin(), found.end(),
            [](const MaximalAbelianIdeal& a, const MaximalAbelianIdeal& b) {
              return a.space < b.space;
            });
  MaximalAbelianResult out;
  out.ideals = std::move(found);
  for (const auto& ideal : out.ideals) out.all_confirmed = out.all_confirmed && ideal.confirmed;
  return out;
}

std::pair<int, GradedDim> element_ideal_breadth(const LieSuperAlgebra& L, const Subspace& A,
                                                const Element& x) {
  const Field& f = L.field();
  const int n = L.n();
  Matrix m(f, n, A.dim());
  for (std::size_t c = 0; c < A.dim(); ++c) {
    Element br = L.bracket(x, A.basis_row(c));
    for (int k = 0; k < n; ++k) m.at(k, c) = br[k];
  }
  int total = static_cast<int>(rank(m));

  Matrix top(f, L.dims().even, A.dim());
  Matrix bottom(f, L.dims().odd, A.dim());
  for (std::size_t c = 0; c < A.dim(); ++c) {
    for (int k = 0; k < L.dims().even; ++k) top.at(k, c) = m.at(k, c);
    for (int k = 0; k < L.dims().odd; ++k) bottom.at(k, c) = m.at(L.dims().even + k, c);
  }
  GradedDim pair{static_cast<int>(rank(top)), static_cast<int>(rank(bottom))};
  return {total, pair};
}

IdealBreadthReport ideal_breadth(const LieSuperAlgebra& L, const Subspace& A) {
  const Field& f = L.field();
  if (!f.is_prime())
    throw UnsupportedFieldError("the global ideal breadth needs exhaustive enumeration; "
                                "use element_ideal_breadth over the rationals");
  if (!is_ideal(L, A)) throw PreconditionError("ideal breadth needs an ideal");
  const std::int64_t q = f.modulus();
  const int n = L.n();
  checked_pow(q, n, kEnumCap);

  IdealBreadthReport rep;
  rep.witness = L.zero_element();
  rep.pairs.insert(GradedDim{0, 0});
  rep.enumerated = 1;

  ProjectiveEnumerator reps(q, n);
  std::vector<std::int64_t> coords;
  for (std::uint64_t idx = 0; idx < reps.count(); ++idx) {
    reps.rep(idx, coords);
    Element x(n, f.zero());
    for (int c = 0; c < n; ++c) x[c] = f.from_int(coords[c]);
    auto [total, pair] = element_ideal_breadth(L, A, x);
    ++rep.enumerated;
    if (total > rep.total) {
      rep.total = total;
      rep.pairs.clear();
      rep.pairs.insert(pair);
      rep.witness = x;
    } else if (total == rep.total && total > 0) {
      rep.pairs.insert(pair);
    }
  }
  return rep;
}

Subspace m_space(const LieSuperAlgebra& L, const Subspace& A, const Element& x) {
  Subspace C = centralizer(L, A);
  Subspace K = kernel_space(L.ad(x), L.dims());
  return subspace_sum_intersect(C, K).sum;
}

Subspace d_space(const LieSuperAlgebra& L, const Subspace& A, const Element& x) {
  const Field& f = L.field();
  if (!f.is_prime())
    throw UnsupportedFieldError("D_x intersects over all elements of C_L(A); prime fields only");
  Subspace C = centralizer(L, A);
  if (C.dim() > 6 || f.modulus() > 7)
    throw CapError("D_x enumeration is capped at dim C_L(A) <= 6 and q <= 7");

  Subspace D = Subspace::full_space(f, L.n(), L.dims());
  std::vector<std::int64_t> digits(C.dim(), 0);
  const std::int64_t q = f.modulus();
  do {
    Element a = combine(C, digits);
    Element ax = a;
    for (int c = 0; c < L.n(); ++c) ax[c] = f.add(ax[c], x[c]);
    Subspace K = kernel_space(L.ad(ax), L.dims());
    D = subspace_sum_intersect(D, subspace_sum_intersect(C, K).sum).intersection;
    if (D.dim() == C.dim()) break;  // reached the lower bound C_L(A)
  } while (next_tuple(digits, q));
  return D;
}

}  // namespace lsb
