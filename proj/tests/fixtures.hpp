#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lsb/catalog.hpp"
#include "lsb/enumerate.hpp"
#include "lsb/invariants.hpp"

namespace lsb::test {

inline Field f5() { return Field::prime(5); }
inline Field f3() { return Field::prime(3); }

/// The catalog set used by the acceptance criteria: A(0,0), A(2,1),
/// He(m,n,0,0) for m,n in {0,1,2} with m+n >= 1, Ho(m,0,0) for m in {1,2,3},
/// and B1..B5.
inline std::vector<std::pair<std::string, LieSuperAlgebra>> acceptance_catalog(Field f) {
  std::vector<std::pair<std::string, LieSuperAlgebra>> out;
  out.emplace_back("A(0,0)", abelian(f, {0, 0}));
  out.emplace_back("A(2,1)", abelian(f, {2, 1}));
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      if (m + n < 1) continue;
      out.emplace_back("He(" + std::to_string(m) + "," + std::to_string(n) + ")",
                       heisenberg_even(f, m, n, 0, 0));
    }
  for (int m = 1; m <= 3; ++m)
    out.emplace_back("Ho(" + std::to_string(m) + ")", heisenberg_odd(f, m, 0, 0));
  out.emplace_back("B1", witness_b1(f));
  out.emplace_back("B2", witness_b2(f));
  out.emplace_back("B3", witness_b3(f));
  out.emplace_back("B4", witness_b4(f));
  out.emplace_back("B5", witness_b5(f));
  return out;
}

/// Seeded corpus algebra: dimension split drawn uniformly from all
/// (base, center) with components <= 3 and total <= 6, then a random 2-step
/// extension. Deterministic in the seed.
inline LieSuperAlgebra corpus_algebra(std::uint64_t seed, Field f) {
  static const std::vector<std::array<int, 4>> splits = [] {
    std::vector<std::array<int, 4>> out;
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s)
        for (int c0 = 0; c0 <= 3; ++c0)
          for (int c1 = 0; c1 <= 3; ++c1)
            if (r + s + c0 + c1 <= 6) out.push_back({r, s, c0, c1});
    return out;
  }();
  std::mt19937_64 engine(seed);
  const auto& sp = splits[engine() % splits.size()];
  return random_two_step(engine(), {sp[0], sp[1]}, {sp[2], sp[3]}, f);
}

/// Independent maximality oracle: sweep every element x of L (all q^n of
/// them) and confirm none outside A satisfies [L,x] in A, [A,x] = 0 and
/// [x,x] = 0. Uses only bracket arithmetic and membership tests.
inline bool brute_force_maximal(const LieSuperAlgebra& L, const Subspace& A) {
  const Field& f = L.field();
  const int n = L.n();
  std::vector<std::int64_t> digits(n, 0);
  do {
    Element x(n, f.zero());
    for (int c = 0; c < n; ++c) x[c] = f.from_int(digits[c]);
    if (A.contains(x)) continue;
    bool extends = is_zero_element(L.bracket(x, x), f);
    for (int i = 0; i < n && extends; ++i) {
      Element br = L.bracket(L.basis_element(i), x);
      if (!A.contains(br)) extends = false;
    }
    for (std::size_t r = 0; r < A.dim() && extends; ++r)
      if (!is_zero_element(L.bracket(A.basis_row(r), x), f)) extends = false;
    if (extends) return false;  // one-step extension exists
  } while (next_tuple(digits, f.modulus()));
  return true;
}

}  // namespace lsb::test
