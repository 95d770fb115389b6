#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lsb/catalog.hpp"
#include "lsb/superalgebra.hpp"

using namespace lsb;
using lsb::test::f5;

namespace {

std::vector<Value> unit(Field f, int n, int k) {
  std::vector<Value> v(n, f.zero());
  v[k] = f.one();
  return v;
}

}  // namespace

TEST_CASE("Ho(1) satisfies the axioms; a flipped sign does not") {
  Field f = f5();
  LieSuperAlgebra ho = heisenberg_odd(f, 1, 0, 0);
  CHECK_FALSE(verify_axioms(ho.tensor()).has_value());

  // basis: x1 even (0); y1, z odd (1,2); [x1,y1] = z
  StructureTensor t(f, {1, 2});
  t.at(0, 1, 2) = f.one();
  t.at(1, 0, 2) = f.one();  // should be -z: x1 even, y1 odd forces the flip
  auto v = verify_axioms(t);
  REQUIRE(v.has_value());
  CHECK(v->axiom == Axiom::skew_symmetry);
  CHECK(v->i == 1);
  CHECK(v->j == 0);
  CHECK(v->k == 2);
}

TEST_CASE("an even diagonal entry violates skew-symmetry") {
  Field f = f5();
  StructureTensor t(f, {2, 0});
  t.at(0, 0, 1) = f.one();  // [e1,e1] = e2 with e1 even
  auto v = verify_axioms(t);
  REQUIRE(v.has_value());
  CHECK(v->axiom == Axiom::skew_symmetry);
}

TEST_CASE("grading violations are caught first") {
  Field f = f5();
  StructureTensor t(f, {2, 1});  // x1,x2 even; y1 odd
  t.set_bracket(0, 1, unit(f, 3, 2));  // [x1,x2] = y1: even*even -> odd, illegal
  auto v = verify_axioms(t);
  REQUIRE(v.has_value());
  CHECK(v->axiom == Axiom::grading);
  CHECK(v->i == 0);
  CHECK(v->j == 1);
  CHECK(v->k == 2);
}

TEST_CASE("injected bracket breaks the Jacobi identity at (a,b,c)") {
  // Even algebra on a,b,c,d with [a,b]=c, [a,c]=d, [b,c]=d and the extra
  // bracket [a,d]=b. Hand expansion: triple (a,b,c) gives
  // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = [a,d] - [b,d] + 0 = b != 0, and all
  // lexicographically earlier triples cancel.
  Field f = f5();
  StructureTensor t(f, {4, 0});
  t.set_bracket(0, 1, unit(f, 4, 2));
  t.set_bracket(0, 2, unit(f, 4, 3));
  t.set_bracket(1, 2, unit(f, 4, 3));
  t.set_bracket(0, 3, unit(f, 4, 1));
  auto v = verify_axioms(t);
  REQUIRE(v.has_value());
  CHECK(v->axiom == Axiom::jacobi);
  CHECK(v->i == 0);
  CHECK(v->j == 1);
  CHECK(v->k == 2);
}

TEST_CASE("lower central series") {
  Field f = f5();
  SUBCASE("abelian has class 1") {
    NilpotencyReport r = lower_central_series(abelian(f, {2, 1}));
    CHECK(r.nilpotent);
    CHECK(r.nilpotency_class == 1);
  }
  SUBCASE("zero algebra has class 0") {
    NilpotencyReport r = lower_central_series(abelian(f, {0, 0}));
    CHECK(r.nilpotent);
    CHECK(r.nilpotency_class == 0);
  }
  SUBCASE("Heisenberg has class 2") {
    NilpotencyReport r = lower_central_series(heisenberg_even(f, 1, 0, 0, 0));
    CHECK(r.nilpotent);
    CHECK(r.nilpotency_class == 2);
  }
  SUBCASE("[e1,e2]=e2 is not nilpotent") {
    StructureTensor t(f, {2, 0});
    t.set_bracket(0, 1, unit(f, 2, 1));
    LieSuperAlgebra L = LieSuperAlgebra::from_tensor(t);
    NilpotencyReport r = lower_central_series(L);
    CHECK_FALSE(r.nilpotent);
  }
}

TEST_CASE("bracket arithmetic") {
  Field f = f5();
  LieSuperAlgebra ho = heisenberg_odd(f, 1, 0, 0);
  SUBCASE("bracket with zero vanishes") {
    Element z = ho.bracket(ho.basis_element(0), ho.zero_element());
    CHECK(is_zero_element(z, f));
  }
  SUBCASE("[x1,y1] = z in Ho(1), reversed order flips the sign") {
    Element br = ho.bracket(ho.basis_element(0), ho.basis_element(1));
    CHECK(br == ho.basis_element(2));
    Element rev = ho.bracket(ho.basis_element(1), ho.basis_element(0));
    Element minus_z = ho.zero_element();
    minus_z[2] = f.neg(f.one());
    CHECK(rev == minus_z);
  }
}

TEST_CASE("B2 bracket with odd-odd symmetry") {
  // [a+x, a] = [a,a] + [x,a] = z1 + z2 since odd-odd brackets are symmetric.
  Field f = f5();
  LieSuperAlgebra b2 = witness_b2(f);
  int a = b2.index_of("a"), x = b2.index_of("x");
  int z1 = b2.index_of("z1"), z2 = b2.index_of("z2");
  REQUIRE(a >= 0);
  Element ax = b2.zero_element();
  ax[a] = f.one();
  ax[x] = f.one();
  Element lhs = b2.bracket(ax, b2.basis_element(a));
  Element want = b2.zero_element();
  want[z1] = f.one();
  want[z2] = f.one();
  CHECK(lhs == want);
}

TEST_CASE("graded skew-symmetry holds on all basis pairs of catalog algebras") {
  Field f = f5();
  for (const auto& [name, L] : lsb::test::acceptance_catalog(f)) {
    for (int i = 0; i < L.n(); ++i)
      for (int j = 0; j < L.n(); ++j) {
        Element lhs = L.bracket(L.basis_element(j), L.basis_element(i));
        Element rhs = L.bracket(L.basis_element(i), L.basis_element(j));
        bool both_odd = L.parity(i) == Parity::odd && L.parity(j) == Parity::odd;
        for (int k = 0; k < L.n(); ++k) {
          Value expect = both_odd ? rhs[k] : f.neg(rhs[k]);
          CHECK(lhs[k] == expect);
        }
      }
  }
}

TEST_CASE("squares depend only on the odd part") {
  Field f = f5();
  LieSuperAlgebra b2 = witness_b2(f);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Element w = b2.zero_element();
    for (int c = 0; c < b2.n(); ++c) w[c] = f.from_int(static_cast<std::int64_t>(rng() % 5));
    Element w1 = odd_part(w, b2);
    CHECK(b2.bracket(w, w) == b2.bracket(w1, w1));
  }
}

TEST_CASE("single-entry mutations breaking grading or skew are rejected") {
  Field f = f5();
  auto catalog = lsb::test::acceptance_catalog(f);
  std::mt19937_64 rng(2024);
  int found = 0;
  while (found < 30) {
    const auto& [name, L] = catalog[rng() % catalog.size()];
    const int n = L.n();
    if (n == 0) continue;
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n),
        k = static_cast<int>(rng() % n);
    std::int64_t delta = 1 + static_cast<std::int64_t>(rng() % 4);
    Axiom expected;
    if (L.dims().parity(k) != L.dims().parity(i) + L.dims().parity(j))
      expected = Axiom::grading;
    else if (i != j)
      expected = Axiom::skew_symmetry;
    else
      continue;  // odd diagonal with matching parity may stay a valid algebra
    StructureTensor t = L.tensor();
    t.at(i, j, k) = f.add(t.at(i, j, k), f.from_int(delta));
    auto v = verify_axioms(t);
    REQUIRE(v.has_value());
    CHECK(v->axiom == expected);
    ++found;
  }
}
