#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lsb/superalgebra.hpp"

namespace lsb {

/// Abelian algebra A(r,s).
LieSuperAlgebra abelian(Field f, GradedDim dims);

/// H_e(m,n,k0,k1): even <x1..x2m, z> + even abelian pad, odd <y1..yn> + odd
/// pad, with [x_i, x_{i+m}] = z and [y_j, y_j] = z. Requires m+n >= 1.
LieSuperAlgebra heisenberg_even(Field f, int m, int n, int k0, int k1);

/// H_o(m,k0,k1): even <x1..xm> + pad, odd <y1..ym, z> + pad, with
/// [x_i, y_i] = z. Requires m >= 1.
LieSuperAlgebra heisenberg_odd(Field f, int m, int k0, int k1);

LieSuperAlgebra witness_b1(Field f);
LieSuperAlgebra witness_b2(Field f);
LieSuperAlgebra witness_b3(Field f);
LieSuperAlgebra witness_b4(Field f);
LieSuperAlgebra witness_b5(Field f);

struct CatalogParams {
  int m = 0, n = 0, k0 = 0, k1 = 0;
};

/// Dispatch by family name: A, He, Ho, B1..B5 (A uses m=even, n=odd).
LieSuperAlgebra catalog_build(Field f, const std::string& name, const CatalogParams& p);

/// Block direct sum; cross brackets vanish. Clashing right-hand basis names
/// get a numeric suffix.
LieSuperAlgebra direct_sum(const LieSuperAlgebra& a, const LieSuperAlgebra& b);

/// 2-step central extension: brackets of base basis vectors take values in an
/// appended central block. Keys are base-local pairs (i,j) with i <= j
/// (diagonals only for odd i); values are center-local coordinate vectors.
struct CocycleSpec {
  GradedDim base;
  GradedDim center;
  std::map<std::pair<int, int>, std::vector<Value>> entries;
};

LieSuperAlgebra central_extension(Field f, const CocycleSpec& spec,
                                  std::vector<std::string> base_names = {},
                                  std::vector<std::string> center_names = {});

/// Seeded random 2-step central extension over a prime field; deterministic
/// in the seed, uniform independent cocycle entries.
LieSuperAlgebra random_two_step(std::uint64_t seed, GradedDim base, GradedDim center, Field f);

}  // namespace lsb
