#pragma once

#include <array>
#include <set>

#include "lsb/superalgebra.hpp"

namespace lsb {

/// Canonical span of all basis brackets, graded.
Subspace derived_subalgebra(const LieSuperAlgebra& L);

/// Kernel of the stacked adjoint system [z, e_i] = 0; always graded.
Subspace center(const LieSuperAlgebra& L);

/// { x : [x,a] = 0 for all a in A }, computed from A's basis.
Subspace centralizer(const LieSuperAlgebra& L, const Subspace& A);

/// True iff [y,y] = 0 for every odd basis y and [y_i,y_j] = 0 for all odd
/// pairs; over odd characteristic this is exactly "no element w has
/// [w,w] != 0", by polarization.
bool odd_square_vanishes(const LieSuperAlgebra& L);

struct InvariantProfile {
  Subspace derived;
  Subspace center;
  GradedDim derived_dims;
  GradedDim center_dims;
  GradedDim quotient_center_dims;  // dims of L/Z(L)
  bool odd_square_vanishes = false;
  std::array<int, 3> derived_split{};  // dim[L0,L0], dim[L1,L1], dim[L0,L1]
};

InvariantProfile invariant_profile(const LieSuperAlgebra& L);

struct MaximalAbelianIdeal {
  Subspace space;
  /// False only over the rationals when the odd-square zero search was
  /// inconclusive ("unconfirmed-maximality").
  bool confirmed = true;
};

struct MaximalAbelianResult {
  std::vector<MaximalAbelianIdeal> ideals;
  bool all_confirmed = true;
};

/// Maximal abelian graded ideals found by saturation: starting from Z(L) and
/// from every admissible single-generator seed Z(L) + <x>, repeatedly extend
/// by a homogeneous x with [L,x] in A, [A,x] = 0 and [x,x] = 0 until no
/// extension exists; distinct fixed points are returned sorted. For nilpotent
/// L an abelian graded ideal is maximal iff no such one-step extension
/// exists. Requires nilpotency; over the rationals the odd search is a
/// bounded-height heuristic and results may be flagged unconfirmed.
MaximalAbelianResult maximal_abelian_ideals(const LieSuperAlgebra& L);

struct IdealBreadthReport {
  int total = 0;
  std::set<GradedDim> pairs;  // pairs attained by total-maximizing elements
  Element witness;
  std::uint64_t enumerated = 0;
};

/// rank ad_x|_A with the (even,odd) projection pair of the image.
std::pair<int, GradedDim> element_ideal_breadth(const LieSuperAlgebra& L, const Subspace& A,
                                                const Element& x);

/// max over all x of rank ad_x|_A, by exhaustive enumeration over a prime
/// field (one representative per projective class).
IdealBreadthReport ideal_breadth(const LieSuperAlgebra& L, const Subspace& A);

/// M_x = C_L(A) + ker ad_x.
Subspace m_space(const LieSuperAlgebra& L, const Subspace& A, const Element& x);

/// D_x = intersection of M_{a+x} over every a in C_L(A); prime fields only,
/// with early exit once the intersection reaches its lower bound C_L(A).
Subspace d_space(const LieSuperAlgebra& L, const Subspace& A, const Element& x);

/// Convenience: is the subspace an ideal ([L,S] contained in S)?
bool is_ideal(const LieSuperAlgebra& L, const Subspace& S);
/// Do all brackets of basis vectors of S vanish?
bool is_abelian_subspace(const LieSuperAlgebra& L, const Subspace& S);

/// Span of [S, L] (all brackets of S-basis with L-basis), graded.
Subspace bracket_with_algebra(const LieSuperAlgebra& L, const Subspace& S);

}  // namespace lsb
