#pragma once

#include <optional>
#include <set>
#include <string>

#include "lsb/invariants.hpp"
#include "lsb/superalgebra.hpp"

namespace lsb {

/// Matrix of y -> [x,y], columns indexed by basis vectors.
Matrix ad_matrix(const LieSuperAlgebra& L, const Element& x);

/// rank ad_x plus the (even,odd) projection dimensions of the image. For
/// homogeneous x the image is graded and the pair sums to the rank.
std::pair<int, GradedDim> element_breadth(const LieSuperAlgebra& L, const Element& x);

struct BreadthReport {
  int total = 0;
  /// When set, total is a lower bound: the classifier's "at least three".
  bool at_least = false;
  /// Image-projection pairs attained by total-maximizing elements. The
  /// classifier reports a single definite pair; the oracle reports the set
  /// over all maximizers.
  std::set<GradedDim> pairs;
  std::optional<Element> witness;
  std::string method;  // "oracle" or "classifier"
  std::optional<std::string> classifier_case;
  std::optional<std::string> caveat;
};

struct OracleOptions {
  int jobs = 0;  // 0: all hardware threads
  bool collect_maximizers = false;
  std::uint64_t max_elements = 10'000'000;
};

struct OracleReport : BreadthReport {
  std::uint64_t enumerated = 0;
  /// Canonical projective representatives of all maximizers, in enumeration
  /// order (only when requested; a single zero element for abelian input).
  std::vector<Element> maximizers;
};

/// Exhaustive maximum of rank ad_x over a prime field. Enumerates one
/// representative per projective class (rank is scaling-invariant), in
/// ascending coordinate-lexicographic order; the witness is the first
/// maximizer. Deterministic and independent of the job count.
OracleReport breadth_bruteforce(const LieSuperAlgebra& L, const OracleOptions& opt = {});

/// Decision table over the invariant profile only: derived dimensions,
/// central quotient dimensions and odd-square vanishing. Nilpotency is a
/// precondition. Clause 5 (derived (1,2), quotient (1,2), vanishing odd
/// squares) is reported with a caveat flag; anything past the table is
/// "at least three".
BreadthReport breadth_classify(const LieSuperAlgebra& L);

/// Max rank over purely even and purely odd elements; a fast lower bound for
/// the oracle total.
int homogeneous_breadth_bound(const LieSuperAlgebra& L);

struct CrossCheckResult {
  bool agree = false;
  OracleReport oracle;
  BreadthReport classifier;
  std::string details;
};

/// Runs classifier and oracle and compares: totals must match (>= 3 for the
/// "at least three" branch) and the classifier's definite pair must be among
/// the oracle's maximizer pairs.
CrossCheckResult cross_check(const LieSuperAlgebra& L, const OracleOptions& opt = {});

std::string format_pairs(const std::set<GradedDim>& pairs);

}  // namespace lsb
