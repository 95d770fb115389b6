#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lsb/breadth.hpp"
#include "lsb/invariants.hpp"
#include "lsb/superalgebra.hpp"

namespace lsb {

enum class LawOutcome { holds, vacuous, fails };

std::string to_string(LawOutcome o);

struct LawVerdict {
  LawOutcome outcome = LawOutcome::vacuous;
  std::optional<std::string> witness;       // present iff the law fails
  std::vector<std::string> hypotheses_log;  // evaluated hypotheses with truth values
};

struct LawInfo {
  std::string id;
  std::string summary;
  bool needs_nilpotency;
};

/// The fixed 25-entry registry (every numbered statement encoded as a law).
const std::vector<LawInfo>& law_registry();
bool is_law_id(const std::string& id);
const LawInfo& law_info(const std::string& id);

/// Shared per-algebra caches: profile, oracle run (with maximizers), maximal
/// abelian ideals and per-ideal data. Owns a copy of the algebra; build one
/// per algebra and reuse it for every law. Breadth hypotheses use oracle
/// semantics throughout: a stated pair (p,q) holds iff the oracle total is
/// p+q and the maximizer pair set is exactly {(p,q)}.
class LawContext {
 public:
  explicit LawContext(LieSuperAlgebra L, int jobs = 0);

  const LieSuperAlgebra& algebra() const { return L_; }
  int jobs() const { return jobs_; }

  const InvariantProfile& profile();
  bool nilpotent();
  const OracleReport& oracle();
  const std::vector<Subspace>& ideals();

  const IdealBreadthReport& ideal_breadth_of(std::size_t idx);
  const Subspace& centralizer_of(std::size_t idx);
  bool centralizer_is_abelian(std::size_t idx);
  /// pro3.8 hypothesis: all x,y outside C_L(A) share one kernel of ad|_A.
  bool shared_restricted_kernel(std::size_t idx);
  /// Projective representatives z with b_A(z) total 1 (T_A), enumeration order.
  const std::vector<Element>& t_a(std::size_t idx);

 private:
  void ensure_ideal_breadths();

  LieSuperAlgebra L_;
  int jobs_;
  std::optional<InvariantProfile> profile_;
  std::optional<bool> nilpotent_;
  std::optional<OracleReport> oracle_;
  std::optional<std::vector<Subspace>> ideals_;
  std::vector<std::optional<IdealBreadthReport>> bA_;
  std::map<std::size_t, Subspace> cent_;
  std::map<std::size_t, bool> cent_abelian_;
  std::map<std::size_t, bool> shared_kernel_;
  std::map<std::size_t, std::vector<Element>> tA_;
};

/// Evaluate one law; deterministic. Throws PreconditionError when the law
/// assumes nilpotency and the algebra is not nilpotent, UnsupportedFieldError
/// when the hypotheses need enumeration over a non-prime field.
LawVerdict check_law(LawContext& ctx, const std::string& id);
LawVerdict check_law(const LieSuperAlgebra& L, const std::string& id);

/// Hypothesis-satisfaction accounting across a corpus: a law whose
/// hypotheses were never satisfied is "untested" rather than silently green.
struct VacuityTally {
  std::map<std::string, int> evaluated;
  std::map<std::string, int> satisfied;  // outcome != vacuous

  void record(const std::string& id, const LawVerdict& v);
  std::vector<std::string> untested() const;
};

}  // namespace lsb
