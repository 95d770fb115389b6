#include "lsb/laws.hpp"

#include <functional>
#include <set>
#include <thread>

#include "lsb/enumerate.hpp"

namespace lsb {

std::string to_string(LawOutcome o) {
  switch (o) {
    case LawOutcome::holds: return "Holds";
    case LawOutcome::vacuous: return "Vacuous";
    case LawOutcome::fails: return "Fails";
  }
  return "?";
}

namespace {

const std::vector<LawInfo>& registry() {
  static const std::vector<LawInfo> laws = {
      {"L2-abelian", "abelian iff breadth (0,0)", false},
      {"P2-breadth1", "breadth total 1 iff derived total 1", false},
      {"T2-structure1",
       "He/Ho bracket pattern has breadth total 1 with pair (1,0)/(0,1); forward direction only "
       "(the converse needs isomorphism testing)",
       false},
      {"T2-centerbound",
       "every maximizer x gives dim L/Z >= b(L), and >= b(L)+1 when [x,x] = 0", false},
      {"L3-1", "b=(0,r), r>=2: C_L(A) = A for every maximal abelian ideal A", true},
      {"L3-2", "b=(r,0), r>=2, [L0,L0]=0: [x,x] != 0 for all odd x outside A", true},
      {"L3-3", "b=(r,s), r>=1, b_A=(0,0): [L0,L0] = 0", true},
      {"P3-4", "b=(2,0), b_A=(0,0): derived (2,0), or derived (3,0) and L/Z=(0,2)", true},
      {"P3-5", "b=(0,2): no maximal abelian ideal has b_A=(0,0)", true},
      {"L3-6", "b=(1,1): some element has breadth (1,1)", false},
      {"P3-7",
       "b=(1,1), b_A=(0,0): derived (1,1), or derived (1,2), L/Z=(1,2) and no w with [w,w]!=0",
       true},
      {"P3-8i", "b_A total 1, shared restricted kernels: dim A/Z = 1 and C_A(z)=Z on T_A", true},
      {"P3-8ii", "P3-8 hypotheses, C_L(A) abelian: dim M_z = dim L + 1 - b(z) on T_A", true},
      {"P3-8iii", "P3-8 hypotheses, C_L(A) non-abelian: dim M_z > dim L - b(z) on T_A", true},
      {"P3-9i/ii",
       "b=(2,0), b_A=(1,0), C_L(A) non-abelian, dim L/C=1: dim C/A=1 gives dim L/A=2; "
       "dim C/A>=2 gives derived (2,0)",
       true},
      {"P3-10i/ii",
       "b=(1,1), b_A total 1, C_L(A) non-abelian, dim L/C=1: dim C/A=1 gives dim L/A=2; "
       "dim C/A>=2 gives derived (1,1)",
       true},
      {"P3-11", "b total 2, b_A total 1, dim L/C >= 2: derived total 2", true},
      {"P3-12", "b=(2,0), b_A=(1,0): dim A/Z=1 and dim L/Z<=3, or derived (2,0)", true},
      {"P3-13", "b=(0,2), b_A=(0,1): derived (0,2)", true},
      {"P3-14", "b=(1,1), b_A total 1: dim A/Z=1 and dim L/Z<=3, or derived (1,1)", true},
      {"L3-15", "b=b_A=(r,s), total 2: dim [C_L(A),L] = (r,s)", true},
      {"P3-16", "b=b_A=(r,s), total 2: dim [L,L] = (r,s)", true},
      {"T4-M1", "b=(2,0) iff derived (2,0), or derived (3,0) with L/Z (0,2) or (3,0)", true},
      {"T4-M2", "b=(0,2) iff derived (0,2)", true},
      {"T4-M3", "b=(1,1) iff derived (1,1), or derived (1,2), L/Z (1,2), no w with [w,w]!=0",
       true},
  };
  return laws;
}

std::string log_line(const std::string& name, bool value) {
  return name + ": " + (value ? "true" : "false");
}

// Oracle pair semantics: the report states pair (p,q) iff the maximizer pair
// set is exactly {(p,q)} and p+q equals the total.
std::optional<GradedDim> definite_pair(int total, const std::set<GradedDim>& pairs) {
  if (pairs.size() != 1) return std::nullopt;
  GradedDim p = *pairs.begin();
  if (p.total() != total) return std::nullopt;
  return p;
}

std::optional<GradedDim> definite_pair(const OracleReport& r) {
  return definite_pair(r.total, r.pairs);
}

GradedDim graded_dims_or_throw(const Subspace& s, const char* what) {
  if (!s.graded()) throw Error(std::string("internal: expected a graded subspace for ") + what);
  return *s.graded();
}

std::string format_subspace(const LieSuperAlgebra& L, const Subspace& s) {
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    out += format_element(L, s.basis_row(r));
  }
  return out + "}";
}

// {a in A : [x,a] = 0}, as a subspace of the ambient space.
Subspace restricted_kernel(const LieSuperAlgebra& L, const Subspace& A, const Element& x) {
  const Field& f = L.field();
  const int n = L.n();
  Matrix m(f, n, A.dim());
  for (std::size_t c = 0; c < A.dim(); ++c) {
    Element br = L.bracket(x, A.basis_row(c));
    for (int k = 0; k < n; ++k) m.at(k, c) = br[k];
  }
  RankKernel rk = rank_kernel_raw(m);
  std::vector<std::vector<Value>> gens;
  for (const auto& t : rk.kernel_basis) {
    Element v(n, f.zero());
    for (std::size_t r = 0; r < A.dim(); ++r) {
      if (f.is_zero(t[r])) continue;
      for (int c = 0; c < n; ++c) v[c] = f.add(v[c], f.mul(t[r], A.basis().at(r, c)));
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, n, gens, L.dims());
}

// All canonical projective representatives of F_p^n, in enumeration order.
void for_each_rep(const LieSuperAlgebra& L, const std::function<void(const Element&)>& fn) {
  const Field& f = L.field();
  if (!f.is_prime()) throw UnsupportedFieldError("element enumeration needs a prime field");
  const int n = L.n();
  if (n == 0) return;
  ProjectiveEnumerator reps(f.modulus(), n);
  std::vector<std::int64_t> coords;
  Element x(n, f.zero());
  for (std::uint64_t idx = 0; idx < reps.count(); ++idx) {
    reps.rep(idx, coords);
    for (int c = 0; c < n; ++c) x[c] = f.from_int(coords[c]);
    fn(x);
  }
}

// Projective representatives supported on one parity block.
void for_each_homogeneous_rep(const LieSuperAlgebra& L, Parity par,
                              const std::function<void(const Element&)>& fn) {
  const Field& f = L.field();
  if (!f.is_prime()) throw UnsupportedFieldError("element enumeration needs a prime field");
  int block = par == Parity::even ? L.dims().even : L.dims().odd;
  if (block == 0) return;
  int offset = par == Parity::even ? 0 : L.dims().even;
  ProjectiveEnumerator reps(f.modulus(), block);
  std::vector<std::int64_t> coords;
  for (std::uint64_t idx = 0; idx < reps.count(); ++idx) {
    reps.rep(idx, coords);
    Element x = L.zero_element();
    for (int c = 0; c < block; ++c) x[offset + c] = f.from_int(coords[c]);
    fn(x);
  }
}

}  // namespace

const std::vector<LawInfo>& law_registry() { return registry(); }

bool is_law_id(const std::string& id) {
  for (const auto& info : registry())
    if (info.id == id) return true;
  return false;
}

const LawInfo& law_info(const std::string& id) {
  for (const auto& info : registry())
    if (info.id == id) return info;
  throw PreconditionError("unknown law id: " + id);
}

LawContext::LawContext(LieSuperAlgebra L, int jobs) : L_(std::move(L)), jobs_(jobs) {}

const InvariantProfile& LawContext::profile() {
  if (!profile_) profile_ = invariant_profile(L_);
  return *profile_;
}

bool LawContext::nilpotent() {
  if (!nilpotent_) nilpotent_ = lower_central_series(L_).nilpotent;
  return *nilpotent_;
}

const OracleReport& LawContext::oracle() {
  if (!oracle_) {
    OracleOptions opt;
    opt.jobs = jobs_;
    opt.collect_maximizers = true;
    oracle_ = breadth_bruteforce(L_, opt);
  }
  return *oracle_;
}

const std::vector<Subspace>& LawContext::ideals() {
  if (!ideals_) {
    MaximalAbelianResult res = maximal_abelian_ideals(L_);
    std::vector<Subspace> spaces;
    for (auto& ideal : res.ideals) spaces.push_back(std::move(ideal.space));
    ideals_ = std::move(spaces);
    bA_.assign(ideals_->size(), std::nullopt);
  }
  return *ideals_;
}

void LawContext::ensure_ideal_breadths() {
  const std::vector<Subspace>& as = ideals();
  bool missing = false;
  for (const auto& slot : bA_) missing = missing || !slot;
  if (!missing) return;
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t jobs = jobs_ > 0 ? static_cast<std::size_t>(jobs_) : (hw ? hw : 1);
  jobs = std::min(jobs, as.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < as.size(); ++i)
      if (!bA_[i]) bA_[i] = ideal_breadth(L_, as[i]);
    return;
  }
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t)
    threads.emplace_back([this, &as, jobs, t]() {
      for (std::size_t i = t; i < as.size(); i += jobs)
        if (!bA_[i]) bA_[i] = ideal_breadth(L_, as[i]);
    });
  for (auto& th : threads) th.join();
}

const IdealBreadthReport& LawContext::ideal_breadth_of(std::size_t idx) {
  ideals();
  if (!bA_[idx]) ensure_ideal_breadths();
  return *bA_[idx];
}

const Subspace& LawContext::centralizer_of(std::size_t idx) {
  auto it = cent_.find(idx);
  if (it == cent_.end()) it = cent_.emplace(idx, centralizer(L_, ideals()[idx])).first;
  return it->second;
}

bool LawContext::centralizer_is_abelian(std::size_t idx) {
  auto it = cent_abelian_.find(idx);
  if (it == cent_abelian_.end())
    it = cent_abelian_.emplace(idx, is_abelian_subspace(L_, centralizer_of(idx))).first;
  return it->second;
}

bool LawContext::shared_restricted_kernel(std::size_t idx) {
  auto it = shared_kernel_.find(idx);
  if (it != shared_kernel_.end()) return it->second;
  const Subspace& A = ideals()[idx];
  const Subspace& C = centralizer_of(idx);
  bool shared = true;
  std::optional<Subspace> first;
  // Kernels of ad_x|_A are scaling-invariant, so representatives suffice.
  for_each_rep(L_, [&](const Element& x) {
    if (!shared || C.contains(x)) return;
    Subspace k = restricted_kernel(L_, A, x);
    if (!first)
      first = std::move(k);
    else if (!(k == *first))
      shared = false;
  });
  shared_kernel_[idx] = shared;
  return shared;
}

const std::vector<Element>& LawContext::t_a(std::size_t idx) {
  auto it = tA_.find(idx);
  if (it != tA_.end()) return it->second;
  const Subspace& A = ideals()[idx];
  std::vector<Element> out;
  for_each_rep(L_, [&](const Element& z) {
    if (element_ideal_breadth(L_, A, z).first == 1) out.push_back(z);
  });
  return tA_.emplace(idx, std::move(out)).first->second;
}

namespace {

// Shared shape for statements quantified over "a maximal abelian ideal A":
// evaluate the per-ideal hypothesis against every returned ideal and take the
// conjunction of conclusions; vacuous when nothing satisfied the hypotheses.
LawVerdict run_per_ideal(
    LawContext& ctx, bool global_hyp, std::vector<std::string> log,
    const std::function<bool(std::size_t, std::vector<std::string>&)>& ideal_hyp,
    const std::function<std::optional<std::string>(std::size_t)>& conclusion) {
  LawVerdict v;
  v.hypotheses_log = std::move(log);
  if (!global_hyp) {
    v.outcome = LawOutcome::vacuous;
    return v;
  }
  std::size_t satisfied = 0;
  for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
    if (!ideal_hyp(i, v.hypotheses_log)) continue;
    ++satisfied;
    if (auto failure = conclusion(i)) {
      v.outcome = LawOutcome::fails;
      v.witness = "A#" + std::to_string(i) + " = " +
                  format_subspace(ctx.algebra(), ctx.ideals()[i]) + ": " + *failure;
      return v;
    }
  }
  v.outcome = satisfied ? LawOutcome::holds : LawOutcome::vacuous;
  return v;
}

LawVerdict biconditional(std::vector<std::string> log, bool lhs, bool rhs,
                         const std::string& on_fail) {
  LawVerdict v;
  v.hypotheses_log = std::move(log);
  if (lhs == rhs) {
    v.outcome = LawOutcome::holds;
  } else {
    v.outcome = LawOutcome::fails;
    v.witness = on_fail;
  }
  return v;
}

// Structural He/Ho relation pattern: all nonzero brackets hit one basis
// vector z with coefficient one, indices pairwise disjoint, z unused.
// Returns the parity of z on a match.
std::optional<Parity> heisenberg_pattern(const LieSuperAlgebra& L) {
  const Field& f = L.field();
  struct Entry {
    int i, j, k;
  };
  std::vector<Entry> entries;
  for (int i = 0; i < L.n(); ++i)
    for (int j = i; j < L.n(); ++j) {
      int target = -1;
      for (int k = 0; k < L.n(); ++k) {
        const Value c = L.sc(i, j, k);
        if (f.is_zero(c)) continue;
        if (target != -1 || !f.is_one(c)) return std::nullopt;
        target = k;
      }
      if (target != -1) entries.push_back({i, j, target});
    }
  if (entries.empty()) return std::nullopt;
  const int z = entries.front().k;
  std::set<int> used;
  for (const Entry& e : entries) {
    if (e.k != z) return std::nullopt;
    if (!used.insert(e.i).second) return std::nullopt;
    if (e.j != e.i && !used.insert(e.j).second) return std::nullopt;
  }
  if (used.count(z)) return std::nullopt;
  const Parity pz = L.parity(z);
  for (const Entry& e : entries) {
    if (pz == Parity::even) {
      // He: even-even pairs and odd diagonals, all mapping to an even z.
      if (e.i == e.j) {
        if (L.parity(e.i) != Parity::odd) return std::nullopt;
      } else if (L.parity(e.i) != Parity::even || L.parity(e.j) != Parity::even) {
        return std::nullopt;
      }
    } else {
      // Ho: even-odd pairs mapping to an odd z, no diagonals.
      if (e.i == e.j) return std::nullopt;
      if (L.parity(e.i) != Parity::even || L.parity(e.j) != Parity::odd) return std::nullopt;
    }
  }
  return pz;
}

LawVerdict law_l2_abelian(LawContext& ctx) {
  bool lhs = ctx.algebra().is_abelian();
  bool rhs = ctx.oracle().total == 0;
  return biconditional({log_line("L abelian", lhs), log_line("b(L) total = 0", rhs)}, lhs, rhs,
                       lhs ? "abelian algebra with nonzero breadth"
                           : "breadth 0 with a nonzero bracket");
}

LawVerdict law_p2_breadth1(LawContext& ctx) {
  bool lhs = ctx.oracle().total == 1;
  bool rhs = ctx.profile().derived_dims.total() == 1;
  return biconditional(
      {log_line("b(L) total = 1", lhs), log_line("dim [L,L] total = 1", rhs)}, lhs, rhs,
      "breadth total " + std::to_string(ctx.oracle().total) + " vs derived " +
          to_string(ctx.profile().derived_dims));
}

LawVerdict law_t2_structure1(LawContext& ctx) {
  LawVerdict v;
  std::optional<Parity> pat = heisenberg_pattern(ctx.algebra());
  v.hypotheses_log.push_back(log_line("He/Ho bracket pattern", pat.has_value()));
  if (!pat) {
    v.outcome = LawOutcome::vacuous;
    return v;
  }
  GradedDim want = *pat == Parity::even ? GradedDim{1, 0} : GradedDim{0, 1};
  const OracleReport& o = ctx.oracle();
  bool ok = o.total == 1 && definite_pair(o) == want;
  v.outcome = ok ? LawOutcome::holds : LawOutcome::fails;
  if (!ok)
    v.witness = "pattern " + std::string(*pat == Parity::even ? "He" : "Ho") +
                " but oracle total=" + std::to_string(o.total) + " pairs=" + format_pairs(o.pairs);
  return v;
}

LawVerdict law_t2_centerbound(LawContext& ctx) {
  LawVerdict v;
  const OracleReport& o = ctx.oracle();
  const int n = o.total;
  v.hypotheses_log.push_back(log_line("b(L) total >= 1", n >= 1));
  if (n < 1) {
    v.outcome = LawOutcome::vacuous;
    return v;
  }
  const LieSuperAlgebra& L = ctx.algebra();
  const int quot = ctx.profile().quotient_center_dims.total();
  for (const Element& x : o.maximizers) {
    bool square_zero = is_zero_element(L.bracket(x, x), L.field());
    int bound = square_zero ? n + 1 : n;
    if (quot < bound) {
      v.outcome = LawOutcome::fails;
      v.witness = "maximizer " + format_element(L, x) + " with [x,x]" +
                  (square_zero ? "=0" : "!=0") + " but dim L/Z(L)=" + std::to_string(quot) +
                  " < " + std::to_string(bound);
      return v;
    }
  }
  v.outcome = LawOutcome::holds;
  return v;
}

LawVerdict law_l3_1(LawContext& ctx) {
  auto pair = definite_pair(ctx.oracle());
  bool hyp = pair && pair->even == 0 && pair->odd >= 2;
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=(0,r), r>=2", hyp)},
      [](std::size_t, std::vector<std::string>&) { return true; },
      [&](std::size_t i) -> std::optional<std::string> {
        if (ctx.centralizer_of(i) == ctx.ideals()[i]) return std::nullopt;
        return "C_L(A) = " + format_subspace(ctx.algebra(), ctx.centralizer_of(i)) + " != A";
      });
}

LawVerdict law_l3_2(LawContext& ctx) {
  auto pair = definite_pair(ctx.oracle());
  bool breadth_hyp = pair && pair->odd == 0 && pair->even >= 2;
  bool even_derived_zero = ctx.profile().derived_split[0] == 0;
  bool hyp = breadth_hyp && even_derived_zero;
  return run_per_ideal(
      ctx, hyp,
      {log_line("b(L)=(r,0), r>=2", breadth_hyp), log_line("[L0,L0]=0", even_derived_zero)},
      [](std::size_t, std::vector<std::string>&) { return true; },
      [&](std::size_t i) -> std::optional<std::string> {
        const LieSuperAlgebra& L = ctx.algebra();
        const Subspace& A = ctx.ideals()[i];
        std::optional<std::string> failure;
        for_each_homogeneous_rep(L, Parity::odd, [&](const Element& x) {
          if (failure || A.contains(x)) return;
          if (is_zero_element(L.bracket(x, x), L.field()))
            failure = "odd " + format_element(L, x) + " outside A has [x,x]=0";
        });
        return failure;
      });
}

LawVerdict law_l3_3(LawContext& ctx) {
  auto pair = definite_pair(ctx.oracle());
  bool hyp = pair && pair->even >= 1;
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=(r,s), r>=1", hyp)},
      [&](std::size_t i, std::vector<std::string>& log) {
        bool h = ctx.ideal_breadth_of(i).total == 0;
        log.push_back(log_line("A#" + std::to_string(i) + ": b_A(L)=(0,0)", h));
        return h;
      },
      [&](std::size_t) -> std::optional<std::string> {
        if (ctx.profile().derived_split[0] == 0) return std::nullopt;
        return "dim [L0,L0] = " + std::to_string(ctx.profile().derived_split[0]);
      });
}

LawVerdict law_p3_4(LawContext& ctx) {
  bool hyp = definite_pair(ctx.oracle()) == GradedDim{2, 0};
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=(2,0)", hyp)},
      [&](std::size_t i, std::vector<std::string>& log) {
        bool h = ctx.ideal_breadth_of(i).total == 0;
        log.push_back(log_line("A#" + std::to_string(i) + ": b_A(L)=(0,0)", h));
        return h;
      },
      [&](std::size_t) -> std::optional<std::string> {
        const InvariantProfile& p = ctx.profile();
        if (p.derived_dims == GradedDim{2, 0}) return std::nullopt;
        if (p.derived_dims == GradedDim{3, 0} && p.quotient_center_dims == GradedDim{0, 2})
          return std::nullopt;
        return "derived " + to_string(p.derived_dims) + ", L/Z " +
               to_string(p.quotient_center_dims);
      });
}

LawVerdict law_p3_5(LawContext& ctx) {
  bool hyp = definite_pair(ctx.oracle()) == GradedDim{0, 2};
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=(0,2)", hyp)},
      [](std::size_t, std::vector<std::string>&) { return true; },
      [&](std::size_t i) -> std::optional<std::string> {
        if (ctx.ideal_breadth_of(i).total != 0) return std::nullopt;
        return "maximal abelian ideal with b_A(L)=(0,0) exists";
      });
}

LawVerdict law_l3_6(LawContext& ctx) {
  LawVerdict v;
  bool hyp = definite_pair(ctx.oracle()) == GradedDim{1, 1};
  v.hypotheses_log.push_back(log_line("b(L)=(1,1)", hyp));
  if (!hyp) {
    v.outcome = LawOutcome::vacuous;
    return v;
  }
  for (const Element& x : ctx.oracle().maximizers) {
    auto [total, pair] = element_breadth(ctx.algebra(), x);
    if (total == 2 && pair == GradedDim{1, 1}) {
      v.outcome = LawOutcome::holds;
      return v;
    }
  }
  v.outcome = LawOutcome::fails;
  v.witness = "no maximizer attains element breadth (1,1)";
  return v;
}

LawVerdict law_p3_7(LawContext& ctx) {
  bool hyp = definite_pair(ctx.oracle()) == GradedDim{1, 1};
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=(1,1)", hyp)},
      [&](std::size_t i, std::vector<std::string>& log) {
        bool h = ctx.ideal_breadth_of(i).total == 0;
        log.push_back(log_line("A#" + std::to_string(i) + ": b_A(L)=(0,0)", h));
        return h;
      },
      [&](std::size_t) -> std::optional<std::string> {
        const InvariantProfile& p = ctx.profile();
        if (p.derived_dims == GradedDim{1, 1}) return std::nullopt;
        if (p.derived_dims == GradedDim{1, 2} && p.quotient_center_dims == GradedDim{1, 2} &&
            p.odd_square_vanishes)
          return std::nullopt;
        return "derived " + to_string(p.derived_dims) + ", L/Z " +
               to_string(p.quotient_center_dims) +
               (p.odd_square_vanishes ? ", odd squares vanish" : ", some [w,w]!=0");
      });
}

// Shared per-ideal hypothesis of the P3-8 family.
bool p38_ideal_hyp(LawContext& ctx, std::size_t i, std::vector<std::string>& log) {
  const IdealBreadthReport& b = ctx.ideal_breadth_of(i);
  bool total1 = b.total == 1 && definite_pair(b.total, b.pairs).has_value();
  log.push_back(log_line("A#" + std::to_string(i) + ": b_A(L) total 1", total1));
  if (!total1) return false;
  bool shared = ctx.shared_restricted_kernel(i);
  log.push_back(
      log_line("A#" + std::to_string(i) + ": shared ker ad|_A outside C_L(A)", shared));
  return shared;
}

LawVerdict law_p3_8i(LawContext& ctx) {
  return run_per_ideal(
      ctx, true, {},
      [&](std::size_t i, std::vector<std::string>& log) { return p38_ideal_hyp(ctx, i, log); },
      [&](std::size_t i) -> std::optional<std::string> {
        const LieSuperAlgebra& L = ctx.algebra();
        const Subspace& A = ctx.ideals()[i];
        const Subspace& Z = ctx.profile().center;
        GradedDim a_dims = graded_dims_or_throw(A, "maximal abelian ideal");
        GradedDim quo = a_dims - ctx.profile().center_dims;
        if (quo.total() != 1) return "dim A/Z(L) = " + to_string(quo) + ", total != 1";
        for (const Element& z : ctx.t_a(i)) {
          Subspace ca = restricted_kernel(L, A, z);  // C_A(z)
          if (!(ca == Z))
            return "C_A(" + format_element(L, z) + ") = " + format_subspace(L, ca) + " != Z(L)";
        }
        return std::nullopt;
      });
}

LawVerdict law_p3_8ii(LawContext& ctx) {
  return run_per_ideal(
      ctx, true, {},
      [&](std::size_t i, std::vector<std::string>& log) {
        if (!p38_ideal_hyp(ctx, i, log)) return false;
        bool ab = ctx.centralizer_is_abelian(i);
        log.push_back(log_line("A#" + std::to_string(i) + ": C_L(A) abelian", ab));
        return ab;
      },
      [&](std::size_t i) -> std::optional<std::string> {
        const LieSuperAlgebra& L = ctx.algebra();
        for (const Element& z : ctx.t_a(i)) {
          int want = L.n() + 1 - element_breadth(L, z).first;
          int got = static_cast<int>(m_space(L, ctx.ideals()[i], z).dim());
          if (got != want)
            return "dim M_z = " + std::to_string(got) + " != " + std::to_string(want) +
                   " for z = " + format_element(L, z);
        }
        return std::nullopt;
      });
}

LawVerdict law_p3_8iii(LawContext& ctx) {
  return run_per_ideal(
      ctx, true, {},
      [&](std::size_t i, std::vector<std::string>& log) {
        if (!p38_ideal_hyp(ctx, i, log)) return false;
        bool ab = ctx.centralizer_is_abelian(i);
        log.push_back(log_line("A#" + std::to_string(i) + ": C_L(A) non-abelian", !ab));
        return !ab;
      },
      [&](std::size_t i) -> std::optional<std::string> {
        const LieSuperAlgebra& L = ctx.algebra();
        for (const Element& z : ctx.t_a(i)) {
          int bound = L.n() - element_breadth(L, z).first;
          int got = static_cast<int>(m_space(L, ctx.ideals()[i], z).dim());
          if (got <= bound)
            return "dim M_z = " + std::to_string(got) + " <= " + std::to_string(bound) +
                   " for z = " + format_element(L, z);
        }
        return std::nullopt;
      });
}

LawVerdict law_p3_9(LawContext& ctx, GradedDim global_pair, GradedDim derived_want,
                    bool bA_pair_exact) {
  bool hyp = definite_pair(ctx.oracle()) == global_pair;
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=" + to_string(global_pair), hyp)},
      [&](std::size_t i, std::vector<std::string>& log) {
        const IdealBreadthReport& b = ctx.ideal_breadth_of(i);
        auto bp = definite_pair(b.total, b.pairs);
        bool b_ok =
            b.total == 1 && bp.has_value() && (!bA_pair_exact || *bp == GradedDim{1, 0});
        bool non_ab = !ctx.centralizer_is_abelian(i);
        bool codim1 = ctx.algebra().n() - static_cast<int>(ctx.centralizer_of(i).dim()) == 1;
        std::string tag = "A#" + std::to_string(i);
        log.push_back(
            log_line(tag + ": b_A total 1" + (bA_pair_exact ? " pair (1,0)" : ""), b_ok));
        log.push_back(log_line(tag + ": C_L(A) non-abelian", non_ab));
        log.push_back(log_line(tag + ": dim L/C_L(A) = 1", codim1));
        return b_ok && non_ab && codim1;
      },
      [&](std::size_t i) -> std::optional<std::string> {
        int dim_c = static_cast<int>(ctx.centralizer_of(i).dim());
        int dim_a = static_cast<int>(ctx.ideals()[i].dim());
        int quot_ca = dim_c - dim_a;
        if (quot_ca == 1) {
          int quot_la = ctx.algebra().n() - dim_a;
          if (quot_la != 2) return "dim C/A = 1 but dim L/A = " + std::to_string(quot_la);
          return std::nullopt;
        }
        if (quot_ca >= 2) {
          if (ctx.profile().derived_dims == derived_want) return std::nullopt;
          return "dim C/A = " + std::to_string(quot_ca) + " but derived " +
                 to_string(ctx.profile().derived_dims);
        }
        return std::nullopt;  // C = A cannot happen with a non-abelian centralizer
      });
}

LawVerdict law_p3_11(LawContext& ctx) {
  bool hyp = ctx.oracle().total == 2;
  return run_per_ideal(
      ctx, hyp, {log_line("b(L) total = 2", hyp)},
      [&](std::size_t i, std::vector<std::string>& log) {
        bool b1 = ctx.ideal_breadth_of(i).total == 1;
        bool codim2 = ctx.algebra().n() - static_cast<int>(ctx.centralizer_of(i).dim()) >= 2;
        std::string tag = "A#" + std::to_string(i);
        log.push_back(log_line(tag + ": b_A total 1", b1));
        log.push_back(log_line(tag + ": dim L/C_L(A) >= 2", codim2));
        return b1 && codim2;
      },
      [&](std::size_t) -> std::optional<std::string> {
        if (ctx.profile().derived_dims.total() == 2) return std::nullopt;
        return "derived total = " + std::to_string(ctx.profile().derived_dims.total());
      });
}

LawVerdict law_p3_12_14(LawContext& ctx, GradedDim global_pair, std::optional<GradedDim> bA_pair,
                        GradedDim derived_want) {
  bool hyp = definite_pair(ctx.oracle()) == global_pair;
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=" + to_string(global_pair), hyp)},
      [&](std::size_t i, std::vector<std::string>& log) {
        const IdealBreadthReport& b = ctx.ideal_breadth_of(i);
        auto bp = definite_pair(b.total, b.pairs);
        bool ok = b.total == 1 && bp.has_value() && (!bA_pair || *bp == *bA_pair);
        log.push_back(log_line("A#" + std::to_string(i) + ": b_A " +
                                   (bA_pair ? "= " + to_string(*bA_pair) : "total 1"),
                               ok));
        return ok;
      },
      [&](std::size_t i) -> std::optional<std::string> {
        const InvariantProfile& p = ctx.profile();
        int dim_a = static_cast<int>(ctx.ideals()[i].dim());
        int dim_z = static_cast<int>(p.center.dim());
        bool clause1 = dim_a - dim_z == 1 && p.quotient_center_dims.total() <= 3;
        bool clause2 = p.derived_dims == derived_want;
        if (clause1 || clause2) return std::nullopt;
        return "dim A/Z = " + std::to_string(dim_a - dim_z) +
               ", dim L/Z = " + std::to_string(p.quotient_center_dims.total()) + ", derived " +
               to_string(p.derived_dims);
      });
}

LawVerdict law_p3_13(LawContext& ctx) {
  bool hyp = definite_pair(ctx.oracle()) == GradedDim{0, 2};
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=(0,2)", hyp)},
      [&](std::size_t i, std::vector<std::string>& log) {
        const IdealBreadthReport& b = ctx.ideal_breadth_of(i);
        bool ok = b.total == 1 && definite_pair(b.total, b.pairs) == GradedDim{0, 1};
        log.push_back(log_line("A#" + std::to_string(i) + ": b_A=(0,1)", ok));
        return ok;
      },
      [&](std::size_t) -> std::optional<std::string> {
        if (ctx.profile().derived_dims == GradedDim{0, 2}) return std::nullopt;
        return "derived " + to_string(ctx.profile().derived_dims);
      });
}

LawVerdict law_l3_15_p3_16(LawContext& ctx, bool derived_version) {
  auto pair = definite_pair(ctx.oracle());
  bool hyp = pair && pair->total() == 2;
  return run_per_ideal(
      ctx, hyp, {log_line("b(L)=(r,s), r+s=2", hyp)},
      [&](std::size_t i, std::vector<std::string>& log) {
        const IdealBreadthReport& b = ctx.ideal_breadth_of(i);
        bool ok = b.total == 2 && definite_pair(b.total, b.pairs) == pair;
        log.push_back(log_line("A#" + std::to_string(i) + ": b_A(L) = b(L)", ok));
        return ok;
      },
      [&](std::size_t i) -> std::optional<std::string> {
        if (derived_version) {
          if (ctx.profile().derived_dims == *pair) return std::nullopt;
          return "derived " + to_string(ctx.profile().derived_dims) + " != " + to_string(*pair);
        }
        Subspace cl = bracket_with_algebra(ctx.algebra(), ctx.centralizer_of(i));
        GradedDim dims = graded_dims_or_throw(cl, "[C_L(A),L]");
        if (dims == *pair) return std::nullopt;
        return "dim [C_L(A),L] = " + to_string(dims) + " != " + to_string(*pair);
      });
}

LawVerdict law_t4(LawContext& ctx, GradedDim pair,
                  const std::function<bool(const InvariantProfile&)>& rhs_fn) {
  bool lhs = definite_pair(ctx.oracle()) == pair;
  bool rhs = rhs_fn(ctx.profile());
  return biconditional(
      {log_line("b(L)=" + to_string(pair), lhs), log_line("structural conditions", rhs)}, lhs,
      rhs,
      "oracle total=" + std::to_string(ctx.oracle().total) +
          " pairs=" + format_pairs(ctx.oracle().pairs) + "; derived " +
          to_string(ctx.profile().derived_dims) + ", L/Z " +
          to_string(ctx.profile().quotient_center_dims) +
          (ctx.profile().odd_square_vanishes ? ", odd squares vanish" : ", some [w,w]!=0"));
}

}  // namespace

LawVerdict check_law(LawContext& ctx, const std::string& id) {
  const LawInfo& info = law_info(id);
  if (info.needs_nilpotency && !ctx.nilpotent())
    throw PreconditionError("law " + id + " assumes a nilpotent algebra");

  if (id == "L2-abelian") return law_l2_abelian(ctx);
  if (id == "P2-breadth1") return law_p2_breadth1(ctx);
  if (id == "T2-structure1") return law_t2_structure1(ctx);
  if (id == "T2-centerbound") return law_t2_centerbound(ctx);
  if (id == "L3-1") return law_l3_1(ctx);
  if (id == "L3-2") return law_l3_2(ctx);
  if (id == "L3-3") return law_l3_3(ctx);
  if (id == "P3-4") return law_p3_4(ctx);
  if (id == "P3-5") return law_p3_5(ctx);
  if (id == "L3-6") return law_l3_6(ctx);
  if (id == "P3-7") return law_p3_7(ctx);
  if (id == "P3-8i") return law_p3_8i(ctx);
  if (id == "P3-8ii") return law_p3_8ii(ctx);
  if (id == "P3-8iii") return law_p3_8iii(ctx);
  if (id == "P3-9i/ii") return law_p3_9(ctx, {2, 0}, {2, 0}, true);
  if (id == "P3-10i/ii") return law_p3_9(ctx, {1, 1}, {1, 1}, false);
  if (id == "P3-11") return law_p3_11(ctx);
  if (id == "P3-12") return law_p3_12_14(ctx, {2, 0}, GradedDim{1, 0}, {2, 0});
  if (id == "P3-13") return law_p3_13(ctx);
  if (id == "P3-14") return law_p3_12_14(ctx, {1, 1}, std::nullopt, {1, 1});
  if (id == "L3-15") return law_l3_15_p3_16(ctx, false);
  if (id == "P3-16") return law_l3_15_p3_16(ctx, true);
  if (id == "T4-M1")
    return law_t4(ctx, {2, 0}, [](const InvariantProfile& p) {
      return p.derived_dims == GradedDim{2, 0} ||
             (p.derived_dims == GradedDim{3, 0} &&
              (p.quotient_center_dims == GradedDim{0, 2} ||
               p.quotient_center_dims == GradedDim{3, 0}));
    });
  if (id == "T4-M2")
    return law_t4(ctx, {0, 2},
                  [](const InvariantProfile& p) { return p.derived_dims == GradedDim{0, 2}; });
  if (id == "T4-M3")
    return law_t4(ctx, {1, 1}, [](const InvariantProfile& p) {
      return p.derived_dims == GradedDim{1, 1} ||
             (p.derived_dims == GradedDim{1, 2} && p.quotient_center_dims == GradedDim{1, 2} &&
              p.odd_square_vanishes);
    });
  throw PreconditionError("unknown law id: " + id);
}

LawVerdict check_law(const LieSuperAlgebra& L, const std::string& id) {
  LawContext ctx(L);
  return check_law(ctx, id);
}

void VacuityTally::record(const std::string& id, const LawVerdict& v) {
  ++evaluated[id];
  if (v.outcome != LawOutcome::vacuous) ++satisfied[id];
}

std::vector<std::string> VacuityTally::untested() const {
  std::vector<std::string> out;
  for (const auto& [id, count] : evaluated) {
    auto it = satisfied.find(id);
    if (it == satisfied.end() || it->second == 0) out.push_back(id);
  }
  return out;
}

}  // namespace lsb
