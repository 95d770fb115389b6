#include "lsb/search.hpp"

#include "lsb/enumerate.hpp"
#include "lsb/invariants.hpp"

namespace lsb {

namespace {

struct Slot {
  int i, j;                 // base-local pair, i <= j
  std::vector<int> coords;  // center-local coordinates this slot may hit
};

// Cocycle coefficient layout for one dimension split, in canonical order.
std::vector<Slot> slot_layout(const GradedDim& base, const GradedDim& center,
                              bool forbid_odd_odd) {
  std::vector<Slot> slots;
  for (int i = 0; i < base.total(); ++i)
    for (int j = i; j < base.total(); ++j) {
      if (i == j && base.parity(i) == Parity::even) continue;
      bool odd_odd = base.parity(i) == Parity::odd && base.parity(j) == Parity::odd;
      if (forbid_odd_odd && odd_odd) continue;
      Parity pb = base.parity(i) + base.parity(j);
      Slot s{i, j, {}};
      for (int c = 0; c < center.total(); ++c)
        if (center.parity(c) == pb) s.coords.push_back(c);
      if (!s.coords.empty()) slots.push_back(std::move(s));
    }
  return slots;
}

LieSuperAlgebra build_candidate(Field f, const GradedDim& base, const GradedDim& center,
                                const std::vector<Slot>& slots,
                                const std::vector<std::int64_t>& coeffs) {
  CocycleSpec spec{base, center, {}};
  std::size_t pos = 0;
  for (const Slot& s : slots) {
    std::vector<Value> vals(center.total(), f.zero());
    bool nonzero = false;
    for (int c : s.coords) {
      std::int64_t digit = coeffs[pos++];
      if (digit != 0) {
        vals[c] = f.from_int(digit);
        nonzero = true;
      }
    }
    if (nonzero) spec.entries[{s.i, s.j}] = std::move(vals);
  }
  return central_extension(f, spec);
}

bool matches(const InvariantProfile& p, const SearchConstraints& c) {
  if (p.derived_dims != c.derived) return false;
  if (p.quotient_center_dims != c.quotient) return false;
  if (c.odd_square && p.odd_square_vanishes != *c.odd_square) return false;
  return true;
}

}  // namespace

SearchOutcome inhabitation_search(Field f, const SearchConstraints& c) {
  if (!f.is_prime() || (f.modulus() != 3 && f.modulus() != 5))
    throw UnsupportedFieldError("inhabitation search runs over F_3 or F_5");
  if (c.max_total > 6) throw PreconditionError("inhabitation search caps total dims at 6");
  const std::int64_t q = f.modulus();

  SearchOutcome out;
  for (int be = 0; be <= c.max_total; ++be)
    for (int bo = 0; be + bo <= c.max_total; ++bo)
      for (int ce = 0; be + bo + ce <= c.max_total; ++ce)
        for (int co = 0; be + bo + ce + co <= c.max_total; ++co) {
          GradedDim base{be, bo}, center{ce, co};
          // The derived subalgebra of a 2-step extension lies in the center
          // block, and only base directions can act non-centrally.
          if (center.even < c.derived.even || center.odd < c.derived.odd) continue;
          if (base.even < c.quotient.even || base.odd < c.quotient.odd) continue;

          std::vector<Slot> slots = slot_layout(base, center, c.odd_square == true);
          int ncoeff = 0;
          for (const Slot& s : slots) ncoeff += static_cast<int>(s.coords.size());

          std::uint64_t reps_count = 0;
          if (ncoeff > 0) {
            ProjectiveEnumerator reps(q, ncoeff);
            reps_count = reps.count();
          }
          if (out.candidates + reps_count + 1 > c.cocycle_cap)
            throw CapError("inhabitation search cocycle cap exceeded");
          ++out.splits;

          // Zero cocycle first, then one representative per scalar class.
          std::vector<std::int64_t> coeffs(ncoeff, 0);
          ++out.candidates;
          LieSuperAlgebra cand = build_candidate(f, base, center, slots, coeffs);
          if (matches(invariant_profile(cand), c)) {
            out.witness_check = cross_check(cand);
            out.witness = std::move(cand);
            return out;
          }
          if (ncoeff == 0) continue;
          ProjectiveEnumerator reps(q, ncoeff);
          for (std::uint64_t idx = 0; idx < reps_count; ++idx) {
            reps.rep(idx, coeffs);
            ++out.candidates;
            LieSuperAlgebra candidate = build_candidate(f, base, center, slots, coeffs);
            if (matches(invariant_profile(candidate), c)) {
              out.witness_check = cross_check(candidate);
              out.witness = std::move(candidate);
              return out;
            }
          }
        }
  return out;
}

}  // namespace lsb
