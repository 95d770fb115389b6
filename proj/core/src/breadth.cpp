#include "lsb/breadth.hpp"

#include <algorithm>
#include <thread>

#include "lsb/enumerate.hpp"

namespace lsb {

Matrix ad_matrix(const LieSuperAlgebra& L, const Element& x) { return L.ad(x); }

namespace {

// (even,odd) projection dimensions of the column space of an ad matrix.
GradedDim image_pair(const LieSuperAlgebra& L, const Matrix& m) {
  const Field& f = L.field();
  Matrix top(f, L.dims().even, m.cols());
  Matrix bottom(f, L.dims().odd, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (int k = 0; k < L.dims().even; ++k) top.at(k, c) = m.at(k, c);
    for (int k = 0; k < L.dims().odd; ++k) bottom.at(k, c) = m.at(L.dims().even + k, c);
  }
  return {static_cast<int>(rank(top)), static_cast<int>(rank(bottom))};
}

struct ChunkResult {
  int max = 0;
  std::uint64_t first_index = 0;
  bool any = false;
  std::set<GradedDim> pairs;
  std::vector<Element> maximizers;
};

}  // namespace

std::pair<int, GradedDim> element_breadth(const LieSuperAlgebra& L, const Element& x) {
  Matrix m = L.ad(x);
  return {static_cast<int>(rank(m)), image_pair(L, m)};
}

OracleReport breadth_bruteforce(const LieSuperAlgebra& L, const OracleOptions& opt) {
  const Field& f = L.field();
  if (!f.is_prime())
    throw UnsupportedFieldError("the breadth oracle enumerates elements; prime fields only");
  const int n = L.n();
  if (n > 8) throw CapError("breadth oracle is capped at total dimension 8");
  if (n > 0) checked_pow(f.modulus(), n, opt.max_elements);

  OracleReport rep;
  rep.method = "oracle";
  rep.witness = L.zero_element();
  rep.pairs.insert(GradedDim{0, 0});
  rep.enumerated = 1;
  if (n == 0) {
    if (opt.collect_maximizers) rep.maximizers.push_back(L.zero_element());
    return rep;
  }

  const std::int64_t q = f.modulus();
  ProjectiveEnumerator reps(q, n);
  const std::uint64_t total_reps = reps.count();
  rep.enumerated += total_reps;

  unsigned hw = std::thread::hardware_concurrency();
  std::uint64_t jobs = opt.jobs > 0 ? static_cast<std::uint64_t>(opt.jobs) : (hw ? hw : 1);
  jobs = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, total_reps));

  std::vector<ChunkResult> results(jobs);
  auto worker = [&](std::uint64_t chunk) {
    std::uint64_t lo = total_reps * chunk / jobs;
    std::uint64_t hi = total_reps * (chunk + 1) / jobs;
    ChunkResult& out = results[chunk];
    std::vector<std::int64_t> coords;
    Element x(n, f.zero());
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      reps.rep(idx, coords);
      for (int c = 0; c < n; ++c) x[c] = f.from_int(coords[c]);
      Matrix m = L.ad(x);
      int total = static_cast<int>(rank(m));
      if (out.any && total < out.max) continue;
      GradedDim pair = image_pair(L, m);
      if (!out.any || total > out.max) {
        out.any = true;
        out.max = total;
        out.first_index = idx;
        out.pairs = {pair};
        out.maximizers.clear();
      } else {
        out.pairs.insert(pair);
      }
      if (opt.collect_maximizers) out.maximizers.push_back(x);
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t c = 0; c < jobs; ++c) threads.emplace_back(worker, c);
    for (auto& t : threads) t.join();
  }

  int global_max = 0;
  for (const auto& r : results) global_max = std::max(global_max, r.max);
  if (global_max == 0) {
    // Every element is central; keep the zero witness.
    if (opt.collect_maximizers) rep.maximizers.push_back(L.zero_element());
    return rep;
  }

  rep.total = global_max;
  rep.pairs.clear();
  bool witness_set = false;
  std::vector<std::int64_t> coords;
  for (const auto& r : results) {
    if (r.max != global_max || !r.any) continue;
    if (!witness_set) {
      reps.rep(r.first_index, coords);
      Element w(n, f.zero());
      for (int c = 0; c < n; ++c) w[c] = f.from_int(coords[c]);
      rep.witness = w;
      witness_set = true;
    }
    rep.pairs.insert(r.pairs.begin(), r.pairs.end());
    rep.maximizers.insert(rep.maximizers.end(), r.maximizers.begin(), r.maximizers.end());
  }
  return rep;
}

BreadthReport breadth_classify(const LieSuperAlgebra& L) {
  if (!lower_central_series(L).nilpotent)
    throw PreconditionError(
        "breadth classification applies to nilpotent algebras; input is not nilpotent");
  InvariantProfile p = invariant_profile(L);
  const GradedDim d = p.derived_dims;
  const GradedDim q = p.quotient_center_dims;

  BreadthReport r;
  r.method = "classifier";
  auto definite = [&](int total, GradedDim pair, const char* label) {
    r.total = total;
    r.pairs = {pair};
    r.classifier_case = label;
    return r;
  };
  if (d == GradedDim{0, 0}) return definite(0, {0, 0}, "l0");
  if (d.total() == 1) return definite(1, d, "pr1.1");
  if (d == GradedDim{2, 0}) return definite(2, {2, 0}, "M1(i)");
  if (d == GradedDim{0, 2}) return definite(2, {0, 2}, "M2");
  if (d == GradedDim{1, 1}) return definite(2, {1, 1}, "M3(i)");
  if (d == GradedDim{3, 0} && q == GradedDim{0, 2}) return definite(2, {2, 0}, "M1(ii)");
  if (d == GradedDim{3, 0} && q == GradedDim{3, 0}) return definite(2, {2, 0}, "M1(iii)");
  if (d == GradedDim{1, 2} && q == GradedDim{1, 2} && p.odd_square_vanishes) {
    definite(2, {1, 1}, "M3(ii)");
    r.caveat = "M3(ii)-caveat";
    return r;
  }
  r.total = 3;
  r.at_least = true;
  r.classifier_case = "at-least-three";
  return r;
}

int homogeneous_breadth_bound(const LieSuperAlgebra& L) {
  const Field& f = L.field();
  if (!f.is_prime()) throw UnsupportedFieldError("homogeneous pre-pass needs a prime field");
  const std::int64_t q = f.modulus();
  int best = 0;
  for (Parity par : {Parity::even, Parity::odd}) {
    int block = par == Parity::even ? L.dims().even : L.dims().odd;
    if (block == 0) continue;
    ProjectiveEnumerator reps(q, block);
    std::vector<std::int64_t> coords;
    int offset = par == Parity::even ? 0 : L.dims().even;
    for (std::uint64_t idx = 0; idx < reps.count(); ++idx) {
      reps.rep(idx, coords);
      Element x = L.zero_element();
      for (int c = 0; c < block; ++c) x[offset + c] = f.from_int(coords[c]);
      best = std::max(best, static_cast<int>(rank(L.ad(x))));
    }
  }
  return best;
}

CrossCheckResult cross_check(const LieSuperAlgebra& L, const OracleOptions& opt) {
  CrossCheckResult out;
  out.classifier = breadth_classify(L);  // also enforces nilpotency
  out.oracle = breadth_bruteforce(L, opt);
  if (out.classifier.at_least) {
    out.agree = out.oracle.total >= out.classifier.total;
  } else {
    GradedDim pair = *out.classifier.pairs.begin();
    out.agree = out.oracle.total == out.classifier.total &&
                (out.oracle.total == 0 || out.oracle.pairs.count(pair) > 0);
  }
  if (!out.agree) {
    out.details = "oracle total=" + std::to_string(out.oracle.total) +
                  " pairs=" + format_pairs(out.oracle.pairs) +
                  "; classifier total=" + std::to_string(out.classifier.total) +
                  (out.classifier.at_least ? "+ (lower bound)" : "") +
                  " pairs=" + format_pairs(out.classifier.pairs) +
                  " case=" + out.classifier.classifier_case.value_or("?");
  }
  return out;
}

std::string format_pairs(const std::set<GradedDim>& pairs) {
  std::string out = "{";
  bool first = true;
  for (const GradedDim& p : pairs) {
    if (!first) out += ",";
    out += to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace lsb
