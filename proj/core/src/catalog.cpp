#include "lsb/catalog.hpp"

#include <random>
#include <set>

namespace lsb {

namespace {

std::vector<Value> unit(const Field& f, int n, int k) {
  std::vector<Value> v(n, f.zero());
  v[k] = f.one();
  return v;
}

std::string unique_name(std::set<std::string>& used, std::string base) {
  if (!used.count(base)) {
    used.insert(base);
    return base;
  }
  for (int suffix = 2;; ++suffix) {
    std::string cand = base + "_" + std::to_string(suffix);
    if (!used.count(cand)) {
      used.insert(cand);
      return cand;
    }
  }
}

}  // namespace

LieSuperAlgebra abelian(Field f, GradedDim dims) {
  if (dims.even < 0 || dims.odd < 0) throw PreconditionError("negative dimensions");
  return LieSuperAlgebra::from_tensor(StructureTensor(f, dims));
}

LieSuperAlgebra heisenberg_even(Field f, int m, int n, int k0, int k1) {
  if (m < 0 || n < 0 || k0 < 0 || k1 < 0 || m + n < 1)
    throw PreconditionError("He needs m,n,k0,k1 >= 0 and m+n >= 1");
  GradedDim dims{2 * m + 1 + k0, n + k1};
  StructureTensor t(f, dims);
  const int z = 2 * m;
  for (int i = 0; i < m; ++i) t.set_bracket(i, i + m, unit(f, dims.total(), z));
  for (int j = 0; j < n; ++j) {
    int yj = dims.even + j;
    t.set_bracket(yj, yj, unit(f, dims.total(), z));
  }
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * m; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("z");
  for (int i = 2 * m + 1; i <= 2 * m + k0; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= n + k1; ++j) names.push_back("y" + std::to_string(j));
  return LieSuperAlgebra::from_tensor(t, std::move(names));
}

LieSuperAlgebra heisenberg_odd(Field f, int m, int k0, int k1) {
  if (m < 1 || k0 < 0 || k1 < 0) throw PreconditionError("Ho needs m >= 1 and k0,k1 >= 0");
  GradedDim dims{m + k0, m + 1 + k1};
  StructureTensor t(f, dims);
  const int z = dims.even + m;
  for (int i = 0; i < m; ++i) t.set_bracket(i, dims.even + i, unit(f, dims.total(), z));
  std::vector<std::string> names;
  for (int i = 1; i <= m + k0; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
  names.push_back("z");
  for (int j = m + 1; j <= m + k1; ++j) names.push_back("y" + std::to_string(j));
  return LieSuperAlgebra::from_tensor(t, std::move(names));
}

LieSuperAlgebra witness_b1(Field f) {
  CocycleSpec spec{{0, 2}, {2, 0}, {}};
  spec.entries[{0, 0}] = unit(f, 2, 0);  // [a,a] = z1
  spec.entries[{0, 1}] = unit(f, 2, 1);  // [a,x] = z2
  return central_extension(f, spec, {"a", "x"}, {"z1", "z2"});
}

LieSuperAlgebra witness_b2(Field f) {
  CocycleSpec spec{{0, 2}, {3, 0}, {}};
  spec.entries[{0, 0}] = unit(f, 3, 0);  // [a,a] = z1
  spec.entries[{0, 1}] = unit(f, 3, 1);  // [a,x] = z2
  spec.entries[{1, 1}] = unit(f, 3, 2);  // [x,x] = z3
  return central_extension(f, spec, {"a", "x"}, {"z1", "z2", "z3"});
}

LieSuperAlgebra witness_b3(Field f) {
  CocycleSpec spec{{3, 0}, {3, 0}, {}};
  spec.entries[{0, 1}] = unit(f, 3, 0);
  spec.entries[{0, 2}] = unit(f, 3, 1);
  spec.entries[{1, 2}] = unit(f, 3, 2);
  return central_extension(f, spec, {"e1", "e2", "e3"}, {"z12", "z13", "z23"});
}

LieSuperAlgebra witness_b4(Field f) {
  CocycleSpec spec{{1, 2}, {0, 2}, {}};
  spec.entries[{0, 1}] = unit(f, 2, 0);  // [e,f1] = w1
  spec.entries[{0, 2}] = unit(f, 2, 1);  // [e,f2] = w2
  return central_extension(f, spec, {"e", "f1", "f2"}, {"w1", "w2"});
}

LieSuperAlgebra witness_b5(Field f) {
  CocycleSpec spec{{1, 1}, {1, 1}, {}};
  spec.entries[{0, 1}] = unit(f, 2, 1);  // [e,f] = w
  spec.entries[{1, 1}] = unit(f, 2, 0);  // [f,f] = z
  return central_extension(f, spec, {"e", "f"}, {"z", "w"});
}

LieSuperAlgebra catalog_build(Field f, const std::string& name, const CatalogParams& p) {
  if (name == "A") return abelian(f, {p.m, p.n});
  if (name == "He") return heisenberg_even(f, p.m, p.n, p.k0, p.k1);
  if (name == "Ho") return heisenberg_odd(f, p.m, p.k0, p.k1);
  if (name == "B1") return witness_b1(f);
  if (name == "B2") return witness_b2(f);
  if (name == "B3") return witness_b3(f);
  if (name == "B4") return witness_b4(f);
  if (name == "B5") return witness_b5(f);
  throw PreconditionError("unknown catalog family: " + name);
}

LieSuperAlgebra direct_sum(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
  if (!(a.field() == b.field())) throw PreconditionError("direct sum needs a common field");
  const Field& f = a.field();
  GradedDim dims = a.dims() + b.dims();

  // Global index of a-local / b-local basis vectors in the combined grading.
  auto a_index = [&](int i) {
    return i < a.dims().even ? i : dims.even + (i - a.dims().even);
  };
  auto b_index = [&](int i) {
    return i < b.dims().even ? a.dims().even + i : dims.even + a.dims().odd + (i - b.dims().even);
  };

  StructureTensor t(f, dims);
  auto copy_block = [&](const LieSuperAlgebra& src, auto&& index) {
    for (int i = 0; i < src.n(); ++i)
      for (int j = i; j < src.n(); ++j) {
        std::vector<Value> row(dims.total(), f.zero());
        bool nonzero = false;
        for (int k = 0; k < src.n(); ++k) {
          Value v = src.sc(i, j, k);
          if (!f.is_zero(v)) {
            row[index(k)] = v;
            nonzero = true;
          }
        }
        if (nonzero) t.set_bracket(index(i), index(j), row);
      }
  };
  copy_block(a, a_index);
  copy_block(b, b_index);

  std::set<std::string> used;
  std::vector<std::string> names(dims.total());
  for (int i = 0; i < a.n(); ++i) names[a_index(i)] = unique_name(used, a.names()[i]);
  for (int i = 0; i < b.n(); ++i) names[b_index(i)] = unique_name(used, b.names()[i]);
  return LieSuperAlgebra::from_tensor(t, std::move(names));
}

LieSuperAlgebra central_extension(Field f, const CocycleSpec& spec,
                                  std::vector<std::string> base_names,
                                  std::vector<std::string> center_names) {
  const GradedDim& base = spec.base;
  const GradedDim& center = spec.center;
  GradedDim dims = base + center;

  auto base_index = [&](int i) {
    return i < base.even ? i : dims.even + (i - base.even);
  };
  auto center_index = [&](int c) {
    return c < center.even ? base.even + c : dims.even + base.odd + (c - center.even);
  };

  StructureTensor t(f, dims);
  for (const auto& [pair, vals] : spec.entries) {
    auto [i, j] = pair;
    if (i < 0 || j < i || j >= base.total()) throw PreconditionError("cocycle pair out of range");
    if (static_cast<int>(vals.size()) != center.total())
      throw PreconditionError("cocycle value length != center dimension");
    if (i == j && base.parity(i) == Parity::even)
      throw PreconditionError("cocycle diagonal entries are only allowed for odd basis vectors");
    Parity pb = base.parity(i) + base.parity(j);
    std::vector<Value> row(dims.total(), f.zero());
    bool nonzero = false;
    for (int c = 0; c < center.total(); ++c) {
      if (f.is_zero(vals[c])) continue;
      if (center.parity(c) != pb)
        throw PreconditionError("cocycle value violates the grading");
      row[center_index(c)] = vals[c];
      nonzero = true;
    }
    if (nonzero) t.set_bracket(base_index(i), base_index(j), row);
  }

  if (base_names.empty()) {
    for (int i = 1; i <= base.even; ++i) base_names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= base.odd; ++i) base_names.push_back("y" + std::to_string(i));
  }
  if (center_names.empty()) {
    for (int i = 1; i <= center.even; ++i) center_names.push_back("z" + std::to_string(i));
    for (int i = 1; i <= center.odd; ++i) center_names.push_back("w" + std::to_string(i));
  }
  if (static_cast<int>(base_names.size()) != base.total() ||
      static_cast<int>(center_names.size()) != center.total())
    throw PreconditionError("central extension name count mismatch");

  std::vector<std::string> names(dims.total());
  for (int i = 0; i < base.total(); ++i) names[base_index(i)] = base_names[i];
  for (int c = 0; c < center.total(); ++c) names[center_index(c)] = center_names[c];
  return LieSuperAlgebra::from_tensor(t, std::move(names));
}

LieSuperAlgebra random_two_step(std::uint64_t seed, GradedDim base, GradedDim center, Field f) {
  if (!f.is_prime())
    throw UnsupportedFieldError("random generation needs a prime field");
  if ((base + center).total() > 8) throw PreconditionError("random generation caps total dims at 8");
  const std::int64_t p = f.modulus();
  std::mt19937_64 engine(seed);

  CocycleSpec spec{base, center, {}};
  for (int i = 0; i < base.total(); ++i)
    for (int j = i; j < base.total(); ++j) {
      if (i == j && base.parity(i) == Parity::even) continue;
      Parity pb = base.parity(i) + base.parity(j);
      std::vector<Value> vals(center.total(), f.zero());
      bool nonzero = false;
      for (int c = 0; c < center.total(); ++c) {
        if (center.parity(c) != pb) continue;
        std::int64_t coeff = static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(p));
        vals[c] = f.from_int(coeff);
        nonzero = nonzero || coeff != 0;
      }
      if (nonzero) spec.entries[{i, j}] = std::move(vals);
    }
  return central_extension(f, spec);
}

}  // namespace lsb
