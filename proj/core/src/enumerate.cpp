#include "lsb/enumerate.hpp"

namespace lsb {

ProjectiveEnumerator::ProjectiveEnumerator(std::int64_t p, int n) : p_(p), n_(n), count_(0) {
  // Block b covers leading position n-1-b and holds p^b representatives.
  std::uint64_t size = 1;
  for (int b = 0; b < n_; ++b) {
    block_size_.push_back(size);
    count_ += size;
    size *= static_cast<std::uint64_t>(p_);
  }
}

void ProjectiveEnumerator::rep(std::uint64_t index, std::vector<std::int64_t>& out) const {
  out.assign(n_, 0);
  int b = 0;
  while (index >= block_size_[b]) {
    index -= block_size_[b];
    ++b;
  }
  int lead = n_ - 1 - b;
  out[lead] = 1;
  // Suffix digits in base p, last coordinate least significant.
  for (int pos = n_ - 1; pos > lead; --pos) {
    out[pos] = static_cast<std::int64_t>(index % p_);
    index /= p_;
  }
}

bool next_tuple(std::vector<std::int64_t>& digits, std::int64_t q) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

std::uint64_t checked_pow(std::int64_t q, int n, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) {
    out *= static_cast<std::uint64_t>(q);
    if (out > cap) throw CapError("enumeration size exceeds cap");
  }
  return out;
}

}  // namespace lsb
