#include "lsb/field.hpp"

namespace lsb {

namespace {

bool is_prime_small(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Extended Euclid inverse of a modulo p, a in [1,p).
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw FieldError("element has no inverse modulo " + std::to_string(p));
  return t < 0 ? t + p : t;
}

Rat make_rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw FieldError("zero denominator");
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p == 2) throw FieldError("characteristic 2 is not supported");
  if (p < 3 || p > 97 || !is_prime_small(p))
    throw FieldError("field modulus must be an odd prime in [3,97], got " + std::to_string(p));
  return Field(Kind::prime, p);
}

std::int64_t Field::modulus() const {
  if (!is_prime()) throw FieldError("rationals have no modulus");
  return p_;
}

std::int64_t Field::red(std::int64_t n) const {
  std::int64_t r = n % p_;
  return r < 0 ? r + p_ : r;
}

Value Field::zero() const { return is_prime() ? Value(std::int64_t{0}) : Value(Rat(0)); }

Value Field::one() const { return is_prime() ? Value(std::int64_t{1}) : Value(Rat(1)); }

Value Field::from_int(std::int64_t n) const {
  if (is_prime()) return red(n);
  return Rat(static_cast<long>(n));
}

Value Field::from_ratio(std::int64_t num, std::int64_t den) const {
  if (is_prime()) {
    if (red(den) == 0) throw FieldError("denominator divisible by " + std::to_string(p_));
    return red(num) * inv_mod(red(den), p_) % p_;
  }
  return make_rat(num, den);
}

Value Field::add(const Value& a, const Value& b) const {
  if (is_prime()) return (std::get<std::int64_t>(a) + std::get<std::int64_t>(b)) % p_;
  return Rat(std::get<Rat>(a) + std::get<Rat>(b));
}

Value Field::sub(const Value& a, const Value& b) const {
  if (is_prime()) return red(std::get<std::int64_t>(a) - std::get<std::int64_t>(b));
  return Rat(std::get<Rat>(a) - std::get<Rat>(b));
}

Value Field::mul(const Value& a, const Value& b) const {
  if (is_prime()) return (std::get<std::int64_t>(a) * std::get<std::int64_t>(b)) % p_;
  return Rat(std::get<Rat>(a) * std::get<Rat>(b));
}

Value Field::neg(const Value& a) const {
  if (is_prime()) return red(-std::get<std::int64_t>(a));
  return Rat(-std::get<Rat>(a));
}

Value Field::inv(const Value& a) const {
  if (is_prime()) {
    std::int64_t v = std::get<std::int64_t>(a);
    if (v == 0) throw FieldError("division by zero");
    return inv_mod(v, p_);
  }
  const Rat& q = std::get<Rat>(a);
  if (q == 0) throw FieldError("division by zero");
  return Rat(1 / q);
}

Value Field::div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Value& v) const {
  if (is_prime()) return std::get<std::int64_t>(v) == 0;
  return std::get<Rat>(v) == 0;
}

bool Field::is_one(const Value& v) const {
  if (is_prime()) return std::get<std::int64_t>(v) == 1;
  return std::get<Rat>(v) == 1;
}

std::string Field::to_string(const Value& v) const {
  if (is_prime()) return std::to_string(std::get<std::int64_t>(v));
  return std::get<Rat>(v).get_str();
}

bool value_less(const Value& a, const Value& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<std::int64_t>(a))
    return std::get<std::int64_t>(a) < std::get<std::int64_t>(b);
  return std::get<Rat>(a) < std::get<Rat>(b);
}

std::string to_string(const Field& f) {
  return f.is_prime() ? "F_" + std::to_string(f.modulus()) : "Q";
}

}  // namespace lsb
