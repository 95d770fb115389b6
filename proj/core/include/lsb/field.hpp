#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "lsb/errors.hpp"

namespace lsb {

using Rat = mpq_class;

/// One field element: a residue in [0,p) for prime fields, or an exact
/// rational in lowest terms. Elements do not know their field; every
/// operation goes through the owning Field.
using Value = std::variant<std::int64_t, Rat>;

/// Exact ground field: F_p for an odd prime 3 <= p <= 97, or the rationals.
class Field {
 public:
  enum class Kind { prime, rationals };

  static Field prime(std::int64_t p);
  static Field rationals() { return Field(Kind::rationals, 0); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::int64_t modulus() const;

  Value zero() const;
  Value one() const;
  Value from_int(std::int64_t n) const;
  Value from_ratio(std::int64_t num, std::int64_t den) const;

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value inv(const Value& a) const;
  Value div(const Value& a, const Value& b) const;

  bool is_zero(const Value& v) const;
  bool is_one(const Value& v) const;
  std::string to_string(const Value& v) const;

  bool operator==(const Field& o) const = default;

 private:
  Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}

  std::int64_t red(std::int64_t n) const;  // reduce into [0,p)

  Kind kind_;
  std::int64_t p_;
};

/// Strict weak order on values of one field (used for canonical sets).
bool value_less(const Value& a, const Value& b);

std::string to_string(const Field& f);

}  // namespace lsb
