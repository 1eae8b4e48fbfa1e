#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "liestab/errors.hpp"

namespace liestab {

/// Ground field: either GF(p) for a prime p, or the rationals.
///
/// Prime moduli are capped at 2^31 - 1 so that products of residues fit in
/// int64 without reduction tricks; rational arithmetic uses GMP and is
/// unbounded.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(std::int64_t p);

  // Accepts "GF(<decimal>)" or "QQ".
  static FieldSpec parse(std::string_view text);

  std::int64_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }
  bool is_rationals() const { return p_ == 0; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::int64_t p_ = 0;  // 0 means rationals
};

bool is_prime(std::int64_t n);

/// Exact field element in canonical form: residue in [0, p) over GF(p),
/// reduced fraction with positive denominator over the rationals.
/// Equality is representation equality.
class Scalar {
 public:
  Scalar() : Scalar(zero(FieldSpec::rationals())) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, std::int64_t n);
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);

  // Optional sign, decimal integer, optional "/<decimal>" denominator.
  // Over GF(p) a denominator must be invertible mod p.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;  // throws SingularError on /0
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

  Scalar inverse() const;  // throws SingularError on 0
  Scalar pow(std::int64_t e) const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

  // Residue in [0, p); only valid over a prime field.
  std::int64_t residue() const;
  // Only valid over the rationals.
  const mpq_class& rational() const;

 private:
  Scalar(FieldSpec f, std::int64_t r) : field_(f), value_(r) {}
  Scalar(FieldSpec f, mpq_class q) : field_(f), value_(std::move(q)) {}

  void check_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<std::int64_t, mpq_class> value_;
};

/// True iff a = b^2 for some b in the field.  Over GF(p), p odd, this is the
/// Euler criterion; over GF(2) every element is a square; over the rationals
/// a >= 0 with numerator and denominator both perfect integer squares.
bool is_square(const Scalar& a);

/// Exhaustive square root over GF(p); throws UnsupportedError over the
/// rationals or when no root exists.  Intended for small p only.
Scalar sqrt_exhaustive(const Scalar& a);

}  // namespace liestab
