#include "liestab/field.hpp"

#include <charconv>
#include <utility>

namespace liestab {

namespace {

constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

std::int64_t mod_floor(std::int64_t x, std::int64_t p) {
  std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid inverse of a mod p, a in [1, p).
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  // old_r == gcd(a, p) == 1 since p is prime and a != 0 mod p
  return mod_floor(old_s, p);
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
  if (p < 2 || p > kMaxModulus) {
    throw SyntaxError("field modulus out of supported range: " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw NotPrimeError("GF(" + std::to_string(p) + "): modulus is not prime");
  }
  FieldSpec f;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "QQ") return rationals();
  if (text.size() >= 5 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string_view digits = text.substr(3, text.size() - 4);
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
      return prime_field(p);
    }
  }
  throw SyntaxError("cannot parse field spec: \"" + std::string(text) + "\"");
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const FieldSpec& f) {
  return f.is_prime_field() ? Scalar(f, std::int64_t{0}) : Scalar(f, mpq_class(0));
}

Scalar Scalar::one(const FieldSpec& f) {
  return f.is_prime_field() ? Scalar(f, std::int64_t{1}) : Scalar(f, mpq_class(1));
}

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t n) {
  if (f.is_prime_field()) return Scalar(f, mod_floor(n, f.characteristic()));
  return Scalar(f, mpq_class(static_cast<long>(n)));
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  if (f.is_rationals()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(f, std::move(c));
  }
  std::int64_t p = f.characteristic();
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<long>(p));
  std::int64_t d = mpz_class(den % pz).get_si();
  if (mod_floor(d, p) == 0) {
    throw SingularError("denominator not invertible in " + f.to_string());
  }
  std::int64_t n = mpz_class(num % pz).get_si();
  return Scalar(f, mod_floor(mod_floor(n, p) * inv_mod(mod_floor(d, p), p), p));
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  std::string s(text);
  if (s.empty()) throw SyntaxError("empty scalar");
  std::size_t slash = s.find('/');
  try {
    mpq_class q;
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s), 1);
    } else {
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw SyntaxError("zero denominator in scalar: \"" + s + "\"");
      q = mpq_class(num, den);
    }
    q.canonicalize();
    return from_rational(f, q);
  } catch (const std::invalid_argument&) {
    throw SyntaxError("cannot parse scalar: \"" + s + "\"");
  }
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw FieldMismatchError("scalar fields differ: " + field_.to_string() + " vs " +
                             rhs.field_.to_string());
  }
}

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return std::get<std::int64_t>(value_) == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return std::get<std::int64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  check_same_field(rhs);
  if (field_.is_prime_field()) {
    std::int64_t p = field_.characteristic();
    return Scalar(field_, (std::get<std::int64_t>(value_) + std::get<std::int64_t>(rhs.value_)) % p);
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(rhs.value_)));
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  check_same_field(rhs);
  if (field_.is_prime_field()) {
    std::int64_t p = field_.characteristic();
    return Scalar(field_, mod_floor(std::get<std::int64_t>(value_) - std::get<std::int64_t>(rhs.value_), p));
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(rhs.value_)));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  check_same_field(rhs);
  if (field_.is_prime_field()) {
    std::int64_t p = field_.characteristic();
    return Scalar(field_, (std::get<std::int64_t>(value_) * std::get<std::int64_t>(rhs.value_)) % p);
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(rhs.value_)));
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_prime_field()) {
    std::int64_t p = field_.characteristic();
    return Scalar(field_, mod_floor(-std::get<std::int64_t>(value_), p));
  }
  return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SingularError("division by zero in " + field_.to_string());
  if (field_.is_prime_field()) {
    return Scalar(field_, inv_mod(std::get<std::int64_t>(value_), field_.characteristic()));
  }
  return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar acc = one(field_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (field_ != rhs.field_) return false;
  if (field_.is_prime_field()) {
    return std::get<std::int64_t>(value_) == std::get<std::int64_t>(rhs.value_);
  }
  return std::get<mpq_class>(value_) == std::get<mpq_class>(rhs.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(std::get<std::int64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

std::int64_t Scalar::residue() const { return std::get<std::int64_t>(value_); }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }

bool is_square(const Scalar& a) {
  const FieldSpec& f = a.field();
  if (a.is_zero()) return true;
  if (f.is_prime_field()) {
    std::int64_t p = f.characteristic();
    if (p == 2) return true;
    return a.pow((p - 1) / 2).is_one();  // Euler criterion
  }
  const mpq_class& q = a.rational();
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

Scalar sqrt_exhaustive(const Scalar& a) {
  const FieldSpec& f = a.field();
  if (!f.is_prime_field()) {
    throw UnsupportedError("exhaustive square root is only available over GF(p)");
  }
  for (std::int64_t b = 0; b < f.characteristic(); ++b) {
    Scalar cand = Scalar::from_int(f, b);
    if (cand * cand == a) return cand;
  }
  throw UnsupportedError(a.to_string() + " is not a square in " + f.to_string());
}

}  // namespace liestab
