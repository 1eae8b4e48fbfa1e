#include <doctest.h>

#include <set>

#include "liestab/field.hpp"

using namespace liestab;

TEST_CASE("field spec parsing") {
  FieldSpec f2 = FieldSpec::parse("GF(2)");
  CHECK(f2.characteristic() == 2);
  CHECK(f2.is_prime_field());
  CHECK(f2.to_string() == "GF(2)");

  FieldSpec q = FieldSpec::parse("QQ");
  CHECK(q.characteristic() == 0);
  CHECK(q.is_rationals());

  CHECK_THROWS_AS(FieldSpec::parse("GF(6)"), NotPrimeError);
  CHECK_THROWS_AS(FieldSpec::parse("GF(1)"), SyntaxError);
  CHECK_THROWS_AS(FieldSpec::parse("GF(91)"), NotPrimeError);  // 7 * 13
  CHECK_THROWS_AS(FieldSpec::parse("GF(x)"), SyntaxError);
  CHECK_THROWS_AS(FieldSpec::parse("RR"), SyntaxError);
  CHECK_THROWS_AS(FieldSpec::parse("GF()"), SyntaxError);

  // Largest supported modulus is 2^31 - 1, which happens to be prime.
  CHECK(FieldSpec::parse("GF(2147483647)").characteristic() == 2147483647);
  CHECK_THROWS_AS(FieldSpec::parse("GF(4294967311)"), SyntaxError);
}

TEST_CASE("scalar parsing and canonical form") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar::parse(q, "5").to_string() == "5");
  CHECK(Scalar::parse(q, "-3/7").to_string() == "-3/7");
  CHECK(Scalar::parse(q, "4/6").to_string() == "2/3");
  CHECK(Scalar::parse(q, "-2/-4").to_string() == "1/2");
  CHECK(Scalar::parse(q, "0/17").to_string() == "0");
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), SyntaxError);
  CHECK_THROWS_AS(Scalar::parse(q, "a"), SyntaxError);
  CHECK_THROWS_AS(Scalar::parse(q, ""), SyntaxError);

  FieldSpec f7 = FieldSpec::prime_field(7);
  CHECK(Scalar::parse(f7, "10").to_string() == "3");
  CHECK(Scalar::parse(f7, "-1").to_string() == "6");
  CHECK(Scalar::parse(f7, "1/2").to_string() == "4");  // 2 * 4 = 8 = 1 mod 7
  CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), SingularError);
}

TEST_CASE("field axioms on fixed test sets") {
  auto elements = [](const FieldSpec& f) {
    std::vector<Scalar> out;
    if (f.is_prime_field()) {
      for (std::int64_t i = 0; i < f.characteristic(); ++i) out.push_back(Scalar::from_int(f, i));
    } else {
      for (const char* s : {"0", "1", "-1", "2", "1/2", "-3/7", "5/3"}) {
        out.push_back(Scalar::parse(f, s));
      }
    }
    return out;
  };
  for (const char* spec : {"GF(2)", "GF(5)", "GF(7)", "QQ"}) {
    FieldSpec f = FieldSpec::parse(spec);
    auto els = elements(f);
    Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    for (const auto& a : els) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a - a == zero);
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
      for (const auto& b : els) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : els) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("Fermat: a^p = a exhaustively for p <= 7") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    FieldSpec f = FieldSpec::prime_field(p);
    for (std::int64_t i = 0; i < p; ++i) {
      Scalar a = Scalar::from_int(f, i);
      CHECK(a.pow(p) == a);
    }
  }
}

TEST_CASE("is_square against exhaustive enumeration") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    FieldSpec f = FieldSpec::prime_field(p);
    // Oracle: the set of actual squares.
    std::set<std::int64_t> squares;
    for (std::int64_t b = 0; b < p; ++b) squares.insert(b * b % p);
    for (std::int64_t a = 0; a < p; ++a) {
      CHECK(is_square(Scalar::from_int(f, a)) == (squares.count(a) == 1));
    }
  }
  // Frozen values from the mod-7 enumeration: squares are {0, 1, 2, 4}.
  FieldSpec f7 = FieldSpec::prime_field(7);
  CHECK(is_square(Scalar::from_int(f7, 2)));
  CHECK(!is_square(Scalar::from_int(f7, 3)));
  CHECK(is_square(Scalar::zero(f7)));

  FieldSpec f2 = FieldSpec::prime_field(2);
  CHECK(is_square(Scalar::from_int(f2, 0)));
  CHECK(is_square(Scalar::from_int(f2, 1)));

  FieldSpec q = FieldSpec::rationals();
  CHECK(is_square(Scalar::parse(q, "4/9")));
  CHECK(is_square(Scalar::parse(q, "0")));
  CHECK(is_square(Scalar::parse(q, "16")));
  CHECK(!is_square(Scalar::parse(q, "-1")));
  CHECK(!is_square(Scalar::parse(q, "2")));
  CHECK(!is_square(Scalar::parse(q, "4/7")));
}

TEST_CASE("square classes multiply (odd p)") {
  for (std::int64_t p : {3, 5, 7, 11}) {
    FieldSpec f = FieldSpec::prime_field(p);
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        Scalar sa = Scalar::from_int(f, a), sb = Scalar::from_int(f, b);
        CHECK(is_square(sa * sb) == (is_square(sa) == is_square(sb)));
      }
    }
  }
}

TEST_CASE("exhaustive square roots") {
  FieldSpec f7 = FieldSpec::prime_field(7);
  Scalar two = Scalar::from_int(f7, 2);
  Scalar r = sqrt_exhaustive(two);
  CHECK(r * r == two);
  CHECK_THROWS_AS(sqrt_exhaustive(Scalar::from_int(f7, 3)), UnsupportedError);
  CHECK_THROWS_AS(sqrt_exhaustive(Scalar::parse(FieldSpec::rationals(), "4")), UnsupportedError);
}

TEST_CASE("arithmetic at the modulus cap") {
  // p = 2^31 - 1: products of residues stay below the int64 range.
  FieldSpec f = FieldSpec::prime_field(2147483647);
  Scalar big = Scalar::from_int(f, 2147483646);  // -1 mod p
  CHECK(big * big == Scalar::one(f));
  CHECK(big + Scalar::one(f) == Scalar::zero(f));
  CHECK(big.inverse() == big);
  CHECK((big * big.inverse()).is_one());
  CHECK(is_square(big * big));
  Scalar seven = Scalar::from_int(f, 7);
  CHECK(seven.pow(2147483646).is_one());  // Fermat at the cap
}

TEST_CASE("division by zero") {
  FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK_THROWS_AS(Scalar::one(f5) / Scalar::zero(f5), SingularError);
  CHECK_THROWS_AS(Scalar::zero(f5).inverse(), SingularError);
}

TEST_CASE("mixed-field arithmetic is rejected") {
  Scalar a = Scalar::one(FieldSpec::prime_field(5));
  Scalar b = Scalar::one(FieldSpec::prime_field(7));
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK(a != b);
}
