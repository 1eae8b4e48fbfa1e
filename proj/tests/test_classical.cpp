#include <doctest.h>

#include "liestab/classical.hpp"
#include "liestab/stabilizer.hpp"

using namespace liestab;

namespace {

LieSubalgebra build(const char* spec, const char* field) {
  return build_classical(ClassicalSpec::parse(spec), FieldSpec::parse(field));
}

}  // namespace

TEST_CASE("spec parsing") {
  CHECK(ClassicalSpec::parse("gl(3)").family == ClassicalSpec::Family::GL);
  CHECK(ClassicalSpec::parse("o(1,2,1)").diagonal.size() == 3);
  CHECK(ClassicalSpec::parse("sp(6)").n == 6);
  CHECK(ClassicalSpec::parse("witt(2)").n == 2);
  CHECK_THROWS_AS(ClassicalSpec::parse("foo(3)"), SyntaxError);
  CHECK_THROWS_AS(ClassicalSpec::parse("gl(x)"), SyntaxError);
  CHECK_THROWS_AS(ClassicalSpec::parse("sp(5)"), BadSpecError);
  CHECK_THROWS_AS(ClassicalSpec::parse("gl"), SyntaxError);
  CHECK(ClassicalSpec::parse("o(1,2)").to_string() == "o(1,2)");
}

TEST_CASE("dimensions") {
  CHECK(build("gl(3)", "QQ").dim() == 9);
  CHECK(build("gl(3)", "GF(2)").dim() == 9);
  CHECK(build("sl(3)", "GF(7)").dim() == 8);
  CHECK(build("scalar(4)", "QQ").dim() == 1);

  CHECK(build("o(1,1,1)", "GF(2)").dim() == 6);   // n(n+1)/2 in characteristic 2
  CHECK(build("o(1,1,1)", "QQ").dim() == 3);      // n(n-1)/2 otherwise
  CHECK(build("o(1,2)", "GF(5)").dim() == 1);

  CHECK(build("sp(6)", "GF(2)").dim() == 21);
  CHECK(build("sp(6)", "QQ").dim() == 21);
  CHECK(build("sp1(6)", "GF(2)").dim() == 15);
  CHECK(build("sp2(6)", "GF(2)").dim() == 14);

  CHECK(build("witt(1)", "GF(3)").dim() == 3);    // n p^n
  CHECK(build("witt(2)", "GF(2)").dim() == 8);
  CHECK(build("witt(1)", "GF(2)").dim() == 2);
}

TEST_CASE("bad specs") {
  CHECK_THROWS_AS(build("witt(1)", "QQ"), BadSpecError);
  CHECK_THROWS_AS(build("sp1(4)", "QQ"), BadSpecError);
  CHECK_THROWS_AS(build("sp2(4)", "GF(3)"), BadSpecError);
  CHECK_THROWS_AS(build("o(0,1)", "QQ"), BadSpecError);
}

TEST_CASE("constructors agree with the kernel computation") {
  // o(D) equals stab(diag(D)) and sp_2n equals stab(Pi_2n), computed
  // independently as kernels of the flattened operator.
  for (const char* field : {"GF(2)", "GF(5)", "QQ"}) {
    FieldSpec f = FieldSpec::parse(field);
    ExactMatrix D(3, 3, f);
    D.at(0, 0) = Scalar::one(f);
    D.at(1, 1) = Scalar::from_int(f, field[3] == '2' ? 1 : 2);
    D.at(2, 2) = Scalar::one(f);
    ClassicalSpec spec{};
    spec.family = ClassicalSpec::Family::ODiag;
    spec.n = 3;
    for (std::size_t i = 0; i < 3; ++i) spec.diagonal.push_back(D.at(i, i).to_string());
    CHECK(build_classical(spec, f).span() == stab(D).span());

    ExactMatrix pi(4, 4, f);
    for (std::size_t i = 0; i < 2; ++i) {
      pi.at(i, 2 + i) = Scalar::one(f);
      pi.at(2 + i, i) = -Scalar::one(f);
    }
    CHECK(build("sp(4)", field).span() == stab(pi).span());
  }
}

TEST_CASE("symplectic derived constructors match recomputation (characteristic 2)") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::string s = std::to_string(2 * n);
    LieSubalgebra sp = build(("sp(" + s + ")").c_str(), "GF(2)");
    LieSubalgebra sp1 = build(("sp1(" + s + ")").c_str(), "GF(2)");
    LieSubalgebra sp2 = build(("sp2(" + s + ")").c_str(), "GF(2)");
    CHECK(sp.derived().span() == sp1.span());
    CHECK(sp.derived().derived().span() == sp2.span());
  }
}

TEST_CASE("symplectic is perfect away from characteristic 2") {
  for (const char* field : {"GF(3)", "GF(7)", "QQ"}) {
    CHECK(build("sp(4)", field).is_perfect());
    CHECK(center(build("sp(4)", FieldSpec::parse(field).to_string().c_str())).dim() == 0);
  }
}

TEST_CASE("witt algebras") {
  // Oracle: count derivations of k[t]/(t^3) over GF(3) by enumerating all
  // 3^9 linear endomorphisms and checking the Leibniz rule on basis pairs.
  FieldSpec f3 = FieldSpec::prime_field(3);
  FiniteAlgebra a = FiniteAlgebra::truncated_polynomial(1, f3);
  REQUIRE(a.dim() == 3);
  long count = 0;
  std::size_t q = 3;
  std::vector<std::int64_t> entries(q * q, 0);
  auto product = [&](std::size_t i, std::size_t j, const std::vector<std::int64_t>& dmat,
                     std::vector<std::int64_t>& out) {
    // out_m = sum_l c(i,j,l) D_{m,l} - sum_u c(u,j,m) D_{u,i} - sum_v c(i,v,m) D_{v,j}
    for (std::size_t mth = 0; mth < q; ++mth) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < q; ++l)
        acc += a.c(i, j, l).residue() * dmat[mth * q + l];
      for (std::size_t u = 0; u < q; ++u) acc -= a.c(u, j, mth).residue() * dmat[u * q + i];
      for (std::size_t v = 0; v < q; ++v) acc -= a.c(i, v, mth).residue() * dmat[v * q + j];
      out[mth] = ((acc % 3) + 3) % 3;
    }
  };
  std::vector<std::int64_t> out(q);
  for (long code = 0; code < 19683; ++code) {  // 3^9 endomorphisms
    long c = code;
    for (auto& e : entries) {
      e = c % 3;
      c /= 3;
    }
    bool leibniz = true;
    for (std::size_t i = 0; i < q && leibniz; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        product(i, j, entries, out);
        for (std::size_t mth = 0; mth < q; ++mth)
          if (out[mth] != 0) {
            leibniz = false;
            break;
          }
        if (!leibniz) break;
      }
    }
    if (leibniz) ++count;
  }
  CHECK(count == 27);  // 3^3 elements, so the derivation algebra is 3-dimensional

  LieSubalgebra w13 = build("witt(1)", "GF(3)");
  CHECK(w13.dim() == 3);
  CHECK(w13.is_perfect());

  LieSubalgebra w12 = build("witt(1)", "GF(2)");
  CHECK(w12.dim() == 2);
  CHECK(w12.is_solvable());

  LieSubalgebra w22 = build("witt(2)", "GF(2)");
  CHECK(w22.dim() == 8);
  // Rank 2 is past the one exceptional case, so the simplicity proxies hold.
  CHECK(w22.is_perfect());
  CHECK(center(w22).dim() == 0);
}
