#include <doctest.h>

#include "liestab/random.hpp"
#include "liestab/stabilizer.hpp"

using namespace liestab;

namespace {

ExactMatrix parse_matrix(const FieldSpec& f, const std::vector<std::vector<const char*>>& rows) {
  std::vector<std::vector<Scalar>> parsed;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (const char* s : r) row.push_back(Scalar::parse(f, s));
    parsed.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(f, parsed);
}

// 0_m + diag(entries) and 0_m + Pi_2n.
ExactMatrix normal_gram_diag(const FieldSpec& f, std::size_t m, std::vector<std::int64_t> diag) {
  std::size_t d = m + diag.size();
  ExactMatrix M(d, d, f);
  for (std::size_t i = 0; i < diag.size(); ++i) M.at(m + i, m + i) = Scalar::from_int(f, diag[i]);
  return M;
}

ExactMatrix normal_gram_sympl(const FieldSpec& f, std::size_t m, std::size_t n) {
  std::size_t d = m + 2 * n;
  ExactMatrix M(d, d, f);
  for (std::size_t i = 0; i < n; ++i) {
    M.at(m + i, m + n + i) = Scalar::one(f);
    M.at(m + n + i, m + i) = -Scalar::one(f);
  }
  return M;
}

// Brute-force count of {X in gl_d(GF(2)) : X^T M + M X = 0}.
long count_stab_gf2(const ExactMatrix& M) {
  std::size_t d = M.rows();
  REQUIRE(d * d <= 16);
  const FieldSpec& f = M.field();
  long count = 0;
  for (long code = 0; code < (1L << (d * d)); ++code) {
    ExactMatrix X(d, d, f);
    for (std::size_t k = 0; k < d * d; ++k) {
      X.at(k / d, k % d) = Scalar::from_int(f, (code >> k) & 1);
    }
    if ((X.transpose() * M + M * X).is_zero()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("stab dimensions, frozen and enumerated") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(stab(ExactMatrix(3, 3, q)).dim() == 9);  // gl_3 for the zero form

  LieSubalgebra so3 = stab(ExactMatrix::identity(3, q));
  CHECK(so3.dim() == 3);
  for (std::size_t i = 0; i < so3.dim(); ++i) {
    ExactMatrix b = so3.basis_matrix(i);
    CHECK(b.transpose() == -b);
  }

  FieldSpec f2 = FieldSpec::prime_field(2);
  ExactMatrix m1 = normal_gram_diag(f2, 2, {1, 1, 1});
  CHECK(stab(m1).dim() == 16);  // 4 + 6 + 6

  ExactMatrix m2 = normal_gram_sympl(f2, 1, 1);
  LieSubalgebra o2 = stab(m2);
  CHECK(o2.dim() == 6);  // 1 + 2 + 3
  CHECK(count_stab_gf2(m2) == (1L << 6));

  // d = 2 enumeration for a non-normal symmetric matrix.
  ExactMatrix m3 = parse_matrix(f2, {{"1", "1"}, {"1", "0"}});
  CHECK(count_stab_gf2(m3) == (1L << stab(m3).dim()));
}

TEST_CASE("stab_bar and the weight functional") {
  FieldSpec f2 = FieldSpec::prime_field(2);

  // Diagonal type in characteristic 2: no codimension, weight is zero.
  StabilizerPair diag_pair = stab_bar(normal_gram_diag(f2, 2, {1, 1}));
  CHECK(diag_pair.codim == 0);
  CHECK(diag_pair.o.span() == diag_pair.obar.span());
  for (const auto& t : diag_pair.lambda) CHECK(t.is_zero());

  // Symplectic type in characteristic 2: codimension 1 with an explicit
  // block-diagonal witness of weight 1.
  ExactMatrix m = normal_gram_sympl(f2, 1, 1);
  StabilizerPair sympl_pair = stab_bar(m);
  CHECK(sympl_pair.codim == 1);
  ExactMatrix witness(3, 3, f2);
  witness.at(2, 2) = Scalar::one(f2);
  auto lw = lambda_of(witness, m);
  REQUIRE(lw.has_value());
  CHECK(lw->is_one());
  CHECK(sympl_pair.obar.contains(witness));
  CHECK(!sympl_pair.o.contains(witness));

  // Away from characteristic 2 the identity always has weight 2.
  FieldSpec q = FieldSpec::rationals();
  ExactMatrix d12 = parse_matrix(q, {{"1", "0"}, {"0", "2"}});
  StabilizerPair qpair = stab_bar(d12);
  CHECK(qpair.codim == 1);
  auto li = lambda_of(ExactMatrix::identity(2, q), d12);
  REQUIRE(li.has_value());
  CHECK(*li == Scalar::from_int(q, 2));

  // M = 0: no line to stabilize, obar = o = gl_d.
  StabilizerPair zero_pair = stab_bar(ExactMatrix(2, 2, q));
  CHECK(zero_pair.codim == 0);
  CHECK(zero_pair.obar.dim() == 4);
}

TEST_CASE("lambda vanishes on commutators") {
  for (const char* field : {"GF(2)", "GF(3)", "QQ"}) {
    FieldSpec f = FieldSpec::parse(field);
    ExactMatrix m = normal_gram_sympl(f, 1, 1);
    StabilizerPair pair = stab_bar(m);
    for (std::size_t i = 0; i < pair.obar.dim(); ++i) {
      for (std::size_t j = i + 1; j < pair.obar.dim(); ++j) {
        auto t = lambda_of(bracket(pair.obar.basis_matrix(i), pair.obar.basis_matrix(j)), m);
        REQUIRE(t.has_value());
        CHECK(t->is_zero());
      }
    }
  }
}

TEST_CASE("congruence equivariance and scaling invariance") {
  DetRng rng(99);
  for (const char* field : {"GF(2)", "GF(5)", "QQ"}) {
    FieldSpec f = FieldSpec::parse(field);
    for (int trial = 0; trial < 5; ++trial) {
      ExactMatrix m = rng.matrix(3, 3, f);
      ExactMatrix g = rng.invertible(3, f);
      LieSubalgebra o = stab(m);
      LieSubalgebra o2 = stab(congruence(m, g));
      std::vector<std::vector<Scalar>> moved;
      for (std::size_t i = 0; i < o.dim(); ++i) {
        moved.push_back(conjugate(o.basis_matrix(i), g).flatten());
      }
      CHECK(RowSpace::from_vectors(9, f, moved) == o2.span());

      Scalar c = rng.nonzero_scalar(f);
      CHECK(stab(m.scaled(c)).span() == o.span());
      StabilizerPair p1 = stab_bar(m);
      StabilizerPair p2 = stab_bar(m.scaled(c));
      CHECK(p1.obar.span() == p2.obar.span());
    }
  }
}

TEST_CASE("predictions: frozen decision-table cells") {
  FieldSpec f2 = FieldSpec::prime_field(2);
  FieldSpec q = FieldSpec::rationals();

  // Diagonal, characteristic 2, m = n = 3.
  FormClass fc = normal_form(BilinearForm(normal_gram_diag(f2, 3, {1, 1, 1})));
  StructurePrediction p = predict(fc, f2);
  CHECK(p.dim_o == 24);  // 9 + 9 + 6
  CHECK(p.dim_obar == 24);
  CHECK(p.codim == 0);
  CHECK(!p.solvable);
  CHECK(p.derived[0].dim == 20);  // 8 + 3 + 9
  CHECK(p.derived[1].dim == 20);
  CHECK(p.derived[2].dim == 20);
  CHECK(p.radical_dim == 11);  // scalar lines of both blocks plus the Hom block
  CHECK(p.ss_dim == 13);       // (9 - 1) + (6 - 1)

  // Symplectic, characteristic 2, m = n = 3: the 41, 40, 40 cell.
  FormClass fs = normal_form(BilinearForm(normal_gram_sympl(f2, 3, 3)));
  StructurePrediction ps = predict(fs, f2);
  CHECK(ps.dim_o == 48);  // 9 + 18 + 21
  CHECK(ps.dim_obar == 49);
  CHECK(ps.derived[0].dim == 41);
  CHECK(ps.derived[1].dim == 40);
  CHECK(ps.derived[2].dim == 40);
  CHECK(!ps.solvable);

  // Symplectic over the rationals with m = 1: first derived step is sp plus
  // its vector representation.
  FormClass fq = normal_form(BilinearForm(normal_gram_sympl(q, 1, 2)));
  StructurePrediction pq = predict(fq, q);
  CHECK(pq.derived[0].dim == 14);  // (2n^2 + n) + 2n with n = 2
  CHECK(pq.derived[1].dim == 14);
  CHECK(pq.codim == 1);
  REQUIRE(pq.radical_literal_dim.has_value());
  CHECK(*pq.radical_literal_dim == 3);  // 1 + mn, versus constructed 1 + 2mn = 5
  CHECK(pq.radical_dim == 5);

  // Small diagonal cells in characteristic 2 are solvable.
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t n = 1; n <= 2; ++n) {
      FormClass fsmall =
          normal_form(BilinearForm(normal_gram_diag(f2, m, std::vector<std::int64_t>(n, 1))));
      CHECK(predict(fsmall, f2).solvable);
    }
  }

  FormClass empty{FormKind::Zero, 0, 0, {}, ExactMatrix(0, 0, q), ExactMatrix(0, 0, q)};
  CHECK_THROWS_AS(predict(empty, q), UnsupportedError);
}

TEST_CASE("verify_structure passes on the worked examples") {
  FieldSpec q = FieldSpec::rationals();
  {
    // 0_1 + Pi_2 over the rationals: dims 6 and 7.
    ExactMatrix m = normal_gram_sympl(q, 1, 1);
    StabilizerPair pair = stab_bar(m);
    CHECK(pair.o.dim() == 6);
    CHECK(pair.obar.dim() == 7);
    StructureReport rpt = verify_structure(m);
    CHECK(rpt.all_passed());
  }
  {
    // 0_2 + I_2 over GF(3): dims 9 and 10, not solvable.
    FieldSpec f3 = FieldSpec::prime_field(3);
    ExactMatrix m = normal_gram_diag(f3, 2, {1, 1});
    StabilizerPair pair = stab_bar(m);
    CHECK(pair.o.dim() == 9);
    CHECK(pair.obar.dim() == 10);
    CHECK(!pair.o.is_solvable());
    CHECK(verify_structure(m).all_passed());
  }
  {
    // I_2 over GF(2): o = obar and solvable.
    FieldSpec f2 = FieldSpec::prime_field(2);
    ExactMatrix m = ExactMatrix::identity(2, f2);
    StabilizerPair pair = stab_bar(m);
    CHECK(pair.codim == 0);
    CHECK(pair.o.is_solvable());
    CHECK(verify_structure(m).all_passed());
  }
}

TEST_CASE("verify_structure on scrambled inputs") {
  DetRng rng(4242);
  for (const char* field : {"GF(2)", "GF(5)", "QQ"}) {
    FieldSpec f = FieldSpec::parse(field);
    ExactMatrix m = normal_gram_diag(f, 1, {1, 1});
    ExactMatrix g = rng.invertible(3, f);
    INFO(field);
    CHECK(verify_structure(congruence(m, g)).all_passed());

    ExactMatrix s = normal_gram_sympl(f, 1, 1);
    ExactMatrix h = rng.invertible(3, f);
    CHECK(verify_structure(congruence(s, h)).all_passed());
  }
}

TEST_CASE("exhaustive small-field dimension oracle") {
  // Every symmetric matrix over GF(2) and GF(3) in dimensions 2 and 3, and
  // every alternating one: the kernel dimension must match the block formula
  // m^2 + m n' + dim o(N) read off the computed congruence class.
  auto odiag_dim = [](std::size_t n, std::int64_t ch) {
    return ch == 2 ? n * (n + 1) / 2 : n * (n - 1) / 2;
  };
  auto sp_dim = [](std::size_t n) { return 2 * n * n + n; };

  for (std::int64_t p : {2, 3}) {
    FieldSpec f = FieldSpec::prime_field(p);
    for (std::size_t d = 2; d <= 3; ++d) {
      std::size_t pairs = d * (d + 1) / 2;
      long total = 1;
      for (std::size_t k = 0; k < pairs; ++k) total *= p;
      for (long code = 0; code < total; ++code) {
        ExactMatrix M(d, d, f);
        long c = code;
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = i; j < d; ++j) {
            Scalar v = Scalar::from_int(f, c % p);
            c /= p;
            M.at(i, j) = v;
            M.at(j, i) = v;
          }
        }
        FormClass fc = normal_form(BilinearForm(M));
        std::size_t expected;
        if (fc.kind == FormKind::Zero) {
          expected = d * d;
        } else if (fc.kind == FormKind::Diagonal) {
          std::size_t n = fc.diagonal.size();
          expected = fc.m * fc.m + fc.m * n + odiag_dim(n, p);
        } else {
          expected = fc.m * fc.m + fc.m * 2 * fc.n + sp_dim(fc.n);
        }
        CAPTURE(p);
        CAPTURE(code);
        CHECK(stab(M).dim() == expected);
      }
      // Alternating matrices: strictly upper entries free, diagonal zero.
      std::size_t strict = d * (d - 1) / 2;
      long stotal = 1;
      for (std::size_t k = 0; k < strict; ++k) stotal *= p;
      for (long code = 0; code < stotal; ++code) {
        ExactMatrix M(d, d, f);
        long c = code;
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = i + 1; j < d; ++j) {
            Scalar v = Scalar::from_int(f, c % p);
            c /= p;
            M.at(i, j) = v;
            M.at(j, i) = -v;
          }
        }
        FormClass fc = normal_form(BilinearForm(M));
        std::size_t expected = fc.kind == FormKind::Zero
                                   ? d * d
                                   : fc.m * fc.m + fc.m * 2 * fc.n + sp_dim(fc.n);
        CHECK(stab(M).dim() == expected);
      }
    }
  }
}

TEST_CASE("brute-force line stabilizer over GF(2)") {
  // Count {X : X^T M + M X in {0, M}} by enumeration; must equal 2^dim obar.
  FieldSpec f2 = FieldSpec::prime_field(2);
  std::vector<ExactMatrix> samples = {
      normal_gram_sympl(f2, 1, 1),
      normal_gram_diag(f2, 1, {1, 1}),
      parse_matrix(f2, {{"1", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}}),
  };
  for (const auto& M : samples) {
    std::size_t d = M.rows();
    long count = 0;
    for (long code = 0; code < (1L << (d * d)); ++code) {
      ExactMatrix X(d, d, f2);
      for (std::size_t k = 0; k < d * d; ++k) {
        X.at(k / d, k % d) = Scalar::from_int(f2, (code >> k) & 1);
      }
      ExactMatrix lhs = X.transpose() * M + M * X;
      if (lhs.is_zero() || lhs == M) ++count;
    }
    StabilizerPair pair = stab_bar(M);
    CHECK(count == (1L << pair.obar.dim()));
  }
}

TEST_CASE("verify_structure on an unclassifiable matrix") {
  FieldSpec q = FieldSpec::rationals();
  ExactMatrix m = parse_matrix(q, {{"1", "2"}, {"0", "1"}});
  StructureReport rpt = verify_structure(m);
  CHECK(rpt.all_passed());  // nothing checkable, raw dims only
  REQUIRE(rpt.rows.size() == 1);
  CHECK(rpt.rows[0].status == CheckStatus::Skipped);
}

TEST_CASE("zero-size form") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(verify_structure(ExactMatrix(0, 0, q)).all_passed());
}
