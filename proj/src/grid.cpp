#include "liestab/grid.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "liestab/classical.hpp"
#include "liestab/gradedalg.hpp"
#include "liestab/random.hpp"
#include "liestab/stabilizer.hpp"

namespace liestab {

namespace {

std::vector<Scalar> effective_pool(const FieldSpec& field, const std::vector<std::string>& pool) {
  std::vector<Scalar> out;
  for (const auto& s : pool) {
    Scalar v = Scalar::parse(field, s);
    if (!v.is_zero()) out.push_back(v);
  }
  return out;
}

struct CellSpec {
  FieldSpec field;
  bool diagonal;
  std::size_t m, n;
  std::uint64_t seed;
  std::vector<Scalar> pool;
  int der_max_dim;
};

std::string cell_key(const CellSpec& c) {
  return c.field.to_string() + "/" + (c.diagonal ? "diagonal" : "symplectic") + "/m" +
         std::to_string(c.m) + "/n" + std::to_string(c.n);
}

CellResult run_cell(const CellSpec& cell) {
  auto start = std::chrono::steady_clock::now();
  CellResult res;
  res.key = cell_key(cell);
  res.field = cell.field.to_string();
  res.kind = cell.diagonal ? "diagonal" : "symplectic";
  res.m = cell.m;
  res.n = cell.n;
  std::size_t np = cell.diagonal ? cell.n : 2 * cell.n;
  std::size_t d = cell.m + np;
  res.d = d;

  DetRng rng(cell.seed ^ fnv1a(res.key));

  ExactMatrix M(d, d, cell.field);
  if (cell.diagonal) {
    for (std::size_t i = 0; i < cell.n; ++i) {
      Scalar v = cell.pool[rng.next_below(cell.pool.size())];
      res.diag_entries.push_back(v.to_string());
      M.at(cell.m + i, cell.m + i) = v;
    }
  } else {
    for (std::size_t i = 0; i < cell.n; ++i) {
      M.at(cell.m + i, cell.m + cell.n + i) = Scalar::one(cell.field);
      M.at(cell.m + cell.n + i, cell.m + i) = -Scalar::one(cell.field);
    }
  }

  ExactMatrix g = rng.invertible(d, cell.field);
  ExactMatrix scrambled = congruence(M, g);

  StructureReport normal_rpt = verify_structure(M);
  normal_rpt.subject = "normal/" + normal_rpt.subject;
  res.reports.push_back(std::move(normal_rpt));

  StructureReport scrambled_rpt = verify_structure(scrambled);
  scrambled_rpt.subject = "scrambled/" + scrambled_rpt.subject;
  res.reports.push_back(std::move(scrambled_rpt));

  if (!M.is_zero() && d <= static_cast<std::size_t>(cell.der_max_dim)) {
    StructureReport der_normal = verify_der(M);
    der_normal.subject = "normal/" + der_normal.subject;
    res.reports.push_back(std::move(der_normal));
    StructureReport der_scrambled = verify_der(scrambled);
    der_scrambled.subject = "scrambled/" + der_scrambled.subject;
    res.reports.push_back(std::move(der_scrambled));
  }

  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::size_t thread_budget(const GridConfig& cfg) {
  if (!cfg.parallel) return 1;
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LIESTAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
  }
  return n;
}

}  // namespace

StructureReport classical_checks(const FieldSpec& field, const std::vector<std::string>& pool) {
  StructureReport rpt;
  rpt.subject = "classical algebras over " + field.to_string();
  std::int64_t ch = field.characteristic();
  bool char2 = ch == 2;

  std::vector<Scalar> pool_values = effective_pool(field, pool);
  if (pool_values.empty()) pool_values.push_back(Scalar::one(field));
  auto diag_entries = [&](std::size_t n) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(pool_values[i % pool_values.size()]);
    return out;
  };
  auto diag_strings = [&](std::size_t n) {
    std::vector<std::string> out;
    for (const auto& v : diag_entries(n)) out.push_back(v.to_string());
    return out;
  };

  auto dims_str = [](const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "]";
  };
  auto padded = [](const LieSubalgebra& g, std::size_t depth) {
    auto series = g.derived_series(depth);
    std::vector<std::size_t> dims;
    for (const auto& s : series) dims.push_back(s.dim());
    while (dims.size() < depth) dims.push_back(dims.empty() ? g.dim() : dims.back());
    return dims;
  };

  for (std::size_t n = 2; n <= 3; ++n) {
    LieSubalgebra gl = build_classical(ClassicalSpec::parse("gl(" + std::to_string(n) + ")"), field);
    LieSubalgebra sl = build_classical(ClassicalSpec::parse("sl(" + std::to_string(n) + ")"), field);
    rpt.add("gl(" + std::to_string(n) + ") dim", "gl_n has dimension n^2", std::to_string(n * n),
            std::to_string(gl.dim()), gl.dim() == n * n);
    rpt.add("sl(" + std::to_string(n) + ") dim", "sl_n has dimension n^2 - 1",
            std::to_string(n * n - 1), std::to_string(sl.dim()), sl.dim() == n * n - 1);
    bool derived_is_sl = gl.derived().span() == sl.span();
    rpt.add("gl(" + std::to_string(n) + ") derived", "the derived subalgebra of gl_n is sl_n",
            "gl' = sl", derived_is_sl ? "gl' = sl" : "gl' != sl", derived_is_sl);
    auto expect = series::gl_dims(n, ch, 4);
    std::vector<std::size_t> tail(expect.begin() + 1, expect.end());
    auto got = padded(gl, 3);
    rpt.add("gl(" + std::to_string(n) + ") series", "derived series dims match the table",
            dims_str(tail), dims_str(got), got == tail);
  }

  {
    ClassicalSpec spec{};
    spec.family = ClassicalSpec::Family::ODiag;
    spec.diagonal = diag_strings(3);
    spec.n = 3;
    LieSubalgebra oD = build_classical(spec, field);
    std::size_t expected_dim = char2 ? 6 : 3;
    rpt.add("o(D) n=3 dim", "dim o(D) is n(n+1)/2 in characteristic 2, else n(n-1)/2",
            std::to_string(expected_dim), std::to_string(oD.dim()), oD.dim() == expected_dim);
    auto expect = series::odiag_dims(3, ch, 4);
    std::vector<std::size_t> tail(expect.begin() + 1, expect.end());
    auto got = padded(oD, 3);
    rpt.add("o(D) n=3 series", "derived series dims match the table", dims_str(tail),
            dims_str(got), got == tail);

    if (char2) {
      // The derived subalgebra is the zero-diagonal part.
      std::vector<ExactMatrix> zero_diag;
      for (std::size_t i = 0; i < oD.dim(); ++i) {
        ExactMatrix b = oD.basis_matrix(i);
        bool zd = true;
        for (std::size_t k = 0; k < 3; ++k)
          if (!b.at(k, k).is_zero()) zd = false;
        if (zd) zero_diag.push_back(b);
      }
      LieSubalgebra zd = LieSubalgebra::from_basis(3, field, zero_diag);
      bool eq = oD.derived().span() == zd.span();
      rpt.add("o(D) derived = zero diagonal",
              "in characteristic 2, o(D)' consists of the zero-diagonal members", "equal spans",
              eq ? "equal spans" : "different spans", eq);

      SubspaceOfAlgebra z = center(oD);
      bool is_line = z.dim() == 1 && z.rows.contains(ExactMatrix::identity(3, field).flatten());
      rpt.add("Z(o(D)) n=3", "the center of o(D) is the scalar line in characteristic 2", "k*I",
              is_line ? "k*I" : "other center", is_line);
      bool rad_ok = is_ideal(oD, z) && !oD.is_solvable();
      rpt.add("o(D) scalar line radical", "the scalar line is a solvable ideal and o(D) is not "
              "solvable for n = 3",
              "solvable ideal, o(D) not solvable", rad_ok ? "verified" : "failed", rad_ok);
      if (is_line && rad_ok) {
        std::size_t zc = quotient(oD, z).center_dim();
        rpt.add("o(D)/k*I center", "the quotient of o(D) by its scalar line is centerless",
                "0", std::to_string(zc), zc == 0);
      }
    } else {
      SubspaceOfAlgebra z = center(oD);
      bool ok = z.dim() == 0 && oD.is_perfect();
      rpt.add("o(D) n=3 simple proxy", "o(D) is perfect and centerless for n = 3 away from "
              "characteristic 2",
              "perfect, centerless", ok ? "perfect, centerless" : "failed", ok);
    }

    // n = 2: one dimensional and abelian away from characteristic 2.
    ClassicalSpec spec2{};
    spec2.family = ClassicalSpec::Family::ODiag;
    spec2.diagonal = diag_strings(2);
    spec2.n = 2;
    LieSubalgebra oD2 = build_classical(spec2, field);
    std::size_t expected2 = char2 ? 3 : 1;
    bool small_ok = oD2.dim() == expected2 && (char2 ? oD2.is_solvable() : oD2.is_abelian());
    rpt.add("o(D) n=2", "o(D) is 1-dimensional abelian (char != 2) or 3-dimensional solvable "
            "(char 2)",
            std::to_string(expected2), std::to_string(oD2.dim()), small_ok);

    // n = 1: the diagonal line in characteristic 2, zero otherwise.
    ClassicalSpec spec1{};
    spec1.family = ClassicalSpec::Family::ODiag;
    spec1.diagonal = diag_strings(1);
    spec1.n = 1;
    LieSubalgebra oD1 = build_classical(spec1, field);
    std::size_t expected1 = char2 ? 1 : 0;
    rpt.add("o(D) n=1", "o(D) of a 1x1 form is the diagonal line iff the characteristic is 2",
            std::to_string(expected1), std::to_string(oD1.dim()), oD1.dim() == expected1);

    // n = 4: the derived subalgebra is perfect in both characteristics, so
    // the series table freezes at the first derived dimension.
    ClassicalSpec spec4{};
    spec4.family = ClassicalSpec::Family::ODiag;
    spec4.diagonal = diag_strings(4);
    spec4.n = 4;
    LieSubalgebra oD4 = build_classical(spec4, field);
    auto expect4 = series::odiag_dims(4, ch, 4);
    std::vector<std::size_t> tail4(expect4.begin() + 1, expect4.end());
    auto got4 = padded(oD4, 3);
    rpt.add("o(D) n=4 series", "derived series dims match the table", dims_str(tail4),
            dims_str(got4), got4 == tail4);
  }

  for (std::size_t n = 1; n <= 3; ++n) {
    LieSubalgebra sp =
        build_classical(ClassicalSpec::parse("sp(" + std::to_string(2 * n) + ")"), field);
    rpt.add("sp(" + std::to_string(2 * n) + ") dim", "dim sp_2n = 2n^2 + n",
            std::to_string(2 * n * n + n), std::to_string(sp.dim()), sp.dim() == 2 * n * n + n);
    auto expect = series::sp_dims(n, ch, 4);
    std::vector<std::size_t> tail(expect.begin() + 1, expect.end());
    auto got = padded(sp, 3);
    rpt.add("sp(" + std::to_string(2 * n) + ") series", "derived series dims match the table",
            dims_str(tail), dims_str(got), got == tail);
    if (char2) {
      LieSubalgebra sp1 =
          build_classical(ClassicalSpec::parse("sp1(" + std::to_string(2 * n) + ")"), field);
      LieSubalgebra sp2 =
          build_classical(ClassicalSpec::parse("sp2(" + std::to_string(2 * n) + ")"), field);
      bool d1 = sp.derived().span() == sp1.span();
      bool d2 = sp.derived().derived().span() == sp2.span();
      rpt.add("sp(" + std::to_string(2 * n) + ") derived constructors",
              "the alternating-block constructors equal the recomputed derived subalgebras",
              "sp' = sp1, sp'' = sp2", (d1 && d2) ? "equal" : "different", d1 && d2);
      if (n <= 2) {
        rpt.add("sp(" + std::to_string(2 * n) + ") solvable",
                "sp_2n is solvable for n <= 2 in characteristic 2", "solvable",
                sp.is_solvable() ? "solvable" : "not solvable", sp.is_solvable());
      } else {
        SubspaceOfAlgebra z = center(sp);
        bool is_line =
            z.dim() == 1 && z.rows.contains(ExactMatrix::identity(2 * n, field).flatten());
        rpt.add("Z(sp(6))", "the center of sp_2n is the scalar line for n >= 3 in "
                "characteristic 2",
                "k*I", is_line ? "k*I" : "other center", is_line);
        if (is_line) {
          std::size_t zc = quotient(sp, z).center_dim();
          rpt.add("sp(6)/k*I center", "the quotient of sp_2n by its scalar line is centerless",
                  "0", std::to_string(zc), zc == 0);
        }
      }
    } else {
      SubspaceOfAlgebra z = center(sp);
      bool ok = z.dim() == 0 && sp.is_perfect();
      rpt.add("sp(" + std::to_string(2 * n) + ") simple proxy",
              "sp_2n is perfect and centerless away from characteristic 2", "perfect, centerless",
              ok ? "perfect, centerless" : "failed", ok);
    }
  }

  {
    // Module spans of the vector representation.
    auto full = [&](const LieSubalgebra& g) {
      return module_span(g, standard_basis(g.ambient_dim(), field)).dim() == g.ambient_dim();
    };
    ClassicalSpec od{};
    od.family = ClassicalSpec::Family::ODiag;
    od.diagonal = diag_strings(3);
    od.n = 3;
    LieSubalgebra oD = build_classical(od, field);
    if (char2) {
      bool a = full(oD.derived());
      rpt.add("span: o(D)' n=3", "o(D)' acts onto the vector representation (characteristic 2)",
              "full span", a ? "full span" : "proper subspace", a);
      LieSubalgebra sp2 = build_classical(ClassicalSpec::parse("sp2(6)"), field);
      bool c = full(sp2);
      rpt.add("span: sp''(6)", "sp_2n'' acts onto the vector representation for n >= 3 "
              "(characteristic 2)",
              "full span", c ? "full span" : "proper subspace", c);
    } else {
      bool b = full(oD);
      rpt.add("span: o(D) n=3", "o(D) acts onto the vector representation (characteristic != 2)",
              "full span", b ? "full span" : "proper subspace", b);
      for (std::size_t n = 1; n <= 3; ++n) {
        LieSubalgebra sp =
            build_classical(ClassicalSpec::parse("sp(" + std::to_string(2 * n) + ")"), field);
        bool dd = full(sp);
        rpt.add("span: sp(" + std::to_string(2 * n) + ")",
                "sp_2n acts onto the vector representation (characteristic != 2)", "full span",
                dd ? "full span" : "proper subspace", dd);
      }
    }
  }

  if (ch == 0) {
    bool threw = false;
    try {
      build_classical(ClassicalSpec::parse("witt(1)"), field);
    } catch (const BadSpecError&) {
      threw = true;
    }
    rpt.add("witt over the rationals", "Witt constructors need positive characteristic",
            "rejected", threw ? "rejected" : "accepted", threw);
  } else {
    LieSubalgebra w1 = build_classical(ClassicalSpec::parse("witt(1)"), field);
    std::size_t p = static_cast<std::size_t>(ch);
    rpt.add("witt(1) dim", "dim W(n) = n p^n", std::to_string(p), std::to_string(w1.dim()),
            w1.dim() == p);
    if (ch == 2) {
      rpt.add("witt(1) solvable", "W(1) is solvable exactly in characteristic 2", "solvable",
              w1.is_solvable() ? "solvable" : "not solvable", w1.is_solvable());
      LieSubalgebra w2 = build_classical(ClassicalSpec::parse("witt(2)"), field);
      rpt.add("witt(2) dim", "dim W(2) = 2 p^2", "8", std::to_string(w2.dim()), w2.dim() == 8);
    } else {
      rpt.add("witt(1) perfect", "W(1) is perfect away from characteristic 2", "perfect",
              w1.is_perfect() ? "perfect" : "not perfect", w1.is_perfect());
    }
  }

  return rpt;
}

AggregateReport run_verify(const GridConfig& cfg) {
  AggregateReport agg;
  agg.config = cfg;

  std::vector<CellSpec> cells;
  for (const auto& field_text : cfg.fields) {
    FieldSpec field;
    try {
      field = FieldSpec::parse(field_text);
    } catch (const Error& e) {
      throw ConfigError(std::string("bad field in config: ") + e.what());
    }
    std::vector<Scalar> pool = effective_pool(field, cfg.diag_pool);
    if (cfg.diagonal && pool.empty()) {
      throw ConfigError("diagonal pool has no nonzero entries over " + field.to_string());
    }
    for (int kind = 0; kind < 2; ++kind) {
      bool diagonal = kind == 0;
      if (diagonal && !cfg.diagonal) continue;
      if (!diagonal && !cfg.symplectic) continue;
      for (int m = 0; m <= cfg.max_m; ++m) {
        for (int n = 0; n <= cfg.max_n; ++n) {
          std::size_t d = static_cast<std::size_t>(m) + (diagonal ? n : 2 * n);
          if (d == 0) continue;
          cells.push_back(CellSpec{field, diagonal, static_cast<std::size_t>(m),
                                   static_cast<std::size_t>(n), cfg.seed, pool,
                                   cfg.der_max_dim});
        }
      }
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const CellSpec& a, const CellSpec& b) { return cell_key(a) < cell_key(b); });

  std::vector<CellResult> results(cells.size());
  std::size_t workers = std::min(thread_budget(cfg), std::max<std::size_t>(cells.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run_cell(cells[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          results[i] = run_cell(cells[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  agg.cells = std::move(results);

  for (const auto& field_text : cfg.fields) {
    FieldSpec field = FieldSpec::parse(field_text);
    auto start = std::chrono::steady_clock::now();
    CellResult res;
    res.key = "classical/" + field.to_string();
    res.field = field.to_string();
    res.kind = "classical";
    res.reports.push_back(classical_checks(field, cfg.diag_pool));
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    agg.classical.push_back(std::move(res));
  }

  auto tally = [&](const std::vector<CellResult>& cells_) {
    for (const auto& c : cells_) {
      for (const auto& r : c.reports) {
        for (const auto& row : r.rows) {
          if (row.status == CheckStatus::Skipped) continue;
          if (row.status == CheckStatus::Advisory) {
            ++agg.advisories;
            continue;
          }
          ++agg.checks;
          if (row.status == CheckStatus::Fail) ++agg.failed;
        }
      }
    }
  };
  tally(agg.cells);
  tally(agg.classical);
  return agg;
}

}  // namespace liestab
