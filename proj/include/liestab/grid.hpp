#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liestab/field.hpp"
#include "liestab/report.hpp"

namespace liestab {

/// Verification grid: for every (field, kind, m, n) cell build the normal
/// Gram matrix, a seeded congruence scramble of it, and run the structural
/// and derivation check batteries on both.
struct GridConfig {
  std::vector<std::string> fields = {"GF(2)", "GF(3)", "GF(5)", "GF(7)", "QQ"};
  int max_m = 3;
  int max_n = 3;
  bool diagonal = true;
  bool symplectic = true;
  std::vector<std::string> diag_pool = {"1", "2", "3"};
  std::uint64_t seed = 1;
  bool parallel = true;
  // Derivation-algebra checks are O((d+2)^5); cells above this d skip them.
  int der_max_dim = 6;
};

struct CellResult {
  std::string key;
  std::string field;
  std::string kind;  // "diagonal" | "symplectic" | "classical"
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::string> diag_entries;
  std::vector<StructureReport> reports;
  double seconds = 0.0;
};

struct AggregateReport {
  GridConfig config;
  std::vector<CellResult> cells;      // grid cells, sorted by key
  std::vector<CellResult> classical;  // per-field classical-algebra checks
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::size_t advisories = 0;

  bool all_passed() const { return failed == 0; }
};

/// Throws ConfigError on an invalid configuration; check failures are report
/// content, not errors.
AggregateReport run_verify(const GridConfig& cfg);

/// The per-field battery over the explicit constructors: dimensions and
/// derived series of gl, sl, o(D), the symplectic family, centers in
/// characteristic 2, module spans, and the small Witt algebras.
StructureReport classical_checks(const FieldSpec& field, const std::vector<std::string>& pool);

}  // namespace liestab
