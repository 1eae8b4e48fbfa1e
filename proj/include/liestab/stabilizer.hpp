#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liestab/forms.hpp"
#include "liestab/liealg.hpp"
#include "liestab/report.hpp"

namespace liestab {

/// Matrix of the operator X -> X^T M + M X on row-major flattened X.
ExactMatrix stabilizer_operator(const ExactMatrix& M);

/// o(M) = {X | X^T M + M X = 0}, computed as a kernel and returned closed.
LieSubalgebra stab(const ExactMatrix& M);

/// The unique t with X^T M + M X = t M, or nullopt when no such t exists.
/// For M = 0 the value is 0 whenever X^T M + M X = 0 (always).
std::optional<Scalar> lambda_of(const ExactMatrix& X, const ExactMatrix& M);

/// obar(M) = {X | X^T M + M X in k M} with the weight functional per basis
/// element.  codim = dim obar - dim o is 0 or 1 for M != 0.
struct StabilizerPair {
  LieSubalgebra o;
  LieSubalgebra obar;
  std::vector<Scalar> lambda;
  std::size_t codim;
};

StabilizerPair stab_bar(const ExactMatrix& M);

/// Why the derived-series formula applies at a given step.
enum class DerivedWhy {
  FirstStep,          // i = 1, unconditional
  NoZeroBlock,        // m = 0, the series is the nonsingular block's own
  BigBlockChar2,      // characteristic 2 and m >= 3
  BigBlockCharNot2,   // characteristic != 2 and m >= 2
  VectorRepSpans,     // the derived block acts onto the vector representation
  NotPredicted,
};

std::string to_string(DerivedWhy w);

struct DerivedStep {
  std::size_t dim = 0;
  DerivedWhy why = DerivedWhy::NotPredicted;
};

/// Structural facts about o(M) and obar(M) for a classified form, derived
/// from the block decomposition o(0_m + N) = (gl_m + o(N)) x| Hom and the
/// small-algebra series table.
struct StructurePrediction {
  std::string source;  // which case of the decision table produced this
  FormKind kind;
  std::size_t d, m, nprime;
  std::size_t dim_o;
  std::size_t dim_obar;
  std::size_t codim;
  std::optional<ExactMatrix> lambda_witness;  // in normal coordinates
  Scalar lambda_witness_value;
  std::vector<DerivedStep> derived;  // steps i = 1..3
  std::vector<ExactMatrix> radical_basis;  // in normal coordinates
  std::vector<std::string> weight_labels;  // composition of the radical candidate
  std::size_t radical_dim;
  std::size_t ss_dim;
  bool solvable;
  // Literal small-weight-count reading of the radical statement, recorded as
  // an advisory row when it disagrees with the constructed candidate.
  std::optional<std::size_t> radical_literal_dim;
};

/// Throws UnsupportedError for a zero form of size 0.
StructurePrediction predict(const FormClass& fc, const FieldSpec& field);

/// Runs the full battery of structural checks on M: dimensions, block shape,
/// semidirect split, weight dichotomy, derived series, radical candidate,
/// module spans, solvability.  Failures are report rows, never exceptions.
StructureReport verify_structure(const ExactMatrix& M);

namespace series {
// Dimension tables for the building-block derived series; index i is the
// i-th derived subalgebra, index 0 the algebra itself.  `len` entries.
std::vector<std::size_t> gl_dims(std::size_t n, std::int64_t characteristic, std::size_t len);
std::vector<std::size_t> sl_dims(std::size_t n, std::int64_t characteristic, std::size_t len);
std::vector<std::size_t> odiag_dims(std::size_t n, std::int64_t characteristic, std::size_t len);
std::vector<std::size_t> sp_dims(std::size_t n, std::int64_t characteristic, std::size_t len);
bool gl_solvable(std::size_t n, std::int64_t characteristic);
}  // namespace series

}  // namespace liestab
