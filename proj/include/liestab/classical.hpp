#pragma once

#include <string>
#include <vector>

#include "liestab/gradedalg.hpp"
#include "liestab/liealg.hpp"

namespace liestab {

/// Families with explicit basis constructors.  Dimensions:
///   gl(n): n^2                sl(n): n^2 - 1
///   o(D):  n(n-1)/2 in characteristic != 2, n(n+1)/2 in characteristic 2
///   sp(2n): 2n^2 + n          sp1(2n): 2n^2 - n (char 2)
///   sp2(2n): 2n^2 - n - 1 (char 2)
///   scalar(d): 1              witt(n): n * p^n over GF(p)
struct ClassicalSpec {
  enum class Family { GL, SL, ODiag, Sp, SpDerived1, SpDerived2, ScalarLine, Witt };

  Family family;
  std::size_t n = 0;                  // size parameter (2n for the symplectic families)
  std::vector<std::string> diagonal;  // ODiag entries, parsed in the target field

  /// Grammar: gl(n) | sl(n) | o(a,b,...) | sp(2n) | sp1(2n) | sp2(2n)
  ///          | scalar(d) | witt(n), with scalar-string arguments for o(...).
  static ClassicalSpec parse(const std::string& text);

  std::string to_string() const;
};

LieSubalgebra build_classical(const ClassicalSpec& spec, const FieldSpec& field);

/// Basis matrices of o(D) = {X | D_ii X_ij + D_jj X_ji = 0} for nonsingular
/// diagonal D; in characteristic 2 the diagonal entries of X are free.
std::vector<ExactMatrix> odiag_basis_matrices(const std::vector<Scalar>& d_entries,
                                              const FieldSpec& field);

/// Basis of the 2n x 2n symplectic family: blocks [[A, B], [C, -A^T]] with
/// B, C symmetric (alternating when requested) and optionally traceless A.
std::vector<ExactMatrix> symplectic_basis_matrices(std::size_t n, const FieldSpec& field,
                                                   bool alternating_bc, bool traceless_a);

}  // namespace liestab
