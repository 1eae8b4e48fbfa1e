#pragma once

#include <vector>

#include "liestab/liealg.hpp"
#include "liestab/report.hpp"

namespace liestab {

/// Finite dimensional unital algebra given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k.  The unit law and associativity are
/// checked on all basis triples at construction.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::size_t dim, const FieldSpec& field, std::size_t unit_index,
                std::vector<Scalar> c);

  /// k[t_1, ..., t_n] / (t_i^p) over a field of characteristic p > 0.
  /// Basis: monomials with exponents below p, in mixed-radix order.
  static FiniteAlgebra truncated_polynomial(std::size_t n, const FieldSpec& field);

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  std::size_t unit_index() const { return unit_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

 private:
  std::size_t dim_;
  FieldSpec field_;
  std::size_t unit_;
  std::vector<Scalar> c_;
};

/// Graded algebra A = k + A_(1) + A_(2) built from a d x d matrix M:
/// basis {1, e_1, ..., e_d, e} with e_i e_j = M_ij e and all higher products
/// zero.  Throws ZeroMatrixError when M = 0 (degree 2 would not be generated).
FiniteAlgebra build_graded_algebra(const ExactMatrix& M);

/// Full derivation algebra: kernel of the Leibniz system over End(A),
/// returned as a Lie subalgebra of gl(dim A).
LieSubalgebra derivations(const FiniteAlgebra& a);

/// The three graded pieces of Der(A) for A = build_graded_algebra(M),
/// together with the assembled total and the degree-zero weight data.
struct GradedDerivationAlgebra {
  std::size_t d;                      // dim A_(1)
  LieSubalgebra degree0;              // endomorphisms of A, degree 0 part
  std::vector<Scalar> lambda;         // weight on A_(2) per degree0 basis element
  std::size_t dim_minus1;
  std::size_t dim_zero;
  std::size_t dim_plus1;
  RowSpace minus1_pairs;              // solutions (v, w) in k^{2d}
  LieSubalgebra total;                // direct sum of the graded pieces
  std::size_t pi_kernel_dim;          // degree0 elements with lambda = 0
};

GradedDerivationAlgebra graded_pieces(const ExactMatrix& M);

/// Expected dimension of the degree -1 piece: nonzero exactly for the two
/// Witt shapes, (characteristic 3, d = 1) and (characteristic 2, d = 2,
/// alternating nondegenerate M).
std::size_t expected_minus1_dim(const ExactMatrix& M);

/// Full battery of checks on Der(A) for A built from M: graded piece
/// dimensions, the degree-0 identification with obar(M), the kernel of the
/// weight representation, abelian degree 1, the graded/ungraded dimension
/// match, bracket grading, and the semidirect decomposition away from the
/// Witt shapes.  Failures are report rows, never exceptions.
StructureReport verify_der(const ExactMatrix& M);

}  // namespace liestab
