#pragma once

#include <vector>

#include "liestab/matrix.hpp"

namespace liestab {

enum class SymmetryClass { Symmetric, Antisymmetric, Both, Neither };

std::string to_string(SymmetryClass s);

/// Bilinear form (v, w) = v^T * gram * w.
struct BilinearForm {
  ExactMatrix gram;

  explicit BilinearForm(ExactMatrix m);

  std::size_t dim() const { return gram.rows(); }
  const FieldSpec& field() const { return gram.field(); }
};

/// Symmetric iff M^T = M.  Antisymmetric iff M^T = -M and the diagonal is
/// zero (the alternating convention; in characteristic 2 the zero diagonal is
/// what separates the two classes).
SymmetryClass classify_symmetry(const BilinearForm& f);

bool is_alternating(const ExactMatrix& m);

/// Basis of the radical {x | B(x,y) = B(y,x) = 0 for all y}, as rows.
/// Throws NotClassifiableError when the form is Neither.
ExactMatrix radical_subspace(const BilinearForm& f);

enum class FormKind { Zero, Diagonal, Symplectic };

/// Congruence class data: an invertible g with g^T * gram * g = normal_gram,
/// where normal_gram is 0_m + diag(D) (Diagonal) or 0_m + Pi_{2n}
/// (Symplectic), zero block first.
struct FormClass {
  FormKind kind;
  std::size_t m;                  // zero-block size
  std::size_t n;                  // symplectic parameter; d = m + 2n
  std::vector<Scalar> diagonal;   // Diagonal kind: the nonzero entries of D
  ExactMatrix transform;          // g
  ExactMatrix normal_gram;

  std::size_t nonsingular_size() const {
    return kind == FormKind::Symplectic ? 2 * n : diagonal.size();
  }
};

/// Classify a symmetric or antisymmetric form up to congruence.
/// Alternating forms map to Symplectic, non-alternating symmetric forms to
/// Diagonal, the zero form to Zero.  Throws NotClassifiableError for Neither.
FormClass normal_form(const BilinearForm& f);

/// Optional post-pass: rescale basis vectors so that diagonal entries with a
/// square value become 1.  Only over GF(p) (roots found by exhaustion).
FormClass rescale_squares(const FormClass& fc);

}  // namespace liestab
