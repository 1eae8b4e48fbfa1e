#pragma once

#include <vector>

#include "liestab/matrix.hpp"

namespace liestab {

/// [x, y] = xy - yx.
ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y);

/// Lie subalgebra of gl_d given by an echelonized basis of d x d matrices,
/// stored as rows of length d^2 (row-major flattening).  Construction always
/// verifies bracket closure; a non-closed span is rejected, never completed.
class LieSubalgebra {
 public:
  static LieSubalgebra from_basis(const std::vector<ExactMatrix>& mats);
  static LieSubalgebra from_basis(std::size_t ambient_dim, const FieldSpec& field,
                                  const std::vector<ExactMatrix>& mats);

  std::size_t ambient_dim() const { return ambient_; }
  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return span_.dim(); }
  const RowSpace& span() const { return span_; }

  ExactMatrix basis_matrix(std::size_t i) const;
  bool contains(const ExactMatrix& x) const;

  LieSubalgebra derived() const;
  /// [g^(1), ..., g^(depth)], stopping early once the series stabilizes or
  /// reaches zero.
  std::vector<LieSubalgebra> derived_series(std::size_t depth) const;
  bool is_solvable() const;
  bool is_abelian() const;
  bool is_perfect() const;

  bool operator==(const LieSubalgebra& rhs) const {
    return ambient_ == rhs.ambient_ && span_ == rhs.span_;
  }

 private:
  LieSubalgebra(std::size_t ambient, FieldSpec field, RowSpace span)
      : ambient_(ambient), field_(field), span_(std::move(span)) {}

  static LieSubalgebra from_span_trusted(std::size_t ambient, const FieldSpec& field,
                                         RowSpace span);
  friend LieSubalgebra subalgebra_from_rowspace(std::size_t, const FieldSpec&, RowSpace, bool);

  std::size_t ambient_;
  FieldSpec field_;
  RowSpace span_;
};

/// Build a subalgebra from an already-computed row space, verifying closure
/// (or trusting it when `verify` is false, for spans that are closed by
/// construction such as kernels of the stabilizer operator after one check).
LieSubalgebra subalgebra_from_rowspace(std::size_t ambient, const FieldSpec& field,
                                       RowSpace span, bool verify = true);

/// Linear subspace sitting inside a parent subalgebra.
struct SubspaceOfAlgebra {
  LieSubalgebra parent;
  RowSpace rows;

  SubspaceOfAlgebra(LieSubalgebra p, RowSpace r);

  std::size_t dim() const { return rows.dim(); }
  ExactMatrix basis_matrix(std::size_t i) const;
};

SubspaceOfAlgebra center(const LieSubalgebra& g);

/// True iff [g, i] is contained in span(i).
bool is_ideal(const LieSubalgebra& g, const SubspaceOfAlgebra& i);

/// Echelonized basis (rows) of span{X.w : X in basis(g), w in vecs}.
RowSpace module_span(const LieSubalgebra& g, const std::vector<std::vector<Scalar>>& vecs);

/// Span of the full ambient column space k^d as input rows for module_span.
std::vector<std::vector<Scalar>> standard_basis(std::size_t d, const FieldSpec& field);

/// Abstract Lie algebra given by structure constants over a fixed basis.
/// Anticommutativity ([x, x] = 0) and the Jacobi identity are checked at
/// construction.
class AbstractLieAlgebra {
 public:
  AbstractLieAlgebra(std::size_t dim, const FieldSpec& field, std::vector<Scalar> c);

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  std::size_t center_dim() const;
  std::vector<std::size_t> derived_dims(std::size_t depth) const;
  bool is_abelian() const;

 private:
  std::size_t dim_;
  FieldSpec field_;
  std::vector<Scalar> c_;
};

/// Structure constants of g / i on the complement of i picked by echelon
/// pivots.  Throws NotIdealError when i is not an ideal.
AbstractLieAlgebra quotient(const LieSubalgebra& g, const SubspaceOfAlgebra& i);

/// Certifies g = h x| v structurally: span(h) + span(v) = span(g) directly,
/// h closed under bracket, [v, v] = 0, and [g, v] inside v.
bool verify_semidirect(const LieSubalgebra& g, const SubspaceOfAlgebra& h,
                       const SubspaceOfAlgebra& v);

}  // namespace liestab
