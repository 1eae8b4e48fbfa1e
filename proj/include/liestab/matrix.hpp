#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liestab/field.hpp"

namespace liestab {

/// Dense matrix with exact entries over a fixed field.  Immutable by
/// convention after construction; all operations return new values.
/// Zero-sized shapes are legal everywhere.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  static ExactMatrix identity(std::size_t n, const FieldSpec& field);
  static ExactMatrix from_rows(const FieldSpec& field,
                               const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const;

  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator-() const;
  ExactMatrix scaled(const Scalar& c) const;
  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix& rhs) const;
  bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }
  bool is_zero() const;

  /// Row-major flattening of a square matrix into a single row vector.
  std::vector<Scalar> flatten() const;
  static ExactMatrix unflatten(const std::vector<Scalar>& v, std::size_t d,
                               const FieldSpec& field);

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;  // row-major

  void check_same_shape(const ExactMatrix& rhs) const;
};

struct RrefResult {
  ExactMatrix mat;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank;
};

/// Reduced row echelon form.  Deterministic: scanning columns left to right,
/// the first row with a nonzero entry becomes the pivot row.
RrefResult rref(const ExactMatrix& m);

/// Echelonized basis of the right null space, returned as the rows of a
/// (cols - rank) x cols matrix in reduced row echelon form.
ExactMatrix kernel_basis(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

std::optional<ExactMatrix> try_inverse(const ExactMatrix& g);
ExactMatrix inverse(const ExactMatrix& g);  // throws SingularError

/// g^{-1} x g.
ExactMatrix conjugate(const ExactMatrix& x, const ExactMatrix& g);

/// g^T m g.
ExactMatrix congruence(const ExactMatrix& m, const ExactMatrix& g);

Scalar determinant(const ExactMatrix& m);

/// Canonical row space: rows kept in reduced row echelon form with no zero
/// rows, so two spans are equal iff the representations are identical.
class RowSpace {
 public:
  RowSpace(std::size_t width, const FieldSpec& field);
  static RowSpace from_rows(const ExactMatrix& rows);
  static RowSpace from_vectors(std::size_t width, const FieldSpec& field,
                               const std::vector<std::vector<Scalar>>& vecs);

  std::size_t dim() const { return rows_.rows(); }
  std::size_t width() const { return rows_.cols(); }
  const FieldSpec& field() const { return rows_.field(); }
  const ExactMatrix& basis_rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Scalar> basis_vector(std::size_t i) const { return rows_.row(i); }

  /// Residual of v after eliminating this space's pivot coordinates.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const RowSpace& other) const;

  /// Coordinates of v over the basis rows; nullopt if v is outside the span.
  std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

  RowSpace sum(const RowSpace& other) const;
  RowSpace intersect(const RowSpace& other) const;

  bool operator==(const RowSpace& other) const { return rows_ == other.rows_; }
  bool operator!=(const RowSpace& other) const { return !(*this == other); }

 private:
  ExactMatrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace liestab
