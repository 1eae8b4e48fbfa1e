#include "liestab/matrix.hpp"

#include <sstream>

namespace liestab {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldSpec& field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& field,
                                   const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  ExactMatrix m(r, c, field);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].field() != field) throw FieldMismatchError("entry field differs from matrix field");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<Scalar> ExactMatrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void ExactMatrix::check_same_shape(const ExactMatrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatchError("matrix fields differ");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix shapes differ");
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  check_same_shape(rhs);
  ExactMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  check_same_shape(rhs);
  ExactMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatchError("matrix fields differ");
  if (cols_ != rhs.rows_) throw ShapeError("inner dimensions differ");
  ExactMatrix out(rows_, rhs.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> ExactMatrix::flatten() const {
  if (!is_square()) throw ShapeError("flatten requires a square matrix");
  return data_;
}

ExactMatrix ExactMatrix::unflatten(const std::vector<Scalar>& v, std::size_t d,
                                   const FieldSpec& field) {
  if (v.size() != d * d) throw ShapeError("flattened length is not d*d");
  ExactMatrix m(d, d, field);
  for (std::size_t k = 0; k < v.size(); ++k) m.data_[k] = v[k];
  return m;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).to_string();
    }
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[[]]";
  return os.str();
}

RrefResult rref(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
    }
    Scalar inv = a.at(pivot_row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        a.at(i, j) -= f * a.at(pivot_row, j);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return RrefResult{std::move(a), std::move(pivots), pivot_row};
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;

  std::size_t k = m.cols() - r.rank;
  ExactMatrix basis(k, m.cols(), m.field());
  std::size_t out = 0;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(out, free_col) = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      basis.at(out, r.pivots[i]) = -r.mat.at(i, free_col);
    }
    ++out;
  }
  // Canonicalize so the basis is itself in reduced echelon form.
  return rref(basis).mat;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

std::optional<ExactMatrix> try_inverse(const ExactMatrix& g) {
  if (!g.is_square()) throw ShapeError("inverse requires a square matrix");
  std::size_t n = g.rows();
  ExactMatrix aug(n, 2 * n, g.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = g.at(i, j);
    aug.at(i, n + i) = Scalar::one(g.field());
  }
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) return std::nullopt;
  ExactMatrix inv(n, n, g.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

ExactMatrix inverse(const ExactMatrix& g) {
  auto inv = try_inverse(g);
  if (!inv) throw SingularError("matrix is singular");
  return *inv;
}

ExactMatrix conjugate(const ExactMatrix& x, const ExactMatrix& g) {
  if (x.rows() != g.rows() || !x.is_square() || !g.is_square()) {
    throw ShapeError("conjugation requires square matrices of equal size");
  }
  return inverse(g) * x * g;
}

ExactMatrix congruence(const ExactMatrix& m, const ExactMatrix& g) {
  if (m.rows() != g.rows() || !m.is_square() || !g.is_square()) {
    throw ShapeError("congruence requires square matrices of equal size");
  }
  return g.transpose() * m * g;
}

Scalar determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant requires a square matrix");
  ExactMatrix a = m;
  std::size_t n = a.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a.at(sel, col).is_zero()) ++sel;
    if (sel == n) return Scalar::zero(m.field());
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Scalar inv = a.at(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return det;
}

RowSpace::RowSpace(std::size_t width, const FieldSpec& field) : rows_(0, width, field) {}

RowSpace RowSpace::from_rows(const ExactMatrix& rows) {
  RrefResult r = rref(rows);
  RowSpace s(rows.cols(), rows.field());
  ExactMatrix trimmed(r.rank, rows.cols(), rows.field());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) trimmed.at(i, j) = r.mat.at(i, j);
  s.rows_ = std::move(trimmed);
  s.pivots_ = std::move(r.pivots);
  return s;
}

RowSpace RowSpace::from_vectors(std::size_t width, const FieldSpec& field,
                                const std::vector<std::vector<Scalar>>& vecs) {
  ExactMatrix m(vecs.size(), width, field);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].size() != width) throw ShapeError("vector length differs from width");
    for (std::size_t j = 0; j < width; ++j) m.at(i, j) = vecs[i][j];
  }
  return from_rows(m);
}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> v) const {
  if (v.size() != width()) throw ShapeError("vector length differs from width");
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = c;  // pivot entries are 1
    for (std::size_t j = 0; j < width(); ++j) {
      if (!rows_.at(i, j).is_zero()) v[j] -= f * rows_.at(i, j);
    }
  }
  return v;
}

bool RowSpace::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool RowSpace::contains(const RowSpace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

std::optional<std::vector<Scalar>> RowSpace::coordinates(const std::vector<Scalar>& v) const {
  if (v.size() != width()) throw ShapeError("vector length differs from width");
  std::vector<Scalar> coords;
  coords.reserve(dim());
  std::vector<Scalar> w = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = w[pivots_[i]];
    coords.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < width(); ++j) {
      if (!rows_.at(i, j).is_zero()) w[j] -= c * rows_.at(i, j);
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

RowSpace RowSpace::sum(const RowSpace& other) const {
  if (width() != other.width() || field() != other.field()) {
    throw ShapeError("row spaces live in different ambient spaces");
  }
  ExactMatrix stacked(dim() + other.dim(), width(), field());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < width(); ++j) stacked.at(i, j) = rows_.at(i, j);
  for (std::size_t i = 0; i < other.dim(); ++i)
    for (std::size_t j = 0; j < width(); ++j) stacked.at(dim() + i, j) = other.rows_.at(i, j);
  return from_rows(stacked);
}

RowSpace RowSpace::intersect(const RowSpace& other) const {
  if (width() != other.width() || field() != other.field()) {
    throw ShapeError("row spaces live in different ambient spaces");
  }
  // Solve x*A = y*B: kernel vectors (x, y) of the transposed stacked system.
  std::size_t a = dim(), b = other.dim();
  ExactMatrix sys(width(), a + b, field());
  for (std::size_t j = 0; j < width(); ++j) {
    for (std::size_t i = 0; i < a; ++i) sys.at(j, i) = rows_.at(i, j);
    for (std::size_t i = 0; i < b; ++i) sys.at(j, a + i) = -other.rows_.at(i, j);
  }
  ExactMatrix ker = kernel_basis(sys);
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    std::vector<Scalar> v(width(), Scalar::zero(field()));
    for (std::size_t i = 0; i < a; ++i) {
      if (ker.at(r, i).is_zero()) continue;
      for (std::size_t j = 0; j < width(); ++j) v[j] += ker.at(r, i) * rows_.at(i, j);
    }
    vecs.push_back(std::move(v));
  }
  return from_vectors(width(), field(), vecs);
}

}  // namespace liestab
