#include "liestab/liealg.hpp"

#include <string>

namespace liestab {

ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

namespace {

void check_closure(std::size_t ambient, const FieldSpec& field, const RowSpace& span) {
  for (std::size_t i = 0; i < span.dim(); ++i) {
    ExactMatrix xi = ExactMatrix::unflatten(span.basis_vector(i), ambient, field);
    for (std::size_t j = i + 1; j < span.dim(); ++j) {
      ExactMatrix xj = ExactMatrix::unflatten(span.basis_vector(j), ambient, field);
      if (!span.contains(bracket(xi, xj).flatten())) {
        throw NotClosedError("span is not closed under the bracket (basis pair " +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

LieSubalgebra subalgebra_from_rowspace(std::size_t ambient, const FieldSpec& field, RowSpace span,
                                       bool verify) {
  if (span.width() != ambient * ambient) throw ShapeError("row width is not ambient_dim^2");
  if (verify) check_closure(ambient, field, span);
  return LieSubalgebra(ambient, field, std::move(span));
}

LieSubalgebra LieSubalgebra::from_basis(const std::vector<ExactMatrix>& mats) {
  if (mats.empty()) throw ShapeError("empty basis needs an explicit ambient dimension");
  return from_basis(mats[0].rows(), mats[0].field(), mats);
}

LieSubalgebra LieSubalgebra::from_basis(std::size_t ambient_dim, const FieldSpec& field,
                                        const std::vector<ExactMatrix>& mats) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) {
    if (!m.is_square() || m.rows() != ambient_dim) throw ShapeError("basis matrix has wrong size");
    if (m.field() != field) throw FieldMismatchError("basis matrix field differs");
    rows.push_back(m.flatten());
  }
  RowSpace span = RowSpace::from_vectors(ambient_dim * ambient_dim, field, rows);
  check_closure(ambient_dim, field, span);
  return LieSubalgebra(ambient_dim, field, std::move(span));
}

LieSubalgebra LieSubalgebra::from_span_trusted(std::size_t ambient, const FieldSpec& field,
                                               RowSpace span) {
  return LieSubalgebra(ambient, field, std::move(span));
}

ExactMatrix LieSubalgebra::basis_matrix(std::size_t i) const {
  return ExactMatrix::unflatten(span_.basis_vector(i), ambient_, field_);
}

bool LieSubalgebra::contains(const ExactMatrix& x) const {
  if (x.rows() != ambient_ || !x.is_square()) return false;
  return span_.contains(x.flatten());
}

LieSubalgebra LieSubalgebra::derived() const {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < dim(); ++i) {
    ExactMatrix xi = basis_matrix(i);
    for (std::size_t j = i + 1; j < dim(); ++j) {
      rows.push_back(bracket(xi, basis_matrix(j)).flatten());
    }
  }
  RowSpace span = RowSpace::from_vectors(ambient_ * ambient_, field_, rows);
  // Spans of brackets of a subalgebra are closed under the bracket.
  return from_span_trusted(ambient_, field_, std::move(span));
}

std::vector<LieSubalgebra> LieSubalgebra::derived_series(std::size_t depth) const {
  std::vector<LieSubalgebra> series;
  LieSubalgebra cur = *this;
  for (std::size_t i = 0; i < depth; ++i) {
    LieSubalgebra next = cur.derived();
    bool stabilized = next.dim() == cur.dim();
    series.push_back(next);
    if (stabilized || next.dim() == 0) break;
    cur = series.back();
  }
  return series;
}

bool LieSubalgebra::is_solvable() const {
  LieSubalgebra cur = *this;
  for (std::size_t step = 0; step <= dim(); ++step) {
    if (cur.dim() == 0) return true;
    LieSubalgebra next = cur.derived();
    if (next.dim() == cur.dim()) return false;
    cur = next;
  }
  return false;
}

bool LieSubalgebra::is_abelian() const { return derived().dim() == 0; }

bool LieSubalgebra::is_perfect() const { return derived().dim() == dim(); }

SubspaceOfAlgebra::SubspaceOfAlgebra(LieSubalgebra p, RowSpace r)
    : parent(std::move(p)), rows(std::move(r)) {
  if (rows.width() != parent.ambient_dim() * parent.ambient_dim()) {
    throw ShapeError("subspace width differs from the parent's flattened width");
  }
  for (std::size_t i = 0; i < rows.dim(); ++i) {
    if (!parent.span().contains(rows.basis_vector(i))) {
      throw ShapeError("subspace basis vector lies outside the parent span");
    }
  }
}

ExactMatrix SubspaceOfAlgebra::basis_matrix(std::size_t i) const {
  return ExactMatrix::unflatten(rows.basis_vector(i), parent.ambient_dim(), parent.field());
}

SubspaceOfAlgebra center(const LieSubalgebra& g) {
  std::size_t n = g.dim();
  std::size_t w = g.ambient_dim() * g.ambient_dim();
  // Unknown coefficients c over the basis; equations [sum c_i b_i, b_j] = 0.
  ExactMatrix sys(n * w, n, g.field());
  for (std::size_t j = 0; j < n; ++j) {
    ExactMatrix bj = g.basis_matrix(j);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> br = bracket(g.basis_matrix(i), bj).flatten();
      for (std::size_t k = 0; k < w; ++k) sys.at(j * w + k, i) = br[k];
    }
  }
  ExactMatrix coeffs = kernel_basis(sys);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    std::vector<Scalar> v(w, Scalar::zero(g.field()));
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs.at(r, i).is_zero()) continue;
      std::vector<Scalar> bi = g.span().basis_vector(i);
      for (std::size_t k = 0; k < w; ++k) v[k] += coeffs.at(r, i) * bi[k];
    }
    rows.push_back(std::move(v));
  }
  return SubspaceOfAlgebra(g, RowSpace::from_vectors(w, g.field(), rows));
}

bool is_ideal(const LieSubalgebra& g, const SubspaceOfAlgebra& i) {
  for (std::size_t a = 0; a < g.dim(); ++a) {
    ExactMatrix x = g.basis_matrix(a);
    for (std::size_t b = 0; b < i.dim(); ++b) {
      if (!i.rows.contains(bracket(x, i.basis_matrix(b)).flatten())) return false;
    }
  }
  return true;
}

RowSpace module_span(const LieSubalgebra& g, const std::vector<std::vector<Scalar>>& vecs) {
  std::size_t d = g.ambient_dim();
  std::vector<std::vector<Scalar>> images;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    ExactMatrix x = g.basis_matrix(i);
    for (const auto& v : vecs) {
      if (v.size() != d) throw ShapeError("vector length differs from ambient dimension");
      std::vector<Scalar> img(d, Scalar::zero(g.field()));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (!x.at(r, c).is_zero() && !v[c].is_zero()) img[r] += x.at(r, c) * v[c];
      images.push_back(std::move(img));
    }
  }
  return RowSpace::from_vectors(d, g.field(), images);
}

std::vector<std::vector<Scalar>> standard_basis(std::size_t d, const FieldSpec& field) {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Scalar> e(d, Scalar::zero(field));
    e[i] = Scalar::one(field);
    out.push_back(std::move(e));
  }
  return out;
}

AbstractLieAlgebra::AbstractLieAlgebra(std::size_t dim, const FieldSpec& field,
                                       std::vector<Scalar> c)
    : dim_(dim), field_(field), c_(std::move(c)) {
  if (c_.size() != dim_ * dim_ * dim_) throw ShapeError("structure constant tensor size");
  auto cc = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return c_[(i * dim_ + j) * dim_ + k];
  };
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!cc(i, i, k).is_zero()) throw Error("structure constants violate [x, x] = 0");
    }
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (cc(i, j, k) != -cc(j, i, k)) throw Error("structure constants not anticommutative");
      }
    }
  }
  // Jacobi on basis triples.
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = j + 1; k < dim_; ++k) {
        for (std::size_t m = 0; m < dim_; ++m) {
          Scalar acc = Scalar::zero(field_);
          for (std::size_t l = 0; l < dim_; ++l) {
            acc += cc(j, k, l) * cc(i, l, m);
            acc += cc(k, i, l) * cc(j, l, m);
            acc += cc(i, j, l) * cc(k, l, m);
          }
          if (!acc.is_zero()) throw Error("structure constants violate the Jacobi identity");
        }
      }
    }
  }
}

std::size_t AbstractLieAlgebra::center_dim() const {
  // x central iff sum_i x_i c(i, j, k) = 0 for all j, k.
  ExactMatrix sys(dim_ * dim_, dim_, field_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t i = 0; i < dim_; ++i) sys.at(j * dim_ + k, i) = c(i, j, k);
  return dim_ - rank(sys);
}

std::vector<std::size_t> AbstractLieAlgebra::derived_dims(std::size_t depth) const {
  // Track subspaces of the coefficient space k^dim.
  RowSpace cur = RowSpace::from_rows(ExactMatrix::identity(dim_, field_));
  std::vector<std::size_t> dims;
  for (std::size_t step = 0; step < depth; ++step) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t a = 0; a < cur.dim(); ++a) {
      std::vector<Scalar> x = cur.basis_vector(a);
      for (std::size_t b = a + 1; b < cur.dim(); ++b) {
        std::vector<Scalar> y = cur.basis_vector(b);
        std::vector<Scalar> br(dim_, Scalar::zero(field_));
        for (std::size_t i = 0; i < dim_; ++i) {
          if (x[i].is_zero()) continue;
          for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k) br[k] += x[i] * y[j] * c(i, j, k);
          }
        }
        rows.push_back(std::move(br));
      }
    }
    RowSpace next = RowSpace::from_vectors(dim_, field_, rows);
    bool stabilized = next.dim() == cur.dim();
    dims.push_back(next.dim());
    if (stabilized || next.dim() == 0) break;
    cur = std::move(next);
  }
  return dims;
}

bool AbstractLieAlgebra::is_abelian() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

AbstractLieAlgebra quotient(const LieSubalgebra& g, const SubspaceOfAlgebra& i) {
  if (!is_ideal(g, i)) throw NotIdealError("quotient requires an ideal");
  std::size_t w = g.ambient_dim() * g.ambient_dim();
  const FieldSpec& field = g.field();

  // Complement of i in g: reduce g's basis modulo i, then echelonize.
  std::vector<std::vector<Scalar>> reduced;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    reduced.push_back(i.rows.reduce(g.span().basis_vector(a)));
  }
  RowSpace comp = RowSpace::from_vectors(w, field, reduced);
  std::size_t q = comp.dim();
  if (q + i.dim() != g.dim()) throw Error("internal: complement dimension mismatch");

  std::vector<Scalar> c(q * q * q, Scalar::zero(field));
  for (std::size_t a = 0; a < q; ++a) {
    ExactMatrix xa = ExactMatrix::unflatten(comp.basis_vector(a), g.ambient_dim(), field);
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b) continue;
      ExactMatrix xb = ExactMatrix::unflatten(comp.basis_vector(b), g.ambient_dim(), field);
      std::vector<Scalar> br = i.rows.reduce(bracket(xa, xb).flatten());
      auto coords = comp.coordinates(br);
      if (!coords) throw Error("internal: quotient bracket escapes the complement");
      for (std::size_t k = 0; k < q; ++k) c[(a * q + b) * q + k] = (*coords)[k];
    }
  }
  return AbstractLieAlgebra(q, field, std::move(c));
}

bool verify_semidirect(const LieSubalgebra& g, const SubspaceOfAlgebra& h,
                       const SubspaceOfAlgebra& v) {
  if (h.dim() + v.dim() != g.dim()) return false;
  if (h.rows.sum(v.rows) != g.span()) return false;
  // h is a subalgebra.
  for (std::size_t a = 0; a < h.dim(); ++a) {
    ExactMatrix xa = h.basis_matrix(a);
    for (std::size_t b = a + 1; b < h.dim(); ++b) {
      if (!h.rows.contains(bracket(xa, h.basis_matrix(b)).flatten())) return false;
    }
  }
  // v is abelian.
  for (std::size_t a = 0; a < v.dim(); ++a) {
    ExactMatrix xa = v.basis_matrix(a);
    for (std::size_t b = a + 1; b < v.dim(); ++b) {
      if (!bracket(xa, v.basis_matrix(b)).is_zero()) return false;
    }
  }
  // v is an ideal of g.
  return is_ideal(g, v);
}

}  // namespace liestab
