#include "liestab/gradedalg.hpp"

#include <string>

namespace liestab {

FiniteAlgebra::FiniteAlgebra(std::size_t dim, const FieldSpec& field, std::size_t unit_index,
                             std::vector<Scalar> c)
    : dim_(dim), field_(field), unit_(unit_index), c_(std::move(c)) {
  if (c_.size() != dim_ * dim_ * dim_) throw ShapeError("structure constant tensor size");
  if (unit_ >= dim_) throw ShapeError("unit index out of range");
  auto cc = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return c_[(i * dim_ + j) * dim_ + k];
  };
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Scalar expected = j == k ? Scalar::one(field_) : Scalar::zero(field_);
      if (cc(unit_, j, k) != expected) throw Error("unit law fails on the left");
      if (cc(j, unit_, k) != expected) throw Error("unit law fails on the right");
    }
  }
  // (e_i e_j) e_k = e_i (e_j e_k) on all basis triples.
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t m = 0; m < dim_; ++m) {
          Scalar lhs = Scalar::zero(field_), rhs = Scalar::zero(field_);
          for (std::size_t l = 0; l < dim_; ++l) {
            lhs += cc(i, j, l) * cc(l, k, m);
            rhs += cc(j, k, l) * cc(i, l, m);
          }
          if (lhs != rhs) throw Error("structure constants are not associative");
        }
      }
    }
  }
}

FiniteAlgebra FiniteAlgebra::truncated_polynomial(std::size_t n, const FieldSpec& field) {
  std::int64_t p = field.characteristic();
  if (p <= 0) throw BadSpecError("truncated polynomial algebra needs positive characteristic");
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= static_cast<std::size_t>(p);

  // Exponent vectors in mixed radix base p; index 0 is the unit monomial.
  auto exponents = [&](std::size_t idx) {
    std::vector<std::size_t> e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = idx % static_cast<std::size_t>(p);
      idx /= static_cast<std::size_t>(p);
    }
    return e;
  };

  std::vector<Scalar> c(dim * dim * dim, Scalar::zero(field));
  for (std::size_t i = 0; i < dim; ++i) {
    auto ei = exponents(i);
    for (std::size_t j = 0; j < dim; ++j) {
      auto ej = exponents(j);
      bool truncated = false;
      std::size_t prod = 0, weight = 1;
      for (std::size_t t = 0; t < n; ++t) {
        std::size_t s = ei[t] + ej[t];
        if (s >= static_cast<std::size_t>(p)) {
          truncated = true;
          break;
        }
        prod += s * weight;
        weight *= static_cast<std::size_t>(p);
      }
      if (!truncated) c[(i * dim + j) * dim + prod] = Scalar::one(field);
    }
  }
  return FiniteAlgebra(dim, field, 0, std::move(c));
}

FiniteAlgebra build_graded_algebra(const ExactMatrix& M) {
  if (!M.is_square()) throw ShapeError("M must be square");
  if (M.rows() == 0 || M.is_zero()) {
    throw ZeroMatrixError("graded algebra needs a nonzero multiplication matrix");
  }
  std::size_t d = M.rows();
  std::size_t q = d + 2;  // basis {1, e_1..e_d, e}
  const FieldSpec& field = M.field();
  std::vector<Scalar> c(q * q * q, Scalar::zero(field));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    c[(i * q + j) * q + k] = v;
  };
  for (std::size_t j = 0; j < q; ++j) {
    set(0, j, j, Scalar::one(field));
    if (j != 0) set(j, 0, j, Scalar::one(field));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) set(1 + i, 1 + j, q - 1, M.at(i, j));
  return FiniteAlgebra(q, field, 0, std::move(c));
}

LieSubalgebra derivations(const FiniteAlgebra& a) {
  std::size_t q = a.dim();
  const FieldSpec& field = a.field();
  // Unknowns D_{rc} = coefficient of e_r in D(e_c), flattened row-major.
  // Equation for the pair (i, j), coordinate m:
  //   sum_l c(i,j,l) D_{m,l} - sum_u c(u,j,m) D_{u,i} - sum_v c(i,v,m) D_{v,j} = 0.
  ExactMatrix sys(q * q * q, q * q, field);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t m = 0; m < q; ++m) {
        std::size_t row = (i * q + j) * q + m;
        for (std::size_t l = 0; l < q; ++l) {
          if (!a.c(i, j, l).is_zero()) sys.at(row, m * q + l) += a.c(i, j, l);
        }
        for (std::size_t u = 0; u < q; ++u) {
          if (!a.c(u, j, m).is_zero()) sys.at(row, u * q + i) -= a.c(u, j, m);
        }
        for (std::size_t v = 0; v < q; ++v) {
          if (!a.c(i, v, m).is_zero()) sys.at(row, v * q + j) -= a.c(i, v, m);
        }
      }
    }
  }
  RowSpace span = RowSpace::from_rows(kernel_basis(sys));
  return subalgebra_from_rowspace(q, field, std::move(span), /*verify=*/true);
}

GradedDerivationAlgebra graded_pieces(const ExactMatrix& M) {
  if (M.rows() == 0 || M.is_zero()) throw ZeroMatrixError("graded pieces need a nonzero matrix");
  std::size_t d = M.rows();
  std::size_t q = d + 2;
  const FieldSpec& field = M.field();
  const std::size_t w = d * d;

  // Degree 0: pairs (X, t) with X^T M + M X = t M.
  ExactMatrix sys0(w, w + 1, field);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t row = i * d + j;
      for (std::size_t k = 0; k < d; ++k) {
        if (!M.at(k, j).is_zero()) sys0.at(row, k * d + i) += M.at(k, j);  // (X^T M)_ij
        if (!M.at(i, k).is_zero()) sys0.at(row, k * d + j) += M.at(i, k);  // (M X)_ij
      }
      sys0.at(row, w) -= M.at(i, j);
    }
  }
  ExactMatrix ker0 = kernel_basis(sys0);

  // The weight t is determined by X since M != 0, so projecting away the last
  // coordinate is injective; re-echelonize and recover the weights.
  std::vector<std::vector<Scalar>> xrows;
  for (std::size_t r = 0; r < ker0.rows(); ++r) {
    std::vector<Scalar> x(ker0.row(r));
    x.pop_back();
    xrows.push_back(std::move(x));
  }
  RowSpace deg0_matrices = RowSpace::from_vectors(w, field, xrows);
  if (deg0_matrices.dim() != ker0.rows()) {
    throw Error("internal: weight is not determined by the matrix part");
  }

  std::vector<ExactMatrix> deg0_endos;
  std::vector<Scalar> lambda;
  bool weight_surjective = false;
  for (std::size_t r = 0; r < deg0_matrices.dim(); ++r) {
    ExactMatrix X = ExactMatrix::unflatten(deg0_matrices.basis_vector(r), d, field);
    ExactMatrix lhs = X.transpose() * M + M * X;
    // Unique t with lhs = t M: read off at the first nonzero entry of M.
    Scalar t = Scalar::zero(field);
    for (std::size_t i = 0; i < d && t.is_zero(); ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!M.at(i, j).is_zero()) {
          t = lhs.at(i, j) / M.at(i, j);
          break;
        }
    if (lhs != M.scaled(t)) throw Error("internal: degree-0 element violates the weight relation");
    if (!t.is_zero()) weight_surjective = true;
    lambda.push_back(t);
    ExactMatrix endo(q, q, field);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) endo.at(1 + i, 1 + j) = X.at(i, j);
    endo.at(q - 1, q - 1) = t;
    deg0_endos.push_back(std::move(endo));
  }

  // Degree +1: all of Hom(A_(1), A_(2)).
  std::vector<ExactMatrix> plus_endos;
  for (std::size_t i = 0; i < d; ++i) {
    ExactMatrix endo(q, q, field);
    endo.at(q - 1, 1 + i) = Scalar::one(field);
    plus_endos.push_back(std::move(endo));
  }

  // Degree -1: pairs (v, w), e_i -> v_i 1_A and e -> sum w_l e_l, subject to
  //   v_i e_j + v_j e_i = M_ij sum_l w_l e_l   and   v_i + sum_l M_il w_l = 0.
  ExactMatrix sysm(d * d * d + d, 2 * d, field);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        std::size_t row = (i * d + j) * d + l;
        if (l == j) sysm.at(row, i) += Scalar::one(field);
        if (l == i) sysm.at(row, j) += Scalar::one(field);
        sysm.at(row, d + l) -= M.at(i, j);
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t row = d * d * d + i;
    sysm.at(row, i) = Scalar::one(field);
    for (std::size_t l = 0; l < d; ++l) sysm.at(row, d + l) += M.at(i, l);
  }
  ExactMatrix kerm = kernel_basis(sysm);
  RowSpace minus_pairs = RowSpace::from_rows(kerm);
  std::vector<ExactMatrix> minus_endos;
  for (std::size_t r = 0; r < kerm.rows(); ++r) {
    ExactMatrix endo(q, q, field);
    for (std::size_t i = 0; i < d; ++i) {
      endo.at(0, 1 + i) = kerm.at(r, i);          // e_i -> v_i 1_A
      endo.at(1 + i, q - 1) = kerm.at(r, d + i);  // e -> sum w_l e_l
    }
    minus_endos.push_back(std::move(endo));
  }

  std::vector<ExactMatrix> all;
  for (const auto& e : minus_endos) all.push_back(e);
  for (const auto& e : deg0_endos) all.push_back(e);
  for (const auto& e : plus_endos) all.push_back(e);
  LieSubalgebra total = LieSubalgebra::from_basis(q, field, all);
  LieSubalgebra degree0 = LieSubalgebra::from_basis(q, field, deg0_endos);

  GradedDerivationAlgebra out{
      d,
      std::move(degree0),
      std::move(lambda),
      minus_endos.size(),
      deg0_endos.size(),
      plus_endos.size(),
      std::move(minus_pairs),
      std::move(total),
      deg0_endos.size() - (weight_surjective ? 1 : 0),
  };
  if (out.total.dim() != out.dim_minus1 + out.dim_zero + out.dim_plus1) {
    throw Error("internal: graded pieces are not independent");
  }
  return out;
}

}  // namespace liestab
