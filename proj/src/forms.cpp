#include "liestab/forms.hpp"

namespace liestab {

namespace {

// B(x, y) = x^T M y.
Scalar pair(const ExactMatrix& m, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Scalar acc = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero() || y[j].is_zero()) continue;
      acc += x[i] * m.at(i, j) * y[j];
    }
  }
  return acc;
}

void axpy(std::vector<Scalar>& y, const Scalar& a, const std::vector<Scalar>& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

ExactMatrix columns_to_matrix(const FieldSpec& field, std::size_t d,
                              const std::vector<std::vector<Scalar>>& cols) {
  ExactMatrix g(d, cols.size(), field);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) g.at(i, j) = cols[j][i];
  return g;
}

}  // namespace

std::string to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::Antisymmetric: return "antisymmetric";
    case SymmetryClass::Both: return "both";
    case SymmetryClass::Neither: return "neither";
  }
  return "?";
}

BilinearForm::BilinearForm(ExactMatrix m) : gram(std::move(m)) {
  if (!gram.is_square()) throw ShapeError("Gram matrix must be square");
}

bool is_alternating(const ExactMatrix& m) {
  if (m != -m.transpose()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_zero()) return false;
  }
  return true;
}

SymmetryClass classify_symmetry(const BilinearForm& f) {
  bool sym = f.gram == f.gram.transpose();
  bool alt = is_alternating(f.gram);
  if (sym && alt) return SymmetryClass::Both;
  if (sym) return SymmetryClass::Symmetric;
  if (alt) return SymmetryClass::Antisymmetric;
  return SymmetryClass::Neither;
}

ExactMatrix radical_subspace(const BilinearForm& f) {
  if (classify_symmetry(f) == SymmetryClass::Neither) {
    throw NotClassifiableError("form is neither symmetric nor antisymmetric");
  }
  // For M^T = +-M the left and right kernels agree.
  return kernel_basis(f.gram);
}

FormClass normal_form(const BilinearForm& f) {
  SymmetryClass sym = classify_symmetry(f);
  if (sym == SymmetryClass::Neither) {
    throw NotClassifiableError("form is neither symmetric nor antisymmetric");
  }
  const ExactMatrix& M = f.gram;
  const FieldSpec& field = f.field();
  std::size_t d = f.dim();
  bool char2 = field.characteristic() == 2;

  if (M.is_zero()) {
    FormClass fc{FormKind::Zero, d, 0, {}, ExactMatrix::identity(d, field), M};
    return fc;
  }

  // Radical vectors first, then a transverse complement of unit vectors.
  ExactMatrix rad = kernel_basis(M);
  std::size_t m = rad.rows();
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t i = 0; i < m; ++i) basis.push_back(rad.row(i));

  std::vector<bool> rad_pivot(d, false);
  for (std::size_t c : rref(rad).pivots) rad_pivot[c] = true;
  std::vector<std::vector<Scalar>> work;
  for (std::size_t j = 0; j < d; ++j) {
    if (rad_pivot[j]) continue;
    std::vector<Scalar> e(d, Scalar::zero(field));
    e[j] = Scalar::one(field);
    work.push_back(std::move(e));
  }

  FormClass fc{FormKind::Zero, m, 0, {}, ExactMatrix(0, 0, field), ExactMatrix(0, 0, field)};

  if (is_alternating(M)) {
    // Hyperbolic pair extraction; normal shape 0_m + [[0, I], [-I, 0]].
    std::vector<std::vector<Scalar>> us, vs;
    while (!work.empty()) {
      std::size_t pi = 0, pj = 0;
      Scalar c = Scalar::zero(field);
      bool found = false;
      for (std::size_t i = 0; i < work.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < work.size() && !found; ++j) {
          c = pair(M, work[i], work[j]);
          if (!c.is_zero()) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      if (!found) throw Error("internal: degenerate symplectic residual");
      std::vector<Scalar> u = work[pi];
      std::vector<Scalar> v = work[pj];
      Scalar cinv = c.inverse();
      for (auto& x : v) x *= cinv;
      work.erase(work.begin() + pj);
      work.erase(work.begin() + pi);
      for (auto& w : work) {
        Scalar wu = pair(M, w, u), wv = pair(M, w, v);
        axpy(w, -wv, u);
        axpy(w, wu, v);
      }
      us.push_back(std::move(u));
      vs.push_back(std::move(v));
    }
    std::size_t n = us.size();
    for (auto& u : us) basis.push_back(std::move(u));
    for (auto& v : vs) basis.push_back(std::move(v));

    fc.kind = FormKind::Symplectic;
    fc.n = n;
    ExactMatrix normal(d, d, field);
    for (std::size_t i = 0; i < n; ++i) {
      normal.at(m + i, m + n + i) = Scalar::one(field);
      normal.at(m + n + i, m + i) = -Scalar::one(field);
    }
    fc.normal_gram = std::move(normal);
  } else {
    // Symmetric, not alternating: Gram orthogonalization.  In characteristic
    // 2 an alternating residual is merged with the last extracted anisotropic
    // vector to produce three new anisotropic ones.
    std::vector<std::vector<Scalar>> diag_vecs;
    while (!work.empty()) {
      std::size_t sel = work.size();
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (!pair(M, work[i], work[i]).is_zero()) {
          sel = i;
          break;
        }
      }
      if (sel < work.size()) {
        std::vector<Scalar> v = work[sel];
        work.erase(work.begin() + sel);
        Scalar a = pair(M, v, v);
        for (auto& w : work) {
          Scalar coeff = pair(M, w, v) / a;
          axpy(w, -coeff, v);
        }
        diag_vecs.push_back(std::move(v));
        continue;
      }
      // Residual has zero diagonal values.
      std::size_t pi = 0, pj = 0;
      Scalar c = Scalar::zero(field);
      bool found = false;
      for (std::size_t i = 0; i < work.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < work.size() && !found; ++j) {
          c = pair(M, work[i], work[j]);
          if (!c.is_zero()) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      if (!found) throw Error("internal: degenerate diagonal residual");
      if (!char2) {
        // B(w_i + w_j, w_i + w_j) = 2c != 0; retry the anisotropic scan.
        axpy(work[pi], Scalar::one(field), work[pj]);
        continue;
      }
      // Characteristic 2: the residual is alternating.  Pull out one
      // hyperbolic pair (e1, e2) with B(e1, e2) = 1, recombine with the last
      // diagonal vector v (value a) into three mutually orthogonal
      // anisotropic vectors v + e1, v + a*e2, v + e1 + a*e2.
      if (diag_vecs.empty()) throw Error("internal: alternating residual without anisotropic stock");
      std::vector<Scalar> e1 = work[pi];
      std::vector<Scalar> e2 = work[pj];
      Scalar cinv = c.inverse();
      for (auto& x : e2) x *= cinv;
      work.erase(work.begin() + pj);
      work.erase(work.begin() + pi);
      for (auto& w : work) {
        Scalar w1 = pair(M, w, e1), w2 = pair(M, w, e2);
        axpy(w, -w2, e1);
        axpy(w, w1, e2);
      }
      std::vector<Scalar> v = std::move(diag_vecs.back());
      diag_vecs.pop_back();
      Scalar a = pair(M, v, v);
      std::vector<Scalar> u1 = v, u2 = v, u3 = v;
      axpy(u1, Scalar::one(field), e1);
      axpy(u2, a, e2);
      axpy(u3, Scalar::one(field), e1);
      axpy(u3, a, e2);
      diag_vecs.push_back(std::move(u1));
      diag_vecs.push_back(std::move(u2));
      diag_vecs.push_back(std::move(u3));
    }

    fc.kind = FormKind::Diagonal;
    ExactMatrix normal(d, d, field);
    for (std::size_t i = 0; i < diag_vecs.size(); ++i) {
      Scalar a = pair(M, diag_vecs[i], diag_vecs[i]);
      fc.diagonal.push_back(a);
      normal.at(m + i, m + i) = a;
    }
    for (auto& v : diag_vecs) basis.push_back(std::move(v));
    fc.normal_gram = std::move(normal);
  }

  fc.transform = columns_to_matrix(field, d, basis);
  if (!try_inverse(fc.transform)) throw Error("internal: normal-form transform is singular");
  if (congruence(M, fc.transform) != fc.normal_gram) {
    throw Error("internal: g^T M g does not match the normal Gram matrix");
  }
  return fc;
}

FormClass rescale_squares(const FormClass& fc) {
  if (fc.kind != FormKind::Diagonal || !fc.transform.field().is_prime_field()) return fc;
  FormClass out = fc;
  const FieldSpec& field = fc.transform.field();
  for (std::size_t i = 0; i < out.diagonal.size(); ++i) {
    if (out.diagonal[i].is_one() || !is_square(out.diagonal[i])) continue;
    Scalar root = sqrt_exhaustive(out.diagonal[i]);
    Scalar rinv = root.inverse();
    std::size_t col = out.m + i;
    for (std::size_t r = 0; r < out.transform.rows(); ++r) {
      out.transform.at(r, col) *= rinv;
    }
    out.diagonal[i] = Scalar::one(field);
    out.normal_gram.at(col, col) = Scalar::one(field);
  }
  return out;
}

}  // namespace liestab
