#include "liestab/classical.hpp"

#include <charconv>
#include <sstream>

namespace liestab {

namespace {

ExactMatrix unit(std::size_t d, const FieldSpec& f, std::size_t i, std::size_t j) {
  ExactMatrix e(d, d, f);
  e.at(i, j) = Scalar::one(f);
  return e;
}

std::size_t parse_size(const std::string& s) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw SyntaxError("bad size in classical spec: \"" + s + "\"");
  }
  return n;
}

}  // namespace

std::vector<ExactMatrix> symplectic_basis_matrices(std::size_t n, const FieldSpec& f,
                                                   bool alternating_bc, bool traceless_a) {
  std::size_t d = 2 * n;
  std::vector<ExactMatrix> basis;
  // Top-left A with bottom-right -A^T.
  auto a_block = [&](std::size_t i, std::size_t j) {
    ExactMatrix x = unit(d, f, i, j);
    x.at(n + j, n + i) = -Scalar::one(f);
    return x;
  };
  if (traceless_a) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) basis.push_back(a_block(i, j));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      basis.push_back(a_block(i, i) - a_block(i + 1, i + 1));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis.push_back(a_block(i, j));
  }
  // Symmetric (or alternating) B in the top-right, C in the bottom-left.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i == j) {
        if (alternating_bc) continue;
        basis.push_back(unit(d, f, i, n + i));
        basis.push_back(unit(d, f, n + i, i));
      } else {
        basis.push_back(unit(d, f, i, n + j) + unit(d, f, j, n + i));
        basis.push_back(unit(d, f, n + i, j) + unit(d, f, n + j, i));
      }
    }
  }
  return basis;
}

std::vector<ExactMatrix> odiag_basis_matrices(const std::vector<Scalar>& d_entries,
                                              const FieldSpec& field) {
  std::size_t n = d_entries.size();
  for (const auto& v : d_entries) {
    if (v.is_zero()) throw BadSpecError("o(D) needs nonzero diagonal entries");
  }
  std::vector<ExactMatrix> basis;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ExactMatrix x = unit(n, field, i, j);
      x.at(j, i) = -(d_entries[i] / d_entries[j]);
      basis.push_back(std::move(x));
    }
  }
  if (field.characteristic() == 2) {
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit(n, field, i, i));
  }
  return basis;
}

ClassicalSpec ClassicalSpec::parse(const std::string& text) {
  std::size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')') {
    throw SyntaxError("cannot parse classical spec: \"" + text + "\"");
  }
  std::string name = text.substr(0, open);
  std::string args = text.substr(open + 1, text.size() - open - 2);

  ClassicalSpec spec{};
  if (name == "o") {
    spec.family = Family::ODiag;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) spec.diagonal.push_back(item);
    if (spec.diagonal.empty()) throw SyntaxError("o(...) needs at least one diagonal entry");
    spec.n = spec.diagonal.size();
    return spec;
  }

  std::size_t size = parse_size(args);
  if (name == "gl") {
    spec.family = Family::GL;
    spec.n = size;
  } else if (name == "sl") {
    spec.family = Family::SL;
    spec.n = size;
  } else if (name == "sp" || name == "sp1" || name == "sp2") {
    spec.family = name == "sp"    ? Family::Sp
                  : name == "sp1" ? Family::SpDerived1
                                  : Family::SpDerived2;
    if (size == 0 || size % 2 != 0) {
      throw BadSpecError("symplectic size must be a positive even number");
    }
    spec.n = size;
  } else if (name == "scalar") {
    spec.family = Family::ScalarLine;
    spec.n = size;
  } else if (name == "witt") {
    spec.family = Family::Witt;
    if (size == 0) throw BadSpecError("witt(n) needs n >= 1");
    spec.n = size;
  } else {
    throw SyntaxError("unknown classical family: \"" + name + "\"");
  }
  return spec;
}

std::string ClassicalSpec::to_string() const {
  switch (family) {
    case Family::GL: return "gl(" + std::to_string(n) + ")";
    case Family::SL: return "sl(" + std::to_string(n) + ")";
    case Family::ODiag: {
      std::string s = "o(";
      for (std::size_t i = 0; i < diagonal.size(); ++i) {
        if (i) s += ",";
        s += diagonal[i];
      }
      return s + ")";
    }
    case Family::Sp: return "sp(" + std::to_string(n) + ")";
    case Family::SpDerived1: return "sp1(" + std::to_string(n) + ")";
    case Family::SpDerived2: return "sp2(" + std::to_string(n) + ")";
    case Family::ScalarLine: return "scalar(" + std::to_string(n) + ")";
    case Family::Witt: return "witt(" + std::to_string(n) + ")";
  }
  return "?";
}

LieSubalgebra build_classical(const ClassicalSpec& spec, const FieldSpec& field) {
  using Family = ClassicalSpec::Family;
  bool char2 = field.characteristic() == 2;

  switch (spec.family) {
    case Family::GL: {
      std::vector<ExactMatrix> basis;
      for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j) basis.push_back(unit(spec.n, field, i, j));
      return LieSubalgebra::from_basis(spec.n, field, basis);
    }
    case Family::SL: {
      std::vector<ExactMatrix> basis;
      for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
          if (i != j) basis.push_back(unit(spec.n, field, i, j));
      for (std::size_t i = 0; i + 1 < spec.n; ++i) {
        basis.push_back(unit(spec.n, field, i, i) - unit(spec.n, field, i + 1, i + 1));
      }
      return LieSubalgebra::from_basis(spec.n, field, basis);
    }
    case Family::ODiag: {
      std::vector<Scalar> d_entries;
      for (const auto& s : spec.diagonal) d_entries.push_back(Scalar::parse(field, s));
      return LieSubalgebra::from_basis(spec.n, field, odiag_basis_matrices(d_entries, field));
    }
    case Family::Sp:
    case Family::SpDerived1:
    case Family::SpDerived2: {
      std::size_t n = spec.n / 2;
      if (spec.family != Family::Sp && !char2) {
        throw BadSpecError("derived symplectic constructors are characteristic-2 shapes");
      }
      bool alternating = spec.family != Family::Sp;
      bool traceless = spec.family == Family::SpDerived2;
      return LieSubalgebra::from_basis(
          2 * n, field, symplectic_basis_matrices(n, field, alternating, traceless));
    }
    case Family::ScalarLine: {
      std::vector<ExactMatrix> basis{ExactMatrix::identity(spec.n, field)};
      return LieSubalgebra::from_basis(spec.n, field, basis);
    }
    case Family::Witt: {
      if (field.characteristic() == 0) {
        throw BadSpecError("witt(n) needs a field of positive characteristic");
      }
      return derivations(FiniteAlgebra::truncated_polynomial(spec.n, field));
    }
  }
  throw BadSpecError("unhandled classical family");
}

}  // namespace liestab
