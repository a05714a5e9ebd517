#include "splitg2/liestruct.hpp"

#include <string>

namespace splitg2 {

BracketTable::BracketTable(FieldSpec field, std::size_t n)
    : field_(field), n_(n), c_(n * n * n, Scalar::zero(field)) {}

bool BracketTable::cell_equal(const BracketTable& other, std::size_t i, std::size_t j) const {
  for (std::size_t k = 0; k < n_; ++k) {
    if (!((*this)(i, j, k) == other(i, j, k))) return false;
  }
  return true;
}

Map8 bracket(const Map8& d1, const Map8& d2) {
  return Map8(commutator(d1.matrix(), d2.matrix()));
}

BracketTable structure_table(const DerivationSpace& space) {
  if (!space.pinned || space.dim != kDerivationDim) {
    throw Error(ErrorCode::ParameterizationMismatch,
                "structure table needs the pinned 14-dimensional basis (dim = " +
                    std::to_string(space.dim) + ")");
  }
  BracketTable table(space.field, kDerivationDim);
  for (std::size_t i = 0; i < kDerivationDim; ++i) {
    for (std::size_t j = 0; j < kDerivationDim; ++j) {
      const auto params = try_recon(bracket(space.basis[i], space.basis[j]));
      if (!params) {
        throw Error(ErrorCode::NotClosed, "[x" + std::to_string(i + 1) + ", x" +
                                              std::to_string(j + 1) + "] leaves the span");
      }
      for (std::size_t k = 0; k < kDerivationDim; ++k) table(i, j, k) = (*params)[k];
    }
  }
  return table;
}

AxiomReport verify_antisymmetry(const BracketTable& t) {
  AxiomReport report;
  const std::size_t n = t.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        Scalar v = t(i, j, k) + t(j, i, k);
        if (!v.is_zero()) {
          report.violations.push_back({int(i), int(j), int(k), -1, std::move(v)});
        }
      }
    }
  }
  return report;
}

AxiomReport verify_jacobi(const BracketTable& t) {
  AxiomReport report;
  const std::size_t n = t.n();
  // [[x_a, x_b], x_c] coordinate l.
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t l) {
    Scalar s = Scalar::zero(t.field());
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& ab = t(a, b, m);
      if (!ab.is_zero()) s += ab * t(m, c, l);
    }
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          ++report.checked;
          Scalar v = nested(i, j, k, l) + nested(j, k, i, l) + nested(k, i, j, l);
          if (!v.is_zero()) {
            report.violations.push_back({int(i), int(j), int(k), int(l), std::move(v)});
          }
        }
      }
    }
  }
  return report;
}

Matrix killing_form(const BracketTable& t) {
  const std::size_t n = t.n();
  Matrix k(t.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = Scalar::zero(t.field());
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const Scalar& lhs = t(i, a, b);
          if (!lhs.is_zero()) s += lhs * t(j, b, a);
        }
      }
      k(i, j) = std::move(s);
    }
  }
  return k;
}

AxiomReport verify_killing_invariance(const BracketTable& t, const Matrix& killing) {
  AxiomReport report;
  const std::size_t n = t.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        Scalar lhs = Scalar::zero(t.field());
        Scalar rhs = Scalar::zero(t.field());
        for (std::size_t m = 0; m < n; ++m) {
          lhs += t(i, j, m) * killing(m, k);
          rhs += t(j, k, m) * killing(i, m);
        }
        if (!(lhs == rhs)) {
          report.violations.push_back({int(i), int(j), int(k), -1, lhs - rhs});
        }
      }
    }
  }
  return report;
}

Matrix bracket_span_matrix(const BracketTable& t) {
  const std::size_t n = t.n();
  Matrix m(t.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m(i * n + j, k) = t(i, j, k);
    }
  }
  return m;
}

BracketTable reduce_table(const BracketTable& t, const FieldSpec& target) {
  if (t.field() == target) return t;
  if (!t.field().is_rational()) {
    throw Error(ErrorCode::FieldMismatch, "can only reduce rational tables");
  }
  const std::size_t n = t.n();
  BracketTable out(target, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = t(i, j, k);
        if (!c.is_integer()) {
          throw Error(ErrorCode::NotInteger, "structure constant is not an integer: " + c.to_string());
        }
        out(i, j, k) = Scalar::from_integer(target, c.to_integer());
      }
    }
  }
  return out;
}

std::optional<CellMismatch> first_mismatch(const BracketTable& computed,
                                           const BracketTable& expected) {
  if (computed.n() != expected.n()) return CellMismatch{0, 0};
  for (std::size_t i = 0; i < computed.n(); ++i) {
    for (std::size_t j = 0; j < computed.n(); ++j) {
      if (!computed.cell_equal(expected, i, j)) return CellMismatch{i, j};
    }
  }
  return std::nullopt;
}

std::string format_cell(const BracketTable& t, std::size_t i, std::size_t j) {
  std::string out;
  for (std::size_t k = 0; k < t.n(); ++k) {
    const Scalar& c = t(i, j, k);
    if (c.is_zero()) continue;
    std::string coeff = c.to_string();
    if (coeff == "1") {
      coeff.clear();
    } else if (coeff == "-1") {
      coeff = "-";
    }
    if (!out.empty() && (coeff.empty() || coeff.front() != '-')) out += '+';
    out += coeff + "x" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace splitg2
