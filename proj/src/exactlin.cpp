#include "splitg2/exactlin.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace splitg2 {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "shape mismatch: " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch, "entry count " + std::to_string(entries_.size()) +
                                              " does not match " + shape(*this));
  }
  for (const Scalar& s : entries_) require_same_field(field_, s.field());
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(field, rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw Error(ErrorCode::ShapeMismatch, "trace of non-square " + shape(*this));
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  require_same_shape(a, b);
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  require_same_shape(a, b);
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

Matrix mat_scale(const Scalar& s, const Matrix& a) {
  require_same_field(s.field(), a.field());
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
  }
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "commutator of non-square " + shape(a));
  }
  require_same_shape(a, b);
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(pivot, j), r(row, j));
    }
    const Scalar inv = r(row, col).inv();
    for (std::size_t j = col; j < r.cols(); ++j) {
      if (!r(row, j).is_zero()) r(row, j) = r(row, j) * inv;
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= factor * r(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

NullspaceBasis nullspace(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  NullspaceBasis out;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(c);
  }
  out.dim = out.free_columns.size();
  out.vectors = Matrix(m.field(), out.dim, m.cols());
  for (std::size_t k = 0; k < out.dim; ++k) {
    const std::size_t f = out.free_columns[k];
    out.vectors(k, f) = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      out.vectors(k, pivots[r]) = -reduced(r, f);
    }
  }
  return out;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square " + shape(a));
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Scalar::one(a.field());
  }
  const auto [reduced, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  }
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
  }
  return inv;
}

std::vector<mpz_class> smith_diagonal(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& s = m(i, j);
      if (!s.field().is_rational() || !s.is_integer()) {
        throw Error(ErrorCode::NotInteger, "entry (" + std::to_string(i) + ", " +
                                               std::to_string(j) + ") is not an integer: " +
                                               s.to_string());
      }
      a[i][j] = s.to_integer();
    }
  }

  auto swap_rows = [&](std::size_t i, std::size_t k) { std::swap(a[i], a[k]); };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    for (auto& row : a) std::swap(row[j], row[k]);
  };
  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  auto bring_min_to = [&](std::size_t t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (bi == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  };

  std::vector<mpz_class> diagonal;
  const std::size_t limit = std::min(rows, cols);
  mpz_class q;
  for (std::size_t t = 0; t < limit; ++t) {
    if (!bring_min_to(t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) {
          if (a[t][j] != 0) a[i][j] -= q * a[t][j];
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) {
          if (a[i][t] != 0) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived in row or column t.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] != 0 && mpz_cmpabs(a[i][t].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) { bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] != 0 && mpz_cmpabs(a[t][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) { bi = t; bj = j; }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility d_t | every remaining entry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diagonal.push_back(abs(a[t][t]));
  }
  return diagonal;
}

std::size_t rank_mod_p_from_divisors(std::span<const mpz_class> divisors, std::uint64_t p) {
  std::size_t r = 0;
  for (const mpz_class& d : divisors) {
    if (p == 0 || !mpz_divisible_ui_p(d.get_mpz_t(), p)) ++r;
  }
  return r;
}

Matrix reduce_into(const Matrix& m, const FieldSpec& target) {
  if (m.field() == target) return m;
  if (!m.field().is_rational()) {
    throw Error(ErrorCode::FieldMismatch,
                "can only reduce rational matrices, got " + m.field().to_string());
  }
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = Scalar::from_rational(target, m(i, j).rational());
    }
  }
  return out;
}

}  // namespace splitg2
