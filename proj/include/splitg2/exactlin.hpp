#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "splitg2/field.hpp"

namespace splitg2 {

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_ints(const FieldSpec& field,
                          const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  bool is_zero() const;
  Matrix transpose() const;
  Scalar trace() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Scalar& s, const Matrix& a);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination; the pivot of each column is the first nonzero
/// entry at or below the current row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct NullspaceBasis {
  std::size_t dim = 0;
  std::vector<std::size_t> free_columns;
  /// dim x cols; vector k is 1 at free_columns[k] and 0 at the other free columns.
  Matrix vectors;
};

NullspaceBasis nullspace(const Matrix& m);

/// Solves a x = b for square invertible a; throws InvalidArgument when singular.
Matrix inverse(const Matrix& a);

/// Elementary divisors d1 | d2 | ... (nonzero, positive) of an integer matrix
/// computed over Z. Requires rational entries with denominator 1.
std::vector<mpz_class> smith_diagonal(const Matrix& m);

/// rank over GF(p) predicted from the elementary divisors.
std::size_t rank_mod_p_from_divisors(std::span<const mpz_class> divisors, std::uint64_t p);

/// Entrywise reduction of an integer matrix into another field.
Matrix reduce_into(const Matrix& m, const FieldSpec& target);

}  // namespace splitg2
