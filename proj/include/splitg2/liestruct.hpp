#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitg2/dergen.hpp"

namespace splitg2 {

/// Structure constants: [x_i, x_j] = sum_k c(i, j, k) x_k with zero-based indices.
class BracketTable {
 public:
  BracketTable() = default;
  BracketTable(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * n_ + j) * n_ + k];
  }

  bool cell_equal(const BracketTable& other, std::size_t i, std::size_t j) const;

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  FieldSpec field_;
  std::size_t n_ = 0;
  std::vector<Scalar> c_;
};

Map8 bracket(const Map8& d1, const Map8& d2);

BracketTable structure_table(const DerivationSpace& space);

/// One failed axiom instance; indices are zero-based, unused ones are -1.
struct Violation {
  int i = -1;
  int j = -1;
  int k = -1;
  int l = -1;
  Scalar value;
};

struct AxiomReport {
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

AxiomReport verify_antisymmetry(const BracketTable& t);
/// All i < j < k and every output coordinate l.
AxiomReport verify_jacobi(const BracketTable& t);

/// K(i, j) = trace(ad x_i o ad x_j).
Matrix killing_form(const BracketTable& t);
/// Checks K([x_i, x_j], x_k) = K(x_i, [x_j, x_k]) on all basis triples.
AxiomReport verify_killing_invariance(const BracketTable& t, const Matrix& killing);

/// The n^2 x n matrix whose rows are the coefficient vectors of all brackets.
Matrix bracket_span_matrix(const BracketTable& t);

/// Reduces an integer table into another field; NotInteger otherwise.
BracketTable reduce_table(const BracketTable& t, const FieldSpec& target);

struct CellMismatch {
  std::size_t i;
  std::size_t j;
};

/// First differing cell in row-major order.
std::optional<CellMismatch> first_mismatch(const BracketTable& computed,
                                           const BracketTable& expected);

/// Renders one cell compactly: "0", "x1", "-2x14", "2x4-x8".
std::string format_cell(const BracketTable& t, std::size_t i, std::size_t j);

}  // namespace splitg2
