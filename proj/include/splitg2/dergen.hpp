#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "splitg2/exactlin.hpp"
#include "splitg2/zorn.hpp"

namespace splitg2 {

/// A linear endomorphism of the octonions. Row i holds the coordinates of the
/// image of basis element i, so a map acts on a coordinate row vector from the
/// right: coords(d(z)) = coords(z) * m.
class Map8 {
 public:
  Map8() = default;
  explicit Map8(Matrix m);

  static Map8 zero(const FieldSpec& field);
  static Map8 identity(const FieldSpec& field);

  const Matrix& matrix() const noexcept { return m_; }
  const FieldSpec& field() const noexcept { return m_.field(); }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  ZornMatrix apply(const ZornMatrix& z) const;

  friend bool operator==(const Map8&, const Map8&) = default;

 private:
  Matrix m_;
};

inline constexpr std::size_t kDerivationDim = 14;

/// Parameter names in basis order: parameter k is the coefficient of x_{k+1}.
inline constexpr std::array<std::string_view, kDerivationDim> kParamNames = {
    "u11", "u12", "u13", "u31", "u32", "u33", "u41",
    "u42", "u43", "u51", "u52", "v11", "v12", "v13"};

/// Entry (row, col), zero-based, of the generic derivation that equals
/// parameter k. recon reads the parameters from these positions.
inline constexpr std::array<std::array<std::size_t, 2>, kDerivationDim> kReconPositions = {{
    {0, 2}, {0, 3}, {0, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 2},
    {3, 3}, {3, 4}, {4, 2}, {4, 3}, {0, 5}, {0, 6}, {0, 7}}};

struct DerivationParams {
  std::array<Scalar, kDerivationDim> values;

  static DerivationParams zero(const FieldSpec& field);
  static DerivationParams unit(const FieldSpec& field, std::size_t k);

  const FieldSpec& field() const { return values[0].field(); }
  const Scalar& operator[](std::size_t k) const { return values[k]; }
  Scalar& operator[](std::size_t k) { return values[k]; }

  friend bool operator==(const DerivationParams&, const DerivationParams&) = default;
};

struct DerivationSpace {
  FieldSpec field;
  std::size_t dim = 0;
  /// True when the basis is x1..x14 of the pinned parameterization; otherwise
  /// the basis is the raw free-column nullspace basis.
  bool pinned = false;
  std::vector<Map8> basis;
};

/// D(xy) - D(x)y - xD(y)
ZornMatrix leibniz_residual(const Map8& d, const ZornMatrix& x, const ZornMatrix& y);

/// 512 x 64 constraint matrix. Unknown r*8+c is entry (r, c) of the map; row
/// (i*8+j)*8+k is coordinate k of the residual on the basis pair (e_i, e_j).
Matrix assemble_leibniz_system(const FieldSpec& field);

DerivationSpace solve_derivations(const FieldSpec& field);

Map8 generic_derivation(const DerivationParams& params);
bool is_derivation(const Map8& d);

/// Reads the 14 parameters and checks that they reproduce d; NotInSpan otherwise.
DerivationParams recon(const Map8& d);
/// Same as recon but reports failure as nullopt.
std::optional<DerivationParams> try_recon(const Map8& d);

/// Unflattens a 64-vector in the unknown ordering of the Leibniz system.
Map8 map_from_unknowns(const FieldSpec& field, std::span<const Scalar> unknowns);

}  // namespace splitg2
