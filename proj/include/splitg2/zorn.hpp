#pragma once

#include <array>
#include <string>
#include <string_view>

#include "splitg2/field.hpp"

namespace splitg2 {

struct Vec3 {
  std::array<Scalar, 3> e;

  static Vec3 zero(const FieldSpec& field);

  const FieldSpec& field() const { return e[0].field(); }
  const Scalar& operator[](std::size_t i) const { return e[i]; }
  Scalar& operator[](std::size_t i) { return e[i]; }

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 cross(const Vec3& u, const Vec3& v);
Scalar dot(const Vec3& u, const Vec3& v);

/// A split octonion written as the vector matrix (a, x; y, b).
struct ZornMatrix {
  Scalar a;
  Vec3 x;
  Vec3 y;
  Scalar b;

  const FieldSpec& field() const { return a.field(); }
  bool is_zero() const;

  friend bool operator==(const ZornMatrix&, const ZornMatrix&) = default;
};

/// Coefficients in the ordered basis (A, B, C1, C2, C3, D1, D2, D3).
using Coord8 = std::array<Scalar, 8>;

inline constexpr std::size_t kOctonionDim = 8;

ZornMatrix zmul(const ZornMatrix& p, const ZornMatrix& q);
ZornMatrix zlin(const Scalar& s, const ZornMatrix& p, const Scalar& t, const ZornMatrix& q);
ZornMatrix zadd(const ZornMatrix& p, const ZornMatrix& q);
ZornMatrix zsub(const ZornMatrix& p, const ZornMatrix& q);
ZornMatrix zscale(const Scalar& s, const ZornMatrix& p);

Coord8 coords_of(const ZornMatrix& z);
ZornMatrix zorn_of_coords(const Coord8& c);

/// A, B, C1, C2, C3, D1, D2, D3 in that order.
std::array<ZornMatrix, 8> octonion_basis(const FieldSpec& field);
ZornMatrix basis_element(const FieldSpec& field, std::size_t index);
ZornMatrix zorn_zero(const FieldSpec& field);  // theta
ZornMatrix zorn_unit(const FieldSpec& field);  // Upsilon

/// Names accepted on the command line: A, B, C1..C3, D1..D3, Y, ZERO.
bool is_basis_name(std::string_view name);
ZornMatrix zorn_from_name(const FieldSpec& field, std::string_view name);
const char* basis_name(std::size_t index);

void require_field(const ZornMatrix& z, const FieldSpec& field);

}  // namespace splitg2
