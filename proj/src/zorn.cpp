#include "splitg2/zorn.hpp"

#include <string>

namespace splitg2 {

namespace {

constexpr const char* kBasisNames[8] = {"A", "B", "C1", "C2", "C3", "D1", "D2", "D3"};

void require_vec(const Vec3& u, const Vec3& v) {
  for (std::size_t i = 0; i < 3; ++i) {
    require_same_field(u[0].field(), u[i].field());
    require_same_field(u[0].field(), v[i].field());
  }
}

Vec3 vadd(const Vec3& u, const Vec3& v) { return {{u[0] + v[0], u[1] + v[1], u[2] + v[2]}}; }
Vec3 vsub(const Vec3& u, const Vec3& v) { return {{u[0] - v[0], u[1] - v[1], u[2] - v[2]}}; }
Vec3 vscale(const Scalar& s, const Vec3& u) { return {{s * u[0], s * u[1], s * u[2]}}; }

}  // namespace

Vec3 Vec3::zero(const FieldSpec& field) {
  const Scalar z = Scalar::zero(field);
  return {{z, z, z}};
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  require_vec(u, v);
  return {{u[1] * v[2] - u[2] * v[1],
           u[2] * v[0] - u[0] * v[2],
           u[0] * v[1] - u[1] * v[0]}};
}

Scalar dot(const Vec3& u, const Vec3& v) {
  require_vec(u, v);
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

bool ZornMatrix::is_zero() const {
  if (!a.is_zero() || !b.is_zero()) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!x[i].is_zero() || !y[i].is_zero()) return false;
  }
  return true;
}

// (a, x; y, b)(c, z; t, d) = (ac + x.t, az + dx - y^t; cy + bt + x^z, bd + y.z)
ZornMatrix zmul(const ZornMatrix& p, const ZornMatrix& q) {
  require_same_field(p.field(), q.field());
  return {p.a * q.a + dot(p.x, q.y),
          vsub(vadd(vscale(p.a, q.x), vscale(q.b, p.x)), cross(p.y, q.y)),
          vadd(vadd(vscale(q.a, p.y), vscale(p.b, q.y)), cross(p.x, q.x)),
          p.b * q.b + dot(p.y, q.x)};
}

ZornMatrix zlin(const Scalar& s, const ZornMatrix& p, const Scalar& t, const ZornMatrix& q) {
  return zadd(zscale(s, p), zscale(t, q));
}

ZornMatrix zadd(const ZornMatrix& p, const ZornMatrix& q) {
  return {p.a + q.a, vadd(p.x, q.x), vadd(p.y, q.y), p.b + q.b};
}

ZornMatrix zsub(const ZornMatrix& p, const ZornMatrix& q) {
  return {p.a - q.a, vsub(p.x, q.x), vsub(p.y, q.y), p.b - q.b};
}

ZornMatrix zscale(const Scalar& s, const ZornMatrix& p) {
  return {s * p.a, vscale(s, p.x), vscale(s, p.y), s * p.b};
}

Coord8 coords_of(const ZornMatrix& z) {
  return {z.a, z.b, z.x[0], z.x[1], z.x[2], z.y[0], z.y[1], z.y[2]};
}

ZornMatrix zorn_of_coords(const Coord8& c) {
  return {c[0], {{c[2], c[3], c[4]}}, {{c[5], c[6], c[7]}}, c[1]};
}

ZornMatrix basis_element(const FieldSpec& field, std::size_t index) {
  if (index >= kOctonionDim) {
    throw Error(ErrorCode::InvalidArgument, "basis index out of range: " + std::to_string(index));
  }
  Coord8 c;
  c.fill(Scalar::zero(field));
  c[index] = Scalar::one(field);
  return zorn_of_coords(c);
}

std::array<ZornMatrix, 8> octonion_basis(const FieldSpec& field) {
  std::array<ZornMatrix, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = basis_element(field, i);
  return out;
}

ZornMatrix zorn_zero(const FieldSpec& field) {
  const Scalar z = Scalar::zero(field);
  return {z, Vec3::zero(field), Vec3::zero(field), z};
}

ZornMatrix zorn_unit(const FieldSpec& field) {
  ZornMatrix u = zorn_zero(field);
  u.a = Scalar::one(field);
  u.b = Scalar::one(field);
  return u;
}

const char* basis_name(std::size_t index) {
  return index < kOctonionDim ? kBasisNames[index] : "?";
}

bool is_basis_name(std::string_view name) {
  if (name == "Y" || name == "ZERO") return true;
  for (const char* n : kBasisNames) {
    if (name == n) return true;
  }
  return false;
}

ZornMatrix zorn_from_name(const FieldSpec& field, std::string_view name) {
  if (name == "Y") return zorn_unit(field);
  if (name == "ZERO") return zorn_zero(field);
  for (std::size_t i = 0; i < kOctonionDim; ++i) {
    if (name == kBasisNames[i]) return basis_element(field, i);
  }
  throw Error(ErrorCode::ParseError, "unknown basis name '" + std::string(name) + "'");
}

void require_field(const ZornMatrix& z, const FieldSpec& field) {
  for (const Scalar& s : coords_of(z)) require_same_field(s.field(), field);
}

}  // namespace splitg2
