#include "splitg2/dergen.hpp"

#include <string>

namespace splitg2 {

Map8::Map8(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != kOctonionDim || m_.cols() != kOctonionDim) {
    throw Error(ErrorCode::ShapeMismatch, "a Map8 must be 8x8, got " + std::to_string(m_.rows()) +
                                              "x" + std::to_string(m_.cols()));
  }
}

Map8 Map8::zero(const FieldSpec& field) { return Map8(Matrix(field, 8, 8)); }

Map8 Map8::identity(const FieldSpec& field) { return Map8(Matrix::identity(field, 8)); }

ZornMatrix Map8::apply(const ZornMatrix& z) const {
  require_field(z, field());
  const Coord8 in = coords_of(z);
  Coord8 out;
  out.fill(Scalar::zero(field()));
  for (std::size_t r = 0; r < 8; ++r) {
    if (in[r].is_zero()) continue;
    for (std::size_t c = 0; c < 8; ++c) {
      if (!m_(r, c).is_zero()) out[c] += in[r] * m_(r, c);
    }
  }
  return zorn_of_coords(out);
}

DerivationParams DerivationParams::zero(const FieldSpec& field) {
  DerivationParams p;
  p.values.fill(Scalar::zero(field));
  return p;
}

DerivationParams DerivationParams::unit(const FieldSpec& field, std::size_t k) {
  if (k >= kDerivationDim) {
    throw Error(ErrorCode::InvalidArgument, "parameter index out of range: " + std::to_string(k));
  }
  DerivationParams p = zero(field);
  p.values[k] = Scalar::one(field);
  return p;
}

ZornMatrix leibniz_residual(const Map8& d, const ZornMatrix& x, const ZornMatrix& y) {
  require_field(x, d.field());
  require_field(y, d.field());
  const ZornMatrix dxy = d.apply(zmul(x, y));
  return zsub(zsub(dxy, zmul(d.apply(x), y)), zmul(x, d.apply(y)));
}

Matrix assemble_leibniz_system(const FieldSpec& field) {
  const auto basis = octonion_basis(field);
  Matrix system(field, 512, 64);
  // The residual is linear in d, so column u is the residual of the map with
  // a single 1 at unknown u.
  for (std::size_t u = 0; u < 64; ++u) {
    Matrix unit(field, 8, 8);
    unit(u / 8, u % 8) = Scalar::one(field);
    const Map8 d(std::move(unit));
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        const Coord8 res = coords_of(leibniz_residual(d, basis[i], basis[j]));
        for (std::size_t k = 0; k < 8; ++k) system((i * 8 + j) * 8 + k, u) = res[k];
      }
    }
  }
  return system;
}

Map8 map_from_unknowns(const FieldSpec& field, std::span<const Scalar> unknowns) {
  if (unknowns.size() != 64) {
    throw Error(ErrorCode::ShapeMismatch, "expected 64 unknowns, got " + std::to_string(unknowns.size()));
  }
  return Map8(Matrix(field, 8, 8, {unknowns.begin(), unknowns.end()}));
}

DerivationSpace solve_derivations(const FieldSpec& field) {
  const NullspaceBasis kernel = nullspace(assemble_leibniz_system(field));
  DerivationSpace space;
  space.field = field;
  space.dim = kernel.dim;

  if (kernel.dim != kDerivationDim) {
    for (std::size_t k = 0; k < kernel.dim; ++k) {
      space.basis.push_back(map_from_unknowns(field, kernel.vectors.row(k)));
    }
    return space;
  }

  // Change of basis so that the kernel restricted to the recon positions is
  // the identity; basis vector k then has parameter k equal to 1.
  Matrix restriction(field, kDerivationDim, kDerivationDim);
  for (std::size_t t = 0; t < kDerivationDim; ++t) {
    for (std::size_t k = 0; k < kDerivationDim; ++k) {
      const auto [r, c] = kReconPositions[k];
      restriction(t, k) = kernel.vectors(t, r * 8 + c);
    }
  }
  Matrix change;
  try {
    change = inverse(restriction);
  } catch (const Error&) {
    throw Error(ErrorCode::ParameterizationMismatch,
                "the pinned parameter positions are not free coordinates of the derivation "
                "space over " + field.to_string());
  }
  const Matrix pinned = mat_mul(change, kernel.vectors);
  for (std::size_t k = 0; k < kDerivationDim; ++k) {
    space.basis.push_back(map_from_unknowns(field, pinned.row(k)));
  }
  space.pinned = true;
  return space;
}

Map8 generic_derivation(const DerivationParams& params) {
  const FieldSpec& field = params.field();
  const auto& [u11, u12, u13, u31, u32, u33, u41, u42, u43, u51, u52, v11, v12, v13] = params.values;
  const Scalar o = Scalar::zero(field);
  const Scalar s = u31 + u42;
  std::vector<Scalar> e = {
      o,    o,    u11,  u12,  u13,  v11,  v12,  v13,
      o,    o,    -u11, -u12, -u13, -v11, -v12, -v13,
      -v11, v11,  u31,  u32,  u33,  o,    u13,  -u12,
      -v12, v12,  u41,  u42,  u43,  -u13, o,    u11,
      -v13, v13,  u51,  u52,  -s,   u12,  -u11, o,
      -u11, u11,  o,    v13,  -v12, -u31, -u41, -u51,
      -u12, u12,  -v13, o,    v11,  -u32, -u42, -u52,
      -u13, u13,  v12,  -v11, o,    -u33, -u43, s,
  };
  return Map8(Matrix(field, 8, 8, std::move(e)));
}

bool is_derivation(const Map8& d) {
  const auto basis = octonion_basis(d.field());
  for (const ZornMatrix& x : basis) {
    for (const ZornMatrix& y : basis) {
      if (!leibniz_residual(d, x, y).is_zero()) return false;
    }
  }
  return true;
}

namespace {

DerivationParams read_params(const Map8& d) {
  DerivationParams p = DerivationParams::zero(d.field());
  for (std::size_t k = 0; k < kDerivationDim; ++k) {
    const auto [r, c] = kReconPositions[k];
    p[k] = d(r, c);
  }
  return p;
}

}  // namespace

std::optional<DerivationParams> try_recon(const Map8& d) {
  DerivationParams p = read_params(d);
  if (generic_derivation(p) == d) return p;
  return std::nullopt;
}

DerivationParams recon(const Map8& d) {
  DerivationParams p = read_params(d);
  const Map8 rebuilt = generic_derivation(p);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      if (rebuilt(r, c) == d(r, c)) continue;
      throw Error(ErrorCode::NotInSpan,
                  "matrix is not in the derivation span: entry (" + std::to_string(r + 1) + ", " +
                      std::to_string(c + 1) + ") is " + d(r, c).to_string() +
                      " but the reconstructed derivation has " + rebuilt(r, c).to_string());
    }
  }
  return p;
}

}  // namespace splitg2
