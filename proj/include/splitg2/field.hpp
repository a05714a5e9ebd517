#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "splitg2/error.hpp"

namespace splitg2 {

/// The base field: the rationals or a prime field GF(p).
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  FieldSpec() = default;

  static FieldSpec rationals() { return {}; }
  /// Throws InvalidModulus unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An immutable exact field element. Rationals are kept as reduced fractions
/// with positive denominator, residues in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long value);
  static Scalar from_integer(const FieldSpec& field, const mpz_class& value);
  static Scalar from_rational(const FieldSpec& field, const mpq_class& value);
  /// "n" or "n/d" in base 10 with optional leading minus.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True for rationals with denominator 1; always true over GF(p).
  bool is_integer() const noexcept;
  /// Numerator for integral rationals, the residue over GF(p).
  mpz_class to_integer() const;
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inv() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  Scalar(FieldSpec field, mpq_class value);
  Scalar(FieldSpec field, std::uint64_t residue);

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_inv(const Scalar& a);

void require_same_field(const FieldSpec& a, const FieldSpec& b);

}  // namespace splitg2
