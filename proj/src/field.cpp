#include "splitg2/field.hpp"

#include <cctype>
#include <limits>

namespace splitg2 {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotInteger: return "NotInteger";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ParameterizationMismatch: return "ParameterizationMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus " + std::to_string(p) + " too large (must be below 2^32)");
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidModulus, "modulus not prime: " + std::to_string(p));
  }
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    auto digits = text.substr(3);
    if (digits.empty() || digits.size() > 19) {
      throw Error(ErrorCode::ParseError, "bad field modulus in '" + std::string(text) + "'");
    }
    std::uint64_t p = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::ParseError, "bad field modulus in '" + std::string(text) + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return prime(p);
  }
  throw Error(ErrorCode::ParseError,
              "unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("q") : "fp:" + std::to_string(modulus_);
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::FieldMismatch,
                "field mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

namespace {

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Scalar::Scalar(FieldSpec field, mpq_class value) : field_(field), value_(std::move(value)) {}

Scalar::Scalar(FieldSpec field, std::uint64_t residue) : field_(field), value_(residue) {}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long value) {
  return from_integer(field, mpz_class(value));
}

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& value) {
  if (field.is_rational()) return Scalar(field, mpq_class(value));
  return Scalar(field, reduce_mpz(value, field.modulus()));
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class v(value);
    v.canonicalize();
    return Scalar(field, std::move(v));
  }
  const std::uint64_t den = reduce_mpz(value.get_den(), field.modulus());
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero,
                "denominator of " + value.get_str() + " vanishes in " + field.to_string());
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), field.modulus());
  const std::uint64_t p = field.modulus();
  return Scalar(field, num * pow_mod(den, p - 2, p) % p);
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::ParseError,
                 "invalid scalar '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&](std::string& out) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos++]);
    }
  };
  std::string num;
  std::string den;
  read_digits(num);
  if (num.empty()) throw fail("expected digits");
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    read_digits(den);
    if (den.empty()) throw fail("expected denominator digits");
  }
  if (pos != text.size()) throw fail("trailing characters");
  mpz_class n(num, 10);
  if (negative) n = -n;
  if (den.empty()) return from_integer(field, n);
  mpz_class d(den, 10);
  if (d == 0) throw fail("zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return from_rational(field, q);
}

bool Scalar::is_zero() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

bool Scalar::is_integer() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_den() == 1;
  return true;
}

mpz_class Scalar::to_integer() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    if (q->get_den() != 1) {
      throw Error(ErrorCode::NotInteger, "not an integer: " + q->get_str());
    }
    return q->get_num();
  }
  return mpz_class(static_cast<unsigned long>(std::get<std::uint64_t>(value_)));
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::FieldMismatch, "scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw Error(ErrorCode::FieldMismatch, "scalar is not a residue");
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(field_, mpq_class(-*q));
  const std::uint64_t r = std::get<std::uint64_t>(value_);
  return Scalar(field_, r == 0 ? 0 : field_.modulus() - r);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(field_, mpq_class(1 / *q));
  }
  const std::uint64_t p = field_.modulus();
  return Scalar(field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  if (a.field_.is_rational()) {
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
  }
  const std::uint64_t p = a.field_.modulus();
  return Scalar(a.field_, (std::get<std::uint64_t>(a.value_) + std::get<std::uint64_t>(b.value_)) % p);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  if (a.field_.is_rational()) {
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
  }
  const std::uint64_t p = a.field_.modulus();
  return Scalar(a.field_, std::get<std::uint64_t>(a.value_) * std::get<std::uint64_t>(b.value_) % p);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_inv(const Scalar& a) { return a.inv(); }

}  // namespace splitg2
