#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace facthom {

/// Raised when an operation combines values or objects over different fields.
class FieldMismatch : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The ground field: either the rationals or a prime field F_p.
class Field {
public:
  constexpr Field() = default;

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "Fp:<p>" and "Fp <p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  /// Characteristic of the field (0 for Q).
  std::uint32_t characteristic() const { return modulus_; }

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

void require_same_field(const Field& a, const Field& b, const char* where);

/// Exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues live in [0, p).
class FieldScalar {
public:
  FieldScalar() = default;
  FieldScalar(const Field& field, long value);
  FieldScalar(const Field& field, const mpq_class& value);

  static FieldScalar zero(const Field& f) { return FieldScalar(f, 0L); }
  static FieldScalar one(const Field& f) { return FieldScalar(f, 1L); }
  /// Parses "n" or "n/d"; over F_p the denominator must be invertible.
  static FieldScalar parse(const Field& field, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful over Q.
  const mpq_class& rational() const { return rational_; }
  /// Only meaningful over F_p.
  std::uint32_t residue() const { return residue_; }

  FieldScalar operator-() const;
  FieldScalar inverse() const;

  FieldScalar& operator+=(const FieldScalar& other);
  FieldScalar& operator-=(const FieldScalar& other);
  FieldScalar& operator*=(const FieldScalar& other);
  FieldScalar& operator/=(const FieldScalar& other);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

  std::string to_string() const;

private:
  Field field_;
  mpq_class rational_;
  std::uint32_t residue_ = 0;
};

/// (-1)^n as a field element.
FieldScalar sign_scalar(const Field& f, long n);

}  // namespace facthom
