#include "facthom/field.hpp"

#include <charconv>
#include <sstream>

namespace facthom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.rfind("Fp ", 0) == 0)
    digits = text.substr(3);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  else
    throw std::invalid_argument("unknown field '" + text + "' (expected Q or Fp:<prime>)");
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("bad field modulus in '" + text + "'");
  return prime(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

void require_same_field(const Field& a, const Field& b, const char* where) {
  if (!(a == b)) throw FieldMismatch(std::string(where) + ": field mismatch (" + a.name() + " vs " + b.name() + ")");
}

namespace {

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FieldScalar::FieldScalar(const Field& field, long value) : field_(field) {
  if (field.is_rational()) {
    rational_ = value;
  } else {
    long p = field.modulus();
    long r = value % p;
    if (r < 0) r += p;
    residue_ = static_cast<std::uint32_t>(r);
  }
}

FieldScalar::FieldScalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    rational_ = value;
    rational_.canonicalize();
  } else {
    mpq_class v = value;
    v.canonicalize();
    std::uint32_t p = field.modulus();
    std::uint32_t den = reduce_mod(v.get_den(), p);
    if (den == 0) throw std::domain_error("denominator is not invertible in " + field.name());
    std::uint64_t num = reduce_mod(v.get_num(), p);
    residue_ = static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
  }
}

FieldScalar FieldScalar::parse(const Field& field, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return FieldScalar(field, q);
}

bool FieldScalar::is_zero() const { return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0; }

bool FieldScalar::is_one() const { return field_.is_rational() ? rational_ == 1 : residue_ == 1; }

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  if (field_.is_rational())
    r.rational_ = -rational_;
  else if (residue_ != 0)
    r.residue_ = field_.modulus() - residue_;
  return r;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  FieldScalar r = *this;
  if (field_.is_rational())
    r.rational_ = 1 / rational_;
  else
    r.residue_ = pow_mod(residue_, field_.modulus() - 2, field_.modulus());
  return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  require_same_field(field_, o.field_, "scalar addition");
  if (field_.is_rational())
    rational_ += o.rational_;
  else
    residue_ = static_cast<std::uint32_t>((std::uint64_t(residue_) + o.residue_) % field_.modulus());
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) { return *this += -o; }

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  require_same_field(field_, o.field_, "scalar multiplication");
  if (field_.is_rational())
    rational_ *= o.rational_;
  else
    residue_ = static_cast<std::uint32_t>(std::uint64_t(residue_) * o.residue_ % field_.modulus());
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) { return *this *= o.inverse(); }

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string FieldScalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

FieldScalar sign_scalar(const Field& f, long n) { return FieldScalar(f, (n % 2 == 0) ? 1L : -1L); }

}  // namespace facthom
