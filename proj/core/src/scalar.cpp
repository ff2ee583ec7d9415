#include "weakhopf/scalar.hpp"

#include <cctype>

#include "weakhopf/errors.hpp"

namespace weakhopf {
namespace {

__extension__ typedef unsigned __int128 u128;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_signed(long value, std::uint64_t p) {
  const auto sp = static_cast<long long>(p);
  long long r = static_cast<long long>(value) % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::uint64_t residue_of(const mpz_class& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw PreconditionError("field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(modulus_);
}

Scalar Scalar::integer(const Field& field, long value) {
  if (field.is_rational()) return Scalar(mpq_class(value));
  const auto p = field.characteristic();
  return Scalar(Residue{reduce_signed(value, p), p});
}

Scalar Scalar::fraction(const Field& field, long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return integer(field, num) / integer(field, den);
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den)) {
    throw ParseError("malformed coefficient '" + std::string(text) + "'");
  }
  const mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  const mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den));
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (field.is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const auto p = field.characteristic();
  const Scalar dn(Residue{residue_of(d, p), p});
  if (dn.is_zero()) {
    throw ParseError("denominator of '" + std::string(text) + "' vanishes in " + field.name());
  }
  return Scalar(Residue{residue_of(n, p), p}) / dn;
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

const Scalar::Residue& Scalar::residue_checked(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if (a == nullptr || b == nullptr || a->modulus != b->modulus) {
    throw FieldMismatch("scalar arithmetic across fields " + field().name() + " and " + other.field().name());
  }
  return *b;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    const auto* o = std::get_if<mpq_class>(&other.value_);
    if (o == nullptr) throw FieldMismatch("scalar arithmetic across fields Q and " + other.field().name());
    *q += *o;
    return *this;
  }
  const auto& b = residue_checked(other);
  auto& a = std::get<Residue>(value_);
  a.value = static_cast<std::uint64_t>((static_cast<u128>(a.value) + b.value) % a.modulus);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    const auto* o = std::get_if<mpq_class>(&other.value_);
    if (o == nullptr) throw FieldMismatch("scalar arithmetic across fields Q and " + other.field().name());
    *q *= *o;
    return *this;
  }
  const auto& b = residue_checked(other);
  auto& a = std::get<Residue>(value_);
  a.value = mul_mod(a.value, b.value, a.modulus);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  const auto& ra = std::get<Scalar::Residue>(a.value_);
  const auto& rb = std::get<Scalar::Residue>(b.value_);
  return ra.modulus == rb.modulus && ra.value == rb.value;
}

}  // namespace weakhopf
