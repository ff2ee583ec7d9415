#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace weakhopf {

/// Ground field descriptor: the rationals, or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws PreconditionError unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  /// Zero for the rationals.
  std::uint64_t characteristic() const { return modulus_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues live in [0, p). Arithmetic between different
/// fields throws FieldMismatch.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const Field& field) { return integer(field, 0); }
  static Scalar one(const Field& field) { return integer(field, 1); }
  static Scalar integer(const Field& field, long value);
  static Scalar fraction(const Field& field, long num, long den);
  /// Parses "n" or "n/d" in decimal. Throws ParseError.
  static Scalar parse(const Field& field, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;

  /// Canonical decimal form: "n" or "n/d" for rationals, the residue for F_p.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Scalars over different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  const Residue& residue_checked(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

}  // namespace weakhopf
