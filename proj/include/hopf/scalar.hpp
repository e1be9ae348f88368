#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopf {

/// Raised whenever two scalars (or containers) over different fields meet.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ground field descriptor: the rationals or a prime field F_p (p < 2^31).
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);

  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// Exact field element.
///
/// Rationals are kept reduced with positive denominator; small values live in
/// a pair of int64 and overflow into a shared immutable GMP rational. Prime
/// field values are residues in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, std::int64_t value);
  Scalar(Field field, std::int64_t num, std::int64_t den);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  /// Parses "n", "p/q" or "r mod p" into the given field. Rationals are
  /// reduced mod p when the target is a prime field.
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  /// "p/q", "n" or "r mod p".
  std::string to_string() const;

  /// Image in another field; throws if a denominator vanishes mod p.
  Scalar convert(Field target) const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Rational value (for Q) or the residue as an integer (for F_p).
  mpq_class to_mpq() const;

 private:
  void check_same(const Scalar& o) const;
  void assign_mpq(mpq_class q);
  static Scalar from_i128(Field f, __int128 num, __int128 den);

  Field field_;
  std::int64_t num_ = 0;  // residue when field_ is a prime field
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopf
