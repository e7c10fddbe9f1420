#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "bicomm/error.hpp"

namespace bicomm {

/// The coefficient field: the rationals (characteristic 0) or a prime field F_p
/// with p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  /// Accepts "q" or "fp:P".
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field. Rationals are kept in lowest terms with positive
/// denominator, residues in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }
  /// Textual syntax: optional sign, integer, or a/b with b > 0.
  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue for prime fields; only meaningful when !field().is_rational().
  std::uint32_t residue() const noexcept { return residue_; }
  /// Rational value; only meaningful when field().is_rational().
  const mpq_class& rational() const noexcept { return q_; }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Negative for rationals below zero; residues never print a sign.
  bool is_negative() const noexcept;
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  std::uint32_t residue_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bicomm
