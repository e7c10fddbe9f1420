#pragma once

#include <string>
#include <vector>

#include "bicomm/monomial.hpp"
#include "bicomm/scalar.hpp"

namespace bicomm {

struct Term {
  Monomial mono;
  Scalar coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in K[Y, Z]. Terms are kept strictly descending in the
/// weight order with no zero coefficients, so terms().front() is the leading
/// term. Pure-Y, pure-Z and constant monomials are allowed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field field) : field_(field) {}

  static Poly monomial(Field field, Monomial m, Scalar c);
  static Poly monomial(Field field, Monomial m) { return monomial(field, std::move(m), Scalar::one(field)); }
  /// Sorts and combines arbitrary terms.
  static Poly from_terms(Field field, std::vector<Term> terms);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }

  Scalar coefficient(const Monomial& m) const;
  std::uint32_t max_index() const noexcept;
  bool all_mixed() const noexcept;

  /// this += c * shift * other, by a linear merge.
  Poly& add_scaled(const Scalar& c, const Poly& other, const Monomial& shift = Monomial());
  Poly scaled(const Scalar& c) const;
  Poly times(const Monomial& m) const;
  Poly monic() const;
  /// Total degree n part.
  Poly homogeneous_component(std::uint32_t n) const;

  Poly& operator+=(const Poly& other) { return add_scaled(Scalar::one(field_), other); }
  Poly& operator-=(const Poly& other) { return add_scaled(-Scalar::one(field_), other); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return scaled(-Scalar::one(field_)); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Term> terms_;
};

/// Shared printer: "c*m" with sign-separated terms, "0" when empty.
void append_signed_term(std::string& out, const Scalar& c, const std::string& body, bool first);

}  // namespace bicomm
