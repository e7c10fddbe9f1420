#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bicomm/monomial.hpp"
#include "bicomm/poly.hpp"
#include "bicomm/scalar.hpp"
#include "bicomm/term.hpp"

namespace bicomm {

/// Strictly increasing map on a finite set of indices. The empty map is the
/// identity; a nonempty map must list every index it is applied to.
class IndexMap {
 public:
  IndexMap() = default;
  explicit IndexMap(std::map<std::uint32_t, std::uint32_t> images);
  /// images[k] is the image of k + 1.
  static IndexMap from_images(const std::vector<std::uint32_t>& images);

  bool is_identity() const noexcept { return images_.empty(); }
  std::uint32_t operator()(std::uint32_t index) const;
  const std::map<std::uint32_t, std::uint32_t>& images() const noexcept { return images_; }
  /// Extends the map past its largest listed index by consecutive images.
  IndexMap extended_to(std::uint32_t n) const;

  Monomial apply(const Monomial& m) const;

 private:
  std::map<std::uint32_t, std::uint32_t> images_;
};

/// Canonical element of the free bicommutative algebra in its polynomial model
/// G = K.X + G^2: a linear part over the generators x_i plus a polynomial in
/// mixed monomials Y^alpha Z^beta (both degrees >= 1).
class Element {
 public:
  Element() = default;
  explicit Element(Field field) : field_(field), quad_(field) {}
  /// Throws BadElement unless every monomial of quad is mixed.
  Element(Field field, std::map<std::uint32_t, Scalar> linear, Poly quad);

  static Element generator(Field field, std::uint32_t index, Scalar c);
  static Element generator(Field field, std::uint32_t index) { return generator(field, index, Scalar::one(field)); }
  static Element monomial(Field field, const Monomial& m, Scalar c);
  static Element monomial(Field field, const Monomial& m) { return monomial(field, m, Scalar::one(field)); }

  Field field() const noexcept { return field_; }
  const std::map<std::uint32_t, Scalar>& linear() const noexcept { return linear_; }
  const Poly& quadratic() const noexcept { return quad_; }
  bool is_zero() const noexcept { return linear_.empty() && quad_.is_zero(); }
  bool is_quadratic() const noexcept { return linear_.empty(); }

  std::uint32_t max_index() const noexcept;
  std::uint32_t max_degree() const noexcept;
  std::uint32_t min_degree() const noexcept;

  /// t(a) = sum a_i y_i + quad and s(a) = sum a_i z_i + quad: left and right
  /// multiplication by a act on G^2 as multiplication by these polynomials.
  Poly left_factor() const;
  Poly right_factor() const;

  Element scaled(const Scalar& c) const;
  Element operator-() const { return scaled(-Scalar::one(field_)); }
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.linear_ == b.linear_ && a.quad_ == b.quad_;
  }

  /// Weight-descending quadratic terms, linear part last.
  std::string to_string() const;

 private:
  Field field_;
  std::map<std::uint32_t, Scalar> linear_;
  Poly quad_;
};

/// The bilinear product of G: x_i.x_j = y_i z_j, x_i.v = y_i v, v.x_j = v z_j,
/// v.w = vw.
Element multiply(const Element& a, const Element& b);
/// a + c b; FieldMismatch if the fields differ.
Element add_scaled(const Element& a, const Scalar& c, const Element& b);
Element normalize_term(Field field, const NATerm& t);
Element normalize(const NAPolynomial& p);
/// Renames x_i, y_i, z_i to index phi(i) simultaneously.
Element apply_index_map(const Element& a, const IndexMap& phi);
Element homogeneous_component(const Element& a, std::uint32_t n);

/// Components by multidegree (degree in each generator), keyed in
/// lexicographic order of the trimmed multidegree vector.
using Multidegree = std::vector<std::uint32_t>;
std::map<Multidegree, Element> multihomogeneous_components(const Element& a);

/// Accepts the nonassociative grammar plus y/z monomial literals such as
/// "3*y1^2*z2 - x1*(x2*x3)".
Element parse_element(std::string_view text, Field field);

}  // namespace bicomm
