#include "bicomm/element.hpp"

#include <algorithm>
#include <limits>

namespace bicomm {

IndexMap::IndexMap(std::map<std::uint32_t, std::uint32_t> images) : images_(std::move(images)) {
  std::uint32_t last_image = 0;
  for (const auto& [from, to] : images_) {
    if (from == 0 || to == 0) throw Error(ErrorCode::InvalidIndexMap, "indices start at 1");
    if (to <= last_image) throw Error(ErrorCode::InvalidIndexMap, "map is not strictly increasing");
    last_image = to;
  }
}

IndexMap IndexMap::from_images(const std::vector<std::uint32_t>& images) {
  std::map<std::uint32_t, std::uint32_t> m;
  for (std::size_t i = 0; i < images.size(); ++i) m.emplace(static_cast<std::uint32_t>(i + 1), images[i]);
  return IndexMap(std::move(m));
}

std::uint32_t IndexMap::operator()(std::uint32_t index) const {
  if (images_.empty()) return index;
  auto it = images_.find(index);
  if (it == images_.end()) throw Error(ErrorCode::InvalidIndexMap, "index " + std::to_string(index) + " is not mapped");
  return it->second;
}

IndexMap IndexMap::extended_to(std::uint32_t n) const {
  auto images = images_;
  std::uint32_t from = images.empty() ? 0 : images.rbegin()->first;
  std::uint32_t to = images.empty() ? 0 : images.rbegin()->second;
  while (from < n) images.emplace(++from, ++to);
  return IndexMap(std::move(images));
}

Monomial IndexMap::apply(const Monomial& m) const {
  if (images_.empty()) return m;
  auto remap = [this](const std::vector<std::uint32_t>& exps) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      std::uint32_t j = (*this)(static_cast<std::uint32_t>(i + 1));
      if (out.size() < j) out.resize(j, 0);
      out[j - 1] = exps[i];
    }
    return out;
  };
  return Monomial(remap(m.y_exps()), remap(m.z_exps()));
}

Element::Element(Field field, std::map<std::uint32_t, Scalar> linear, Poly quad)
    : field_(field), linear_(std::move(linear)), quad_(std::move(quad)) {
  if (!(quad_.field() == field_)) throw Error(ErrorCode::FieldMismatch, "quadratic part over another field");
  if (!quad_.all_mixed()) throw Error(ErrorCode::BadElement, "quadratic part has a non-mixed monomial");
  for (auto it = linear_.begin(); it != linear_.end();) {
    if (it->first == 0) throw Error(ErrorCode::BadIndex, "variable index 0");
    if (!(it->second.field() == field_)) throw Error(ErrorCode::FieldMismatch, "linear coefficient over another field");
    it = it->second.is_zero() ? linear_.erase(it) : std::next(it);
  }
}

Element Element::generator(Field field, std::uint32_t index, Scalar c) {
  std::map<std::uint32_t, Scalar> lin;
  lin.emplace(index, std::move(c));
  return Element(field, std::move(lin), Poly(field));
}

Element Element::monomial(Field field, const Monomial& m, Scalar c) {
  return Element(field, {}, Poly::monomial(field, m, std::move(c)));
}

std::uint32_t Element::max_index() const noexcept {
  std::uint32_t m = linear_.empty() ? 0 : linear_.rbegin()->first;
  return std::max(m, quad_.max_index());
}

std::uint32_t Element::max_degree() const noexcept {
  std::uint32_t d = linear_.empty() ? 0 : 1;
  for (const auto& t : quad_.terms()) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Element::min_degree() const noexcept {
  if (!linear_.empty()) return 1;
  std::uint32_t d = std::numeric_limits<std::uint32_t>::max();
  for (const auto& t : quad_.terms()) d = std::min(d, t.mono.degree());
  return quad_.is_zero() ? 0 : d;
}

Poly Element::left_factor() const {
  std::vector<Term> terms;
  for (const auto& [i, c] : linear_) terms.push_back({Monomial::y(i), c});
  return quad_ + Poly::from_terms(field_, std::move(terms));
}

Poly Element::right_factor() const {
  std::vector<Term> terms;
  for (const auto& [i, c] : linear_) terms.push_back({Monomial::z(i), c});
  return quad_ + Poly::from_terms(field_, std::move(terms));
}

Element Element::scaled(const Scalar& c) const {
  Element r(field_);
  if (c.is_zero()) return r;
  for (const auto& [i, a] : linear_) r.linear_.emplace(i, a * c);
  r.quad_ = quad_.scaled(c);
  return r;
}

Element& Element::operator+=(const Element& other) {
  *this = add_scaled(*this, Scalar::one(field_), other);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  *this = add_scaled(*this, -Scalar::one(field_), other);
  return *this;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element multiply(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
  // (sum a_i x_i + p)(sum b_j x_j + q) expands rule by rule into
  // (sum a_i y_i + p)(sum b_j z_j + q).
  return Element(a.field(), {}, a.left_factor() * b.right_factor());
}

Element add_scaled(const Element& a, const Scalar& c, const Element& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
  auto linear = a.linear();
  for (const auto& [i, coef] : b.linear()) {
    auto [it, inserted] = linear.emplace(i, c * coef);
    if (!inserted) it->second += c * coef;
  }
  Poly quad = a.quadratic();
  quad.add_scaled(c, b.quadratic());
  return Element(a.field(), std::move(linear), std::move(quad));
}

Element normalize_term(Field field, const NATerm& t) {
  if (t.is_leaf()) return Element::generator(field, t.index());
  return multiply(normalize_term(field, t.left()), normalize_term(field, t.right()));
}

Element normalize(const NAPolynomial& p) {
  Element r(p.field);
  for (const auto& [c, t] : p.terms) r = add_scaled(r, c, normalize_term(p.field, t));
  return r;
}

Element apply_index_map(const Element& a, const IndexMap& phi) {
  std::map<std::uint32_t, Scalar> linear;
  for (const auto& [i, c] : a.linear()) linear.emplace(phi(i), c);
  std::vector<Term> terms;
  terms.reserve(a.quadratic().size());
  for (const auto& t : a.quadratic().terms()) terms.push_back({phi.apply(t.mono), t.coef});
  return Element(a.field(), std::move(linear), Poly::from_terms(a.field(), std::move(terms)));
}

Element homogeneous_component(const Element& a, std::uint32_t n) {
  if (n == 1) return Element(a.field(), a.linear(), Poly(a.field()));
  return Element(a.field(), {}, a.quadratic().homogeneous_component(n));
}

std::map<Multidegree, Element> multihomogeneous_components(const Element& a) {
  std::map<Multidegree, Element> out;
  for (const auto& [i, c] : a.linear()) {
    Multidegree m(i, 0);
    m[i - 1] = 1;
    out.emplace(std::move(m), Element::generator(a.field(), i, c));
  }
  std::map<Multidegree, std::vector<Term>> buckets;
  for (const auto& t : a.quadratic().terms()) buckets[t.mono.multidegree()].push_back(t);
  for (auto& [m, terms] : buckets)
    out.emplace(m, Element(a.field(), {}, Poly::from_terms(a.field(), std::move(terms))));
  return out;
}

std::string Element::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : quad_.terms()) {
    append_signed_term(out, t.coef, t.mono.to_string(), first);
    first = false;
  }
  for (const auto& [i, c] : linear_) {
    append_signed_term(out, c, "x" + std::to_string(i), first);
    first = false;
  }
  return out;
}

}  // namespace bicomm
