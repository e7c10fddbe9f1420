#include "bicomm/poly.hpp"

#include <algorithm>

#include "bicomm/orders.hpp"

namespace bicomm {

Poly Poly::monomial(Field field, Monomial m, Scalar c) {
  Poly p(field);
  if (!(c.field() == field)) throw Error(ErrorCode::FieldMismatch, "coefficient field differs");
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(Field field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return weight_compare(a.mono, b.mono) > 0; });
  Poly p(field);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      if (!(t.coef.field() == field)) throw Error(ErrorCode::FieldMismatch, "coefficient field differs");
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return weight_compare(t.mono, key) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Scalar::zero(field_);
}

std::uint32_t Poly::max_index() const noexcept {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.mono.max_index());
  return m;
}

bool Poly::all_mixed() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_mixed(); });
}

Poly& Poly::add_scaled(const Scalar& c, const Poly& other, const Monomial& shift) {
  if (!(field_ == other.field_)) throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + other.field_.name());
  if (c.is_zero() || other.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  const bool unshifted = shift.is_one();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = unshifted ? b->mono : b->mono * shift;
    if (a == terms_.end()) {
      out.push_back({std::move(bm), c * b->coef});
      ++b;
      continue;
    }
    auto cmp = weight_compare(a->mono, bm);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({std::move(bm), c * b->coef});
      ++b;
    } else {
      Scalar s = a->coef + c * b->coef;
      if (!s.is_zero()) out.push_back({std::move(a->mono), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(field_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::times(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono *= m;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coef.inverse());
}

Poly Poly::homogeneous_component(std::uint32_t n) const {
  Poly r(field_);
  for (const auto& t : terms_)
    if (t.mono.degree() == n) r.terms_.push_back(t);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, a.field_.name() + " vs " + b.field_.name());
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back({s.mono * t.mono, s.coef * t.coef});
  return Poly::from_terms(a.field_, std::move(products));
}

void append_signed_term(std::string& out, const Scalar& c, const std::string& body, bool first) {
  bool negative = c.is_negative();
  Scalar magnitude = negative ? -c : c;
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (body == "1")
    out += magnitude.to_string();
  else if (magnitude.is_one())
    out += body;
  else
    out += magnitude.to_string() + "*" + body;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    append_signed_term(out, t.coef, t.mono.to_string(), first);
    first = false;
  }
  return out;
}

}  // namespace bicomm
