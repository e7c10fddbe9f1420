#include "bicomm/term.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "expr_parser.hpp"

namespace bicomm {

NATerm NATerm::leaf(std::uint32_t index) {
  if (index == 0) throw Error(ErrorCode::BadIndex, "variable index 0");
  NATerm t;
  t.index_ = index;
  t.max_index_ = index;
  return t;
}

NATerm NATerm::node(NATerm left, NATerm right) {
  NATerm t;
  t.degree_ = left.degree_ + right.degree_;
  t.max_index_ = std::max(left.max_index_, right.max_index_);
  t.children_ = std::make_shared<const std::pair<NATerm, NATerm>>(std::move(left), std::move(right));
  return t;
}

bool operator==(const NATerm& a, const NATerm& b) {
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.index_ == b.index_;
  if (a.children_ == b.children_) return true;
  return a.degree_ == b.degree_ && a.left() == b.left() && a.right() == b.right();
}

std::uint32_t NAPolynomial::max_index() const {
  std::uint32_t m = 0;
  for (const auto& [c, t] : terms) m = std::max(m, t.max_index());
  return m;
}

namespace {

void collect_leaves(const NATerm& t, std::vector<std::uint32_t>& out) {
  if (t.is_leaf()) {
    out.push_back(t.index());
    return;
  }
  collect_leaves(t.left(), out);
  collect_leaves(t.right(), out);
}

void print_into(const NATerm& t, std::string& out, bool top) {
  if (t.is_leaf()) {
    out += 'x';
    out += std::to_string(t.index());
    return;
  }
  if (!top) out += '(';
  print_into(t.left(), out, false);
  out += '*';
  print_into(t.right(), out, false);
  if (!top) out += ')';
}

struct NAPolyBuilder {
  Field field;
  using Value = NAPolynomial;

  Value zero() const { return {field, {}}; }
  Value leaf(std::uint32_t index) const { return {field, {{Scalar::one(field), NATerm::leaf(index)}}}; }
  Value literal(const Monomial&, const SourcePos& pos) const {
    throw ParseError(ErrorCode::Syntax, "y/z monomials are not nonassociative terms", pos.line, pos.column);
  }
  Value mul(const Value& a, const Value& b) const {
    Value r = zero();
    for (const auto& [ca, ta] : a.terms)
      for (const auto& [cb, tb] : b.terms) r.terms.emplace_back(ca * cb, NATerm::node(ta, tb));
    return r;
  }
  Value scale(const Scalar& c, Value v) const {
    Value r = zero();
    if (c.is_zero()) return r;
    for (auto& [coef, t] : v.terms) r.terms.emplace_back(c * coef, std::move(t));
    return r;
  }
  Value add(Value a, const Value& b) const {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
  }
};

}  // namespace

bool NAPolynomial::is_multilinear() const {
  std::vector<std::uint32_t> reference;
  bool first = true;
  for (const auto& [c, t] : terms) {
    std::vector<std::uint32_t> leaves;
    collect_leaves(t, leaves);
    std::sort(leaves.begin(), leaves.end());
    if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) return false;
    if (first) {
      reference = leaves;
      first = false;
    } else if (leaves != reference) {
      return false;
    }
  }
  return true;
}

std::string print_term(const NATerm& t) {
  std::string out;
  print_into(t, out, true);
  return out;
}

std::string to_string(const NAPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, t] : p.terms) {
    bool negative = c.is_negative();
    Scalar magnitude = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string body = print_term(t);
    if (!t.is_leaf()) body = "(" + body + ")";
    if (!magnitude.is_one())
      out += magnitude.to_string() + "*" + body;
    else
      out += t.is_leaf() ? body : print_term(t);
  }
  return out;
}

NAPolynomial parse_expression(std::string_view text, Field field) {
  NAPolyBuilder builder{field};
  return detail::ExprParser<NAPolyBuilder>(text, field, builder).parse_all();
}

}  // namespace bicomm
