#include "bicomm/element.hpp"
#include "expr_parser.hpp"

namespace bicomm {

namespace {

struct ElementBuilder {
  Field field;
  using Value = Element;

  Value zero() const { return Element(field); }
  Value leaf(std::uint32_t index) const { return Element::generator(field, index); }
  Value literal(const Monomial& m, const SourcePos& pos) const {
    if (!m.is_mixed())
      throw ParseError(ErrorCode::BadElement, "monomial " + m.to_string() + " needs both y and z factors", pos.line,
                       pos.column);
    return Element::monomial(field, m);
  }
  Value mul(const Value& a, const Value& b) const { return multiply(a, b); }
  Value scale(const Scalar& c, const Value& v) const { return v.scaled(c); }
  Value add(Value a, const Value& b) const { return a + b; }
};

}  // namespace

Element parse_element(std::string_view text, Field field) {
  ElementBuilder builder{field};
  return detail::ExprParser<ElementBuilder>(text, field, builder).parse_all();
}

}  // namespace bicomm
