#include <doctest.h>

#include "bicomm/dimension.hpp"
#include "bicomm/element.hpp"
#include "bicomm/error.hpp"

using namespace bicomm;

namespace {
const Field Q = Field::rationals();
Element e(const char* text) { return parse_element(text, Q); }
Element nf(const char* text) { return normalize(parse_expression(text, Q)); }
Monomial m(const char* text) { return parse_monomial(text); }
}  // namespace

TEST_CASE("monomials") {
  CHECK(m("y1^2*y3*z2").to_string() == "y1^2*y3*z2");
  CHECK(m("z2*y1*y1") == m("y1^2*z2"));
  CHECK(m("1").is_one());
  CHECK(m("1").to_string() == "1");
  CHECK(m("y1*z1").is_mixed());
  CHECK_FALSE(m("y1^2").is_mixed());
  CHECK(m("y1*z4").max_index() == 4);
  CHECK(m("y1^2*z1*z3").multidegree() == std::vector<std::uint32_t>{3, 0, 1});
  CHECK(m("y1*z1").divides(m("y1^2*z1*z2")));
  CHECK_FALSE(m("y2*z1").divides(m("y1^2*z1*z2")));
  CHECK(m("y1^2*z1*z2") / m("y1*z1") == m("y1*z2"));
  CHECK_THROWS(m("y1") / m("y2"));
  CHECK(lcm(m("y1^2*z1"), m("y1*z2")) == m("y1^2*z1*z2"));
  CHECK(coprime(m("y1"), m("z1")));
  CHECK_FALSE(coprime(m("y1*z2"), m("z2")));
  CHECK(m("y1") * m("y1*z3") == m("y1^2*z3"));
  CHECK_THROWS(m("y0"));
  CHECK_THROWS(m("w1"));
  CHECK(m("y1*z1").hash() == m("z1*y1").hash());
}

TEST_CASE("normalization of bracketings") {
  CHECK(nf("(x1*x2)*x3").to_string() == "y1*z2*z3");
  CHECK(nf("x1*(x2*x3)") == nf("x2*(x1*x3)"));
  CHECK(nf("x1*(x2*x3)").to_string() == "y1*y2*z3");
  CHECK(nf("(x1*x2)*x3") == nf("(x1*x3)*x2"));
  auto lin = nf("x1");
  CHECK(lin.linear().size() == 1);
  CHECK(lin.quadratic().is_zero());
  CHECK(nf("(x1*x2)*(x3*x4)").to_string() == "y1*y3*z2*z4");
  CHECK(nf("x1*x2 - x2*x1").to_string() == "-y2*z1 + y1*z2");
  CHECK(nf("2*x1 + x1*x1 - 2*x1").to_string() == "y1*z1");
}

TEST_CASE("multiplication rules") {
  CHECK(multiply(e("x1"), e("x2")) == e("y1*z2"));
  CHECK(multiply(e("y1*z1"), e("y2*z2")) == e("y1*y2*z1*z2"));
  CHECK(multiply(e("x1"), e("y1*z1 + 2*y2*z1")) == e("y1^2*z1 + 2*y1*y2*z1"));
  CHECK(multiply(e("y1*z1"), e("x2")) == e("y1*z1*z2"));
  CHECK(multiply(e("0"), e("x1")).is_zero());
  CHECK(e("x1") * e("x2") == e("y1*z2"));
}

TEST_CASE("addition and scaling") {
  CHECK((e("y1*z1") + e("-1*y1*z1")).is_zero());
  auto s = e("x1") + e("x2");
  CHECK(s.linear().size() == 2);
  CHECK((e("y1*z2") + e("y2*z1")).to_string() == "y2*z1 + y1*z2");
  CHECK(add_scaled(e("x1"), Scalar(Q, 3L), e("x1")) == e("4*x1"));
  CHECK(e("y1*z1 + x1").scaled(Scalar(Q, 0L)).is_zero());
  CHECK(e("3*y2^2*z1 - x2 + 1/2*x1").to_string() == "3*y2^2*z1 + 1/2*x1 - x2");
  CHECK(e("0").to_string() == "0");
}

TEST_CASE("element construction checks") {
  CHECK_THROWS_AS(Element::monomial(Q, m("y1^2")), Error);
  try {
    parse_element("y1*y2", Q);
    FAIL("pure y monomial accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::BadElement);
  }
  try {
    (void)(e("x1") + parse_element("x1", Field::prime(3)));
    FAIL("field mismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::FieldMismatch);
  }
  CHECK_THROWS(Element::generator(Q, 0));
}

TEST_CASE("degrees and components") {
  auto a = e("x1 + y1*z1");
  CHECK(a.min_degree() == 1);
  CHECK(a.max_degree() == 2);
  CHECK(homogeneous_component(a, 2) == e("y1*z1"));
  CHECK(homogeneous_component(a, 1) == e("x1"));
  CHECK(homogeneous_component(e("y1*z1^2"), 2).is_zero());
  CHECK(homogeneous_component(e("y1*y2*z1 + y1*z1"), 3) == e("y1*y2*z1"));
  auto parts = multihomogeneous_components(e("y1*z2 + y2*z1 + y1^2*z1 + x2"));
  REQUIRE(parts.size() == 3);
  CHECK(parts.at({1, 1}) == e("y1*z2 + y2*z1"));
  CHECK(parts.at({3}) == e("y1^2*z1"));
  CHECK(parts.at({0, 1}) == e("x2"));
  CHECK(e("y1*z3 + x5").max_index() == 5);
}

TEST_CASE("left and right factors") {
  auto a = e("2*x1 + y1*z2");
  CHECK(a.left_factor().to_string() == "y1*z2 + 2*y1");
  CHECK(a.right_factor().to_string() == "y1*z2 + 2*z1");
}

TEST_CASE("index maps") {
  auto phi = IndexMap::from_images({2, 5});
  CHECK(apply_index_map(e("y1*z2"), phi) == e("y2*z5"));
  CHECK(apply_index_map(e("y1*z2 + x1"), IndexMap()) == e("y1*z2 + x1"));
  CHECK(apply_index_map(e("y1*z1 - y1*z2"), IndexMap::from_images({1, 3})) == e("y1*z1 - y1*z3"));
  CHECK(phi.extended_to(4)(4) == 7);
  CHECK_THROWS_AS(IndexMap::from_images({2, 2}), Error);
  CHECK_THROWS_AS(IndexMap::from_images({0, 1}), Error);
  try {
    apply_index_map(e("y3*z1"), phi);
    FAIL("unlisted index");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InvalidIndexMap);
  }
}

TEST_CASE("dimension formulas") {
  CHECK(graded_dimension(1, 3) == 2);
  CHECK(graded_dimension(2, 2) == 4);
  CHECK(graded_dimension(1, 1) == 1);
  CHECK(graded_dimension(3, 1) == 3);
  CHECK(multilinear_dimension(2) == 2);
  CHECK(multilinear_dimension(3) == 6);
  CHECK(multilinear_dimension(1) == 1);
  CHECK(multilinear_dimension(10) == 1022);
  CHECK_THROWS_AS(graded_dimension(0, 2), Error);
  CHECK_THROWS_AS(multilinear_dimension(0), Error);
}
