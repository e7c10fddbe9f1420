#include <doctest.h>

#include "bicomm/ideals.hpp"

using namespace bicomm;

namespace {
const Field Q = Field::rationals();
Element e(const std::string& text) { return parse_element(text, Q); }
std::vector<Element> gens(std::initializer_list<const char*> texts) {
  std::vector<Element> out;
  for (auto t : texts) out.push_back(e(t));
  return out;
}
std::vector<Element> chain_step(std::size_t n) {
  std::vector<Element> out;
  for (std::size_t d = 1; d <= n; ++d) out.push_back(e("y1*z1^" + std::to_string(d)));
  return out;
}
}  // namespace

TEST_CASE("two-sided membership") {
  CHECK(two_sided_member(e("y1*z1^2"), gens({"y1*z1"})));
  CHECK_FALSE(two_sided_member(e("y1*z1"), gens({"y1^2*z1", "y1*z1^2"})));
  CHECK(two_sided_member(e("0"), gens({"y1*z1"})));
  CHECK(two_sided_member(e("0"), {}));
  CHECK_FALSE(two_sided_member(e("y1*z1"), {}));
  CHECK(two_sided_member(e("y1*z2*z3 - y2*z1*z3"), gens({"x1*x2 - x2*x1"})));
  CHECK_FALSE(two_sided_member(e("x1"), gens({"x1*x2 - x2*x1"})));
  // a linear generator pulls in its products
  CHECK(two_sided_member(e("y1*z2"), gens({"x1"})));
  CHECK(two_sided_member(e("y3*z1^2"), gens({"x1"})));
  CHECK_FALSE(two_sided_member(e("y2*z2"), gens({"x1"})));
  // x1 - x2 kills differences of generators
  CHECK(two_sided_member(e("y1*z3 - y2*z3"), gens({"x1 - x2"})));
  CHECK(two_sided_member(e("x1 + y1*z1"), gens({"x1 + y1*z1"})));
  CHECK(two_sided_member(e("3*x1 + 3*y1*z1 + y2*z2*z1"), gens({"x1 + y1*z1", "y2*z2"})));
}

TEST_CASE("membership certificates") {
  auto pres = TwoSidedPresentation::build(Q, gens({"x1 + y1*z1", "y2*z2"}));
  auto cert = two_sided_member(e("2*x1 + 2*y1*z1 + y2*z2"), pres);
  CHECK(cert.member);
  REQUIRE(cert.mu.size() == 2);
  CHECK(cert.mu[0] == Scalar(Q, 2L));
  Poly back(Q);
  for (std::size_t k = 0; k < cert.cofactors.size(); ++k) back += cert.cofactors[k] * pres.module_ideal.generators()[k];
  CHECK(back == cert.residue);
  // a larger rank is picked up automatically
  CHECK(two_sided_member(e("y1*z1*z5"), TwoSidedPresentation::build(Q, gens({"y1*z1"}))).member);
}

TEST_CASE("one-sided membership") {
  auto g = gens({"y1*z1"});
  CHECK(left_ideal_member(e("y1^3*z1"), g).member);
  CHECK_FALSE(left_ideal_member(e("y1*z1^3"), g).member);
  CHECK(left_ideal_member(e("y1^2*z1^2"), g).member);
  CHECK(right_ideal_member(e("y1*z1^3"), g).member);
  CHECK_FALSE(right_ideal_member(e("y1^3*z1"), g).member);
  CHECK(right_ideal_member(e("y1^2*z1^2"), g).member);
  CHECK(left_ideal_member(e("y1*z1"), g).member);
  CHECK(ideal_member(e("y1*z1^2"), g, IdealMode::TwoSided));
  CHECK_FALSE(ideal_member(e("y1*z1^2"), g, IdealMode::Left));
  try {
    left_ideal_member(e("y1*z1"), gens({"x1"}));
    FAIL("linear generator accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::UnsupportedGenerator);
  }
}

TEST_CASE("chains") {
  std::vector<std::vector<Element>> chain;
  for (std::size_t n = 1; n <= 5; ++n) chain.push_back(chain_step(n));
  CHECK(chain_stabilization(chain, IdealMode::TwoSided) == 1u);
  CHECK_FALSE(chain_stabilization(chain, IdealMode::Left));
  auto strict = chain_strict_steps(chain, IdealMode::Left);
  CHECK(strict == std::vector<bool>{false, true, true, true, true});
  std::vector<std::vector<Element>> constant(3, gens({"y1*z1"}));
  CHECK(chain_stabilization(constant, IdealMode::Left) == 1u);
  std::vector<std::vector<Element>> late = {gens({"y1*z1^3"}), gens({"y1*z1^3", "y1*z1^2"}),
                                            gens({"y1*z1^3", "y1*z1^2", "y1*z1^4"})};
  CHECK(chain_stabilization(late, IdealMode::TwoSided) == 2u);
  CHECK(chain_stabilization({gens({"y1*z1"})}, IdealMode::Left) == 1u);
  try {
    chain_stabilization({gens({"y1*z1"}), gens({"y1*z2"})}, IdealMode::TwoSided);
    FAIL("non-cumulative chain accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::BadChain);
  }
  CHECK_THROWS_AS(chain_stabilization({}, IdealMode::TwoSided), Error);
}
