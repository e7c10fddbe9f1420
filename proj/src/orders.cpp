#include "bicomm/orders.hpp"

#include <algorithm>
#include <unordered_set>

#include "bicomm/element.hpp"

namespace bicomm {

namespace {

std::strong_ordering reflected_lex(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) noexcept {
  // trimmed vectors: the longer one has a nonzero entry past the other's end
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering weight_compare(const Monomial& a, const Monomial& b) noexcept {
  auto c = reflected_lex(a.y_exps(), b.y_exps());
  if (c != 0) return c;
  return reflected_lex(a.z_exps(), b.z_exps());
}

std::pair<Monomial, Scalar> weight_of(const Element& a) {
  if (a.quadratic().is_zero()) throw Error(ErrorCode::NoWeight, "element " + a.to_string() + " has no quadratic part");
  const Term& lead = a.quadratic().leading();
  return {lead.mono, lead.coef};
}

std::optional<IndexMap> higman_embedding(const Monomial& source, const Monomial& target) {
  const std::uint32_t length = source.max_index();
  const std::uint32_t target_length = target.max_index();
  std::map<std::uint32_t, std::uint32_t> images;
  std::uint32_t cursor = 1;
  for (std::uint32_t i = 1; i <= length; ++i) {
    const std::uint32_t a = source.y_exp(i);
    const std::uint32_t b = source.z_exp(i);
    std::uint32_t t = cursor;
    if (a != 0 || b != 0) {
      while (t <= target_length && (target.y_exp(t) < a || target.z_exp(t) < b)) ++t;
      if (t > target_length) return std::nullopt;
    }
    images.emplace(i, t);
    cursor = t + 1;
  }
  return IndexMap(std::move(images));
}

bool higman_leq(const Monomial& a, const Monomial& b) { return higman_embedding(a, b).has_value(); }

HigmanRelation higman_compare(const Monomial& a, const Monomial& b) {
  if (a == b) return HigmanRelation::Equal;
  if (higman_leq(a, b)) return HigmanRelation::Less;
  if (higman_leq(b, a)) return HigmanRelation::Greater;
  return HigmanRelation::Incomparable;
}

std::vector<Monomial> minimal_antichain(const std::vector<Monomial>& set) {
  std::vector<Monomial> distinct;
  std::unordered_set<Monomial> seen;
  for (const auto& m : set)
    if (seen.insert(m).second) distinct.push_back(m);
  std::vector<Monomial> out;
  for (const auto& m : distinct) {
    bool dominated = std::any_of(distinct.begin(), distinct.end(),
                                 [&m](const Monomial& other) { return !(other == m) && higman_leq(other, m); });
    if (!dominated) out.push_back(m);
  }
  return out;
}

}  // namespace bicomm
