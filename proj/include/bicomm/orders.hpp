#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "bicomm/monomial.hpp"
#include "bicomm/scalar.hpp"

namespace bicomm {

class Element;
class IndexMap;

/// Reflected lexicographic order: Y-exponents compared from the highest index
/// downwards, then Z-exponents the same way. Total, multiplicative, and a
/// well-order on any finite set of variables.
std::strong_ordering weight_compare(const Monomial& a, const Monomial& b) noexcept;

struct WeightLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return weight_compare(a, b) < 0; }
};

/// Greatest monomial of the quadratic part and its coefficient.
/// Throws NoWeight for elements with zero quadratic part.
std::pair<Monomial, Scalar> weight_of(const Element& a);

/// Leftmost strictly increasing index map phi with
/// alpha_i <= gamma_phi(i) and beta_i <= delta_phi(i) for all i, if any.
/// The map is defined on 1..source.max_index().
std::optional<IndexMap> higman_embedding(const Monomial& source, const Monomial& target);

bool higman_leq(const Monomial& a, const Monomial& b);

enum class HigmanRelation { Equal, Less, Greater, Incomparable };
HigmanRelation higman_compare(const Monomial& a, const Monomial& b);

/// The higman-minimal elements, without duplicates, in first-occurrence order.
std::vector<Monomial> minimal_antichain(const std::vector<Monomial>& set);

}  // namespace bicomm
