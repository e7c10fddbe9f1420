#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicomm/scalar.hpp"

namespace bicomm {

/// A bracketed nonassociative monomial in the generators x1, x2, ...
/// Immutable; subtrees are shared.
class NATerm {
 public:
  static NATerm leaf(std::uint32_t index);
  static NATerm node(NATerm left, NATerm right);

  bool is_leaf() const noexcept { return children_ == nullptr; }
  std::uint32_t index() const noexcept { return index_; }
  const NATerm& left() const { return children_->first; }
  const NATerm& right() const { return children_->second; }

  std::size_t degree() const noexcept { return degree_; }
  std::uint32_t max_index() const noexcept { return max_index_; }

  friend bool operator==(const NATerm& a, const NATerm& b);

 private:
  NATerm() = default;

  std::uint32_t index_ = 0;
  std::size_t degree_ = 1;
  std::uint32_t max_index_ = 0;
  std::shared_ptr<const std::pair<NATerm, NATerm>> children_;
};

/// A K-linear combination of NATerms as written; terms need not be distinct.
struct NAPolynomial {
  Field field;
  std::vector<std::pair<Scalar, NATerm>> terms;

  std::uint32_t max_index() const;
  /// Every variable occurs exactly once in every term, and all terms use the
  /// same variables.
  bool is_multilinear() const;
};

/// Fully parenthesised except at the top level: "x1*(x2*x3)".
std::string print_term(const NATerm& t);
std::string to_string(const NAPolynomial& p);

/// Grammar: sums of [scalar '*'] factor ['*' factor], factor being xN or a
/// parenthesised sum. Unparenthesised triple products are rejected.
NAPolynomial parse_expression(std::string_view text, Field field);

}  // namespace bicomm
