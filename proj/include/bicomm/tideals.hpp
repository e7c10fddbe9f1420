#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bicomm/element.hpp"

namespace bicomm {

/// Images of generators; unmapped generators are fixed.
class Substitution {
 public:
  Substitution() = default;
  /// Throws BadElement for a zero image.
  Substitution& set(std::uint32_t index, Element image);
  const Element* image(std::uint32_t index) const;
  const std::map<std::uint32_t, Element>& images() const noexcept { return images_; }

 private:
  std::map<std::uint32_t, Element> images_;
};

/// Image of f under the endomorphism extending sigma. The square is a
/// polynomial in the generators' left and right factors, so the quadratic
/// part maps by y_i -> t(sigma(x_i)), z_i -> s(sigma(x_i)).
Element apply_substitution(const Element& f, const Substitution& sigma);

struct ClosureWindow {
  std::uint32_t max_degree = 5;
  std::uint32_t max_variables = 3;

  friend bool operator==(const ClosureWindow&, const ClosureWindow&) = default;
};

/// The T-ideal generated by some elements, restricted to F_V and total
/// degree <= D, split by multidegree. Each component is in reduced echelon
/// form under the weight order, so leading monomials (weights) are distinct.
struct TIdealSpan {
  ClosureWindow window;
  std::map<Multidegree, std::vector<Element>> basis_by_multidegree;

  std::size_t dimension(const Multidegree& m) const;
  bool contains(const Element& f) const;
  friend bool operator==(const TIdealSpan&, const TIdealSpan&) = default;
};

TIdealSpan t_ideal_closure_bounded(const std::vector<Element>& gens, const ClosureWindow& window);
/// Only computes the components f needs.
bool t_ideal_member_bounded(const Element& f, const std::vector<Element>& gens, const ClosureWindow& window);

/// h in the T-ideal of f with wt(h) = target: rename indices by the leftmost
/// embedding phi of wt(f) into target, then multiply by x_k on the left for
/// each y_k and on the right for each z_k of target / phi(wt(f)).
Element lift_weight(const Element& f, const Monomial& target);

struct SpechtReduction {
  Element remainder;
  /// Weight of the current element at each round, the last one being
  /// either irreducible or absent (remainder zero).
  std::vector<Monomial> trace;
  std::size_t cancellations = 0;
};

/// Cancels leading weights with lifts of the first dominating basis element,
/// g <- g - (nu / mu) h, nu and mu the coefficients of wt(g) in g and h.
SpechtReduction specht_reduce(const Element& g, const std::vector<Element>& basis);

struct SpechtSearchResult {
  std::vector<Element> basis;
  std::vector<Monomial> antichain;
  bool verified = false;
};

/// Representatives of the minimal antichain of closure weights, verified by
/// reducing every spanning element of the bounded closure to zero.
SpechtSearchResult specht_basis_search(const std::vector<Element>& gens, const ClosureWindow& window);

/// Characteristic 0 only: replaces the generators by two-variable
/// consequences when their bounded closure agrees with the input's.
std::vector<Element> char_zero_two_variable_heuristic(const std::vector<Element>& gens,
                                                      const ClosureWindow& window = {});

}  // namespace bicomm
