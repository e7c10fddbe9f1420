#pragma once

#include <vector>

#include "bicomm/poly.hpp"

namespace bicomm {

/// Reduced Groebner basis of an ideal of K[Y, Z] under the weight order:
/// monic generators sorted by ascending leading monomial, no leading monomial
/// dividing any term of another generator.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(Field field) : field_(field) {}
  GroebnerBasis(Field field, std::vector<Poly> generators);

  Field field() const noexcept { return field_; }
  const std::vector<Poly>& generators() const noexcept { return generators_; }
  bool empty() const noexcept { return generators_.empty(); }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  Field field_;
  std::vector<Poly> generators_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
};

GroebnerBasis buchberger(Field field, const std::vector<Poly>& gens, BuchbergerStats* stats = nullptr);

/// Remainder of multivariate division by gb: no term divisible by a leading
/// monomial of gb.
Poly poly_normal_form(const Poly& p, const GroebnerBasis& gb);

struct Division {
  std::vector<Poly> quotients;  // one per generator
  Poly remainder;
};

/// p = sum quotients[k] * gb[k] + remainder.
Division divide(const Poly& p, const std::vector<Poly>& divisors);

}  // namespace bicomm
