#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicomm/scalar.hpp"
#include "bicomm/term.hpp"

namespace bicomm {

/// Coordinates over the basis e_0 .. e_{dim-1}.
using AlgebraElement = std::vector<Scalar>;

/// Finite-dimensional algebra given by structure constants
/// e_i e_j = sum_k c_ij^k e_k. Missing entries are zero products.
class StructureAlgebra {
 public:
  StructureAlgebra(std::uint32_t dim, Field field);

  std::uint32_t dim() const noexcept { return dim_; }
  Field field() const noexcept { return field_; }

  /// Throws BadElement when the coefficient list does not have length dim.
  void set_product(std::uint32_t i, std::uint32_t j, std::vector<Scalar> coefficients);
  const std::vector<Scalar>* product(std::uint32_t i, std::uint32_t j) const;
  const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Scalar>>& table() const noexcept {
    return table_;
  }

  AlgebraElement basis(std::uint32_t i) const;
  AlgebraElement zero() const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  /// {"dim": n, "field": "q" | "fp:p", "table": [[i, j, [c_0, ..., c_{n-1}]], ...]}
  static StructureAlgebra from_json(const std::string& text);
  std::string to_json() const;

 private:
  void check(const AlgebraElement& a) const;

  std::uint32_t dim_;
  Field field_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Scalar>> table_;
};

/// args[i - 1] is substituted for x_i.
AlgebraElement evaluate_polynomial(const NAPolynomial& f, const std::vector<AlgebraElement>& args,
                                   const StructureAlgebra& alg);

enum class CheckMode { MultilinearExhaustive, Symbolic, Sample };

struct IdentityCheck {
  bool holds = true;
  /// Failing arguments for x1, x2, ... when one was found.
  std::optional<std::vector<AlgebraElement>> witness;
  /// For exhaustive checks: the basis indices of the witness.
  std::optional<std::vector<std::uint32_t>> witness_basis;
};

/// MultilinearExhaustive evaluates on all basis tuples (complete for
/// multilinear f; the lexicographically least failing tuple is reported).
/// Symbolic evaluates on generic elements, i.e. decides the identity in every
/// scalar extension. Sample tries `samples` random tuples and can only prove
/// failure.
IdentityCheck check_identity(const NAPolynomial& f, const StructureAlgebra& alg, CheckMode mode,
                             std::size_t samples = 1000, std::uint64_t seed = 1);

/// Basis e_i = x^i d/dx, i < n, with e_i e_j = i e_{i+j-1} (zero past the
/// truncation).
StructureAlgebra witt_truncated(std::uint32_t n, Field field);

/// Both left- and right-commutativity, checked exhaustively. On failure the
/// witness belongs to the first identity that fails.
IdentityCheck check_bicommutative(const StructureAlgebra& alg);

NAPolynomial left_commutativity(Field field);
NAPolynomial right_commutativity(Field field);

}  // namespace bicomm
