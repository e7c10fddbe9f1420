#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "bicomm/poly.hpp"

namespace bicomm {

/// Reduced row echelon form of a set of polynomials viewed as coordinate
/// vectors over the monomial basis; pivots are leading monomials, rows monic.
class Echelon {
 public:
  explicit Echelon(Field field) : field_(field) {}

  /// Remainder of p modulo the row span; contains no pivot monomial.
  Poly reduce(const Poly& p) const;
  bool contains(const Poly& p) const { return reduce(p).is_zero(); }
  /// Adds p to the span; returns false if it was already there.
  bool insert(const Poly& p);

  std::size_t rank() const noexcept { return rows_.size(); }
  /// Rows sorted by descending leading monomial.
  std::vector<Poly> rows() const;
  Field field() const noexcept { return field_; }

 private:
  Field field_;
  std::vector<Poly> rows_;
  std::unordered_map<Monomial, std::size_t> pivot_;
};

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major

struct LinearSolution {
  std::optional<Vector> particular;
  std::vector<Vector> kernel;
};

/// Solves A x = b over the field (A has rows x cols entries; cols may be 0).
LinearSolution solve_linear(Field field, const Matrix& a, const Vector& b, std::size_t cols);

/// Rank of a dense matrix.
std::size_t rank(Field field, Matrix a);

}  // namespace bicomm
