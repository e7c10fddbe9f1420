#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace bicomm {

/// Commutative monomial Y^alpha Z^beta in K[y1, y2, ..., z1, z2, ...].
/// Exponents are stored densely by index with trailing zeros trimmed, so the
/// representation is canonical and equality is structural.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<std::uint32_t> y, std::vector<std::uint32_t> z);

  static Monomial y(std::uint32_t index, std::uint32_t exponent = 1);
  static Monomial z(std::uint32_t index, std::uint32_t exponent = 1);

  /// Exponents are 1-based by variable index; out-of-range indices give 0.
  std::uint32_t y_exp(std::uint32_t index) const noexcept {
    return index >= 1 && index <= y_.size() ? y_[index - 1] : 0;
  }
  std::uint32_t z_exp(std::uint32_t index) const noexcept {
    return index >= 1 && index <= z_.size() ? z_[index - 1] : 0;
  }
  const std::vector<std::uint32_t>& y_exps() const noexcept { return y_; }
  const std::vector<std::uint32_t>& z_exps() const noexcept { return z_; }

  std::uint32_t y_degree() const noexcept;
  std::uint32_t z_degree() const noexcept;
  std::uint32_t degree() const noexcept { return y_degree() + z_degree(); }
  bool is_one() const noexcept { return y_.empty() && z_.empty(); }
  /// Both total degrees positive: a basis element of the square.
  bool is_mixed() const noexcept { return !y_.empty() && !z_.empty(); }
  /// Largest index with a nonzero y- or z-exponent (0 for the constant).
  std::uint32_t max_index() const noexcept;
  /// deg_i = y_i + z_i for i = 1..max_index().
  std::vector<std::uint32_t> multidegree() const;

  bool divides(const Monomial& other) const noexcept;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// "y1^2*y3*z2"; the constant monomial prints as "1".
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  void trim();

  std::vector<std::uint32_t> y_;
  std::vector<std::uint32_t> z_;
};

/// Parses "y1^2*y3*z2" (factors in any order, repeated factors multiply) or "1".
Monomial parse_monomial(std::string_view text);

}  // namespace bicomm

template <>
struct std::hash<bicomm::Monomial> {
  std::size_t operator()(const bicomm::Monomial& m) const noexcept { return m.hash(); }
};
