#include "bicomm/dimension.hpp"

#include "bicomm/error.hpp"

namespace bicomm {

namespace {

// monomials of degree k in d commuting variables
mpz_class count_monomials(std::uint32_t d, std::uint32_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), d + k - 1, k);
  return r;
}

}  // namespace

mpz_class graded_dimension(std::uint32_t d, std::uint32_t n) {
  if (d == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "rank and degree must be positive");
  if (n == 1) return d;
  mpz_class total = 0;
  for (std::uint32_t k = 1; k < n; ++k) total += count_monomials(d, k) * count_monomials(d, n - k);
  return total;
}

mpz_class multilinear_dimension(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  if (n == 1) return 1;
  // a multilinear mixed monomial is a split of {1..n} into a nonempty y-set
  // and a nonempty z-set
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r - 2;
}

}  // namespace bicomm
