#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace bicomm {

/// Dimension of the degree-n component of the d-generated free bicommutative
/// algebra: d for n = 1, otherwise the number of mixed monomials of degree n
/// in y1..yd, z1..zd.
mpz_class graded_dimension(std::uint32_t d, std::uint32_t n);

/// Dimension of the span of all multilinear degree-n products of x1..xn.
mpz_class multilinear_dimension(std::uint32_t n);

}  // namespace bicomm
