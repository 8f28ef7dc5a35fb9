#pragma once

#include <vector>

#include "liechar/types.hpp"

namespace liechar {

/// Dense integer polynomial, lowest degree first, no trailing zeros
/// (the zero polynomial is empty).
using Poly = std::vector<BigInt>;

void trim(Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
/// Exact division by a monic polynomial; throws InvalidArgument on a
/// non-zero remainder.
Poly poly_div_exact(const Poly& a, const Poly& monic);
bool poly_divides(const Poly& monic, const Poly& a);
/// Phi_n with integer coefficients.
Poly cyclotomic_polynomial(std::int64_t n);
/// First n coefficients of 1/p as a power series; p(0) must be 1.
Poly series_inverse(const Poly& p, std::size_t n);
BigInt poly_eval(const Poly& p, const BigInt& x);

}  // namespace liechar
