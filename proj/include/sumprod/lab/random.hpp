#pragma once

#include <cstdint>
#include <random>

#include "sumprod/multstruct/ggp.hpp"
#include "sumprod/polyalg/poly.hpp"
#include "sumprod/ratset/finite_set.hpp"

namespace sumprod::lab {

using Rng = std::mt19937_64;

/// p/q with 1 <= |p| <= max_num and 1 <= q <= max_den, either sign.
Rational random_nonzero_rational(Rng& rng, long max_num = 20, long max_den = 6);

/// Up to `size` distinct nonzero rationals (fewer only if the range is too small).
FiniteSet random_nonzero_set(Rng& rng, std::size_t size, long max_num = 20, long max_den = 6);

/// Random nonzero polynomial with total degree <= max_degree and small rational coefficients.
BivariatePoly random_poly(Rng& rng, std::uint32_t max_degree, std::size_t max_terms);

/// Rejection-samples random_poly until it is not of the form g(M(x, y)).
BivariatePoly random_non_exceptional_poly(Rng& rng, std::uint32_t max_degree, std::size_t max_terms);

}  // namespace sumprod::lab
