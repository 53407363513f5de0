#pragma once

#include "sumprod/ratset/finite_set.hpp"

namespace sumprod {

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b);
FiniteSet productset(const FiniteSet& a, const FiniteSet& b);

/// |AA| / |A|, exactly.
Rational doubling_K(const FiniteSet& a);

}  // namespace sumprod
