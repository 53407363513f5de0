#pragma once

#include <vector>

#include "sumprod/multstruct/factor.hpp"
#include "sumprod/multstruct/lattice.hpp"
#include "sumprod/ratset/finite_set.hpp"

namespace sumprod {

/// Prime-exponent vectors of a set over a shared, pairwise coprime key basis. Cofactors the
/// factorizer could not split are refined against each other by gcds, so distinct rows never
/// hide a shared factor.
struct ExponentMatrix {
    std::vector<BigInt> basis;
    IntMatrix rows;             // one row per element, columns follow `basis`
    std::vector<int> signs;     // the Z/2 torsion coordinate, kept out of `rows`
};

/// Throws DomainError when the set contains 0.
ExponentMatrix exponent_matrix(const FiniteSet& a, const Factorizer& factorizer = default_factorizer());

/// Rank of the lattice spanned by the exponent vectors of A (sign excluded).
std::size_t multiplicative_rank(const FiniteSet& a, const Factorizer& factorizer = default_factorizer());

}  // namespace sumprod
