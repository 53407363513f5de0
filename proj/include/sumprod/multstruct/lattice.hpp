#pragma once

#include <vector>

#include "sumprod/ratset/rational.hpp"

namespace sumprod {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Row-style Hermite normal form of the lattice spanned by the rows: echelon form with positive
/// pivots and entries above each pivot reduced into [0, pivot). Zero rows are dropped, so the
/// number of returned rows is the lattice rank. All rows must have the same length.
IntMatrix hermite_normal_form(IntMatrix rows);

std::size_t lattice_rank(const IntMatrix& rows);

}  // namespace sumprod
