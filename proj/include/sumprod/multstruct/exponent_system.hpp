#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumprod/polyalg/poly.hpp"

namespace sumprod {

struct ExponentSolution {
    std::vector<std::int64_t> x;
    std::vector<std::int64_t> y;

    friend bool operator==(const ExponentSolution&, const ExponentSolution&) = default;
};

/// Solves, for every coordinate k,
///     i  x_k + j  y_k = t1[k]
///     i' x_k + j' y_k = t2[k]
/// with v1 = (i, j), v2 = (i', j'). The solution over Q is unique because the vectors are not
/// parallel; it is returned only when every coordinate is an integer.
/// Throws PreconditionError(parallel_vectors) when i j' - i' j = 0 and DomainError when the
/// right-hand sides have different lengths.
std::optional<ExponentSolution> solve_exponent_system(ExponentPair v1, ExponentPair v2,
                                                      std::span<const std::int64_t> t1,
                                                      std::span<const std::int64_t> t2);

}  // namespace sumprod
