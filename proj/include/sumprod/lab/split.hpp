#pragma once

#include <cstdint>
#include <vector>

#include "sumprod/polyalg/poly.hpp"
#include "sumprod/ratset/finite_set.hpp"
#include "sumprod/ratset/image.hpp"

namespace sumprod::lab {

/// Solutions of f(x, y) = alpha in A × A, split by whether some nonempty proper subsum of the
/// left-hand side vanishes ("dirty") or none does ("clean").
struct SolutionSplit {
    Rational alpha;
    std::uint64_t clean = 0;
    std::uint64_t dirty = 0;
    /// Dirty count when the whole left-hand side also counts as a subsum. Differs from `dirty`
    /// only at alpha = 0.
    std::uint64_t dirty_inclusive = 0;

    std::uint64_t multiplicity() const { return clean + dirty; }
    friend bool operator==(const SolutionSplit&, const SolutionSplit&) = default;
};

/// Throws PreconditionError(trivial_polynomial) for constants and single monomials.
SolutionSplit solution_split(const BivariatePoly& f, const FiniteSet& a, const Rational& alpha,
                             const PairOptions& opts = {});

/// The split for every alpha in f(A, A), sorted by alpha.
std::vector<SolutionSplit> split_table(const BivariatePoly& f, const FiniteSet& a,
                                       const PairOptions& opts = {});

}  // namespace sumprod::lab
