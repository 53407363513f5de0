#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumprod/polyalg/poly.hpp"

namespace sumprod {

/// Bit k selects the k-th support term in canonical order.
using TermMask = std::uint32_t;

constexpr std::size_t kMaxSubsumTerms = 24;

/// All nonempty proper subsets of the support, as masks in increasing order (2^|S| - 2 of
/// them). Throws PreconditionError when |S| < 2 or |S| > kMaxSubsumTerms.
std::vector<TermMask> proper_subsets(const BivariatePoly& f);

/// g_{S'}: the terms of f selected by `mask`.
BivariatePoly subsum_poly(const BivariatePoly& f, TermMask mask);

/// Proper subsets whose partial sum vanishes at (x, y), in increasing mask order.
std::vector<TermMask> vanishing_subsets(const BivariatePoly& f, const Rational& x,
                                        const Rational& y);

struct VanishingScan {
    bool proper = false;  // some nonempty proper subsum is zero
    bool full = false;    // the whole left-hand side is zero
};

/// Scans the subset sums of the term values a_{i,j} x^i y^j. The terms are scaled to a common
/// denominator and walked in Gray-code order, so each subset costs one integer addition.
class SubsumScanner {
public:
    explicit SubsumScanner(std::size_t term_count);

    VanishingScan scan(std::span<const Rational> term_values);
    /// Every mask in [1, 2^n) whose partial sum vanishes (the full mask included).
    std::vector<TermMask> vanishing_masks(std::span<const Rational> term_values);

private:
    template <typename Visit>
    void walk(std::span<const Rational> term_values, Visit&& visit);

    std::size_t n_;
    std::vector<BigInt> scaled_;
    std::vector<std::int64_t> small_;
};

}  // namespace sumprod
