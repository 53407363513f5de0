#pragma once

#include <cstdint>
#include <optional>

#include "sumprod/ratset/rational.hpp"

namespace sumprod {

/// C(n, r) = (8n)^{4 n^4 (n + n r + 1)}, the bound on non-degenerate solutions of a unit
/// equation in n unknowns over a rank-r group.
struct BoundValue {
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::uint64_t base = 0;        // 8n
    BigInt exponent;               // 4 n^4 (n + n r + 1)
    std::optional<BigInt> value;   // exact, when it has at most the requested digit count
    double log10 = 0;
};

constexpr std::uint64_t kDefaultBoundDigitCap = 1'000'000;

/// Throws DomainError for n = 0. The exact value is materialized only when its decimal length
/// is within `max_digits`; log10 is always filled in.
BoundValue amoroso_viada_bound(std::uint64_t n, std::uint64_t r,
                               std::uint64_t max_digits = kDefaultBoundDigitCap);

}  // namespace sumprod
