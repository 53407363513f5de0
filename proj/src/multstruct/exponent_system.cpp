#include "sumprod/multstruct/exponent_system.hpp"

#include <limits>

#include "sumprod/error.hpp"

namespace sumprod {

std::optional<ExponentSolution> solve_exponent_system(ExponentPair v1, ExponentPair v2,
                                                      std::span<const std::int64_t> t1,
                                                      std::span<const std::int64_t> t2) {
    if (t1.size() != t2.size()) throw DomainError("exponent systems of different lengths");
    const __int128 a = v1.i, b = v1.j, c = v2.i, d = v2.j;
    const __int128 det = a * d - b * c;
    if (det == 0)
        throw PreconditionError(Precondition::parallel_vectors,
                                "exponent vectors " + to_string(v1) + " and " + to_string(v2) +
                                    " are parallel");

    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    ExponentSolution sol;
    sol.x.reserve(t1.size());
    sol.y.reserve(t1.size());
    for (std::size_t k = 0; k < t1.size(); ++k) {
        // Cramer's rule
        const __int128 xn = static_cast<__int128>(t1[k]) * d - b * t2[k];
        const __int128 yn = a * t2[k] - c * static_cast<__int128>(t1[k]);
        if (xn % det != 0 || yn % det != 0) return std::nullopt;
        const __int128 x = xn / det, y = yn / det;
        if (x < lo || x > hi || y < lo || y > hi) return std::nullopt;
        sol.x.push_back(static_cast<std::int64_t>(x));
        sol.y.push_back(static_cast<std::int64_t>(y));
    }
    return sol;
}

}  // namespace sumprod
