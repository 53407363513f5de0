#pragma once

// Independent brute-force references. Nothing here goes through the grid evaluator, the
// Gray-code scanner, the hash aggregation or the HNF code that the library uses.

#include <map>
#include <set>
#include <vector>

#include "sumprod/multstruct/ggp.hpp"
#include "sumprod/polyalg/poly.hpp"
#include "sumprod/ratset/finite_set.hpp"

namespace sumprod::oracle {

inline std::set<Rational> naive_sumset(const FiniteSet& a, const FiniteSet& b) {
    std::set<Rational> s;
    for (const auto& x : a)
        for (const auto& y : b) s.insert(x + y);
    return s;
}

inline std::set<Rational> naive_productset(const FiniteSet& a, const FiniteSet& b) {
    std::set<Rational> s;
    for (const auto& x : a)
        for (const auto& y : b) s.insert(x * y);
    return s;
}

inline std::map<Rational, std::uint64_t> naive_histogram(const BivariatePoly& f, const FiniteSet& a) {
    std::map<Rational, std::uint64_t> h;
    for (const auto& x : a)
        for (const auto& y : a) ++h[f.evaluate(x, y)];
    return h;
}

/// #{(x, y, x', y') ∈ A⁴ : f(x, y) = f(x', y')} by a literal quadruple loop.
inline std::uint64_t naive_energy(const BivariatePoly& f, const FiniteSet& a) {
    std::vector<Rational> values;
    for (const auto& x : a)
        for (const auto& y : a) values.push_back(f.evaluate(x, y));
    const std::size_t n = a.size();
    std::uint64_t e = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x2 = 0; x2 < n; ++x2)
                for (std::size_t y2 = 0; y2 < n; ++y2)
                    if (values[x * n + y] == values[x2 * n + y2]) ++e;
    return e;
}

/// Partial sums evaluated term by term from scratch for every mask.
inline std::vector<std::uint32_t> naive_vanishing_masks(const BivariatePoly& f, const Rational& x,
                                                        const Rational& y, bool include_full) {
    std::vector<std::pair<ExponentPair, Rational>> terms(f.terms().begin(), f.terms().end());
    const std::uint32_t full = (1u << terms.size()) - 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 1; m <= full; ++m) {
        if (m == full && !include_full) continue;
        Rational s;
        for (std::size_t k = 0; k < terms.size(); ++k)
            if (m & (1u << k)) s += terms[k].second * x.pow(terms[k].first.i) * y.pow(terms[k].first.j);
        if (s.is_zero()) out.push_back(m);
    }
    return out;
}

/// Every product of G^(t) computed independently with pow, then compared pairwise.
inline bool naive_distinct(const GGP& g, std::uint64_t t) {
    std::vector<Rational> values{Rational(1)};
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::vector<Rational> next;
        for (const auto& v : values)
            for (std::uint64_t e = 0; e < g.dims[i] * t; ++e) next.push_back(v * g.generators[i].pow(e));
        values = std::move(next);
    }
    for (std::size_t p = 0; p < values.size(); ++p)
        for (std::size_t q = p + 1; q < values.size(); ++q)
            if (values[p] == values[q]) return false;
    return true;
}

/// Rank by Gaussian elimination over Q.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            const Rational factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// (x, y) = V^{-1} (t1, t2) for V = [[i, j], [i', j']], over Q.
inline std::pair<Rational, Rational> inverse_2x2_solve(ExponentPair v1, ExponentPair v2,
                                                       const Rational& t1, const Rational& t2) {
    const Rational a(static_cast<long>(v1.i)), b(static_cast<long>(v1.j));
    const Rational c(static_cast<long>(v2.i)), d(static_cast<long>(v2.j));
    const Rational det = a * d - b * c;
    return {(d * t1 - b * t2) / det, (a * t2 - c * t1) / det};
}

}  // namespace sumprod::oracle
