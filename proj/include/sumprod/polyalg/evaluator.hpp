#pragma once

#include <span>
#include <vector>

#include "sumprod/polyalg/poly.hpp"
#include "sumprod/ratset/finite_set.hpp"

namespace sumprod {

/// Evaluates f on a grid A x B from precomputed power tables, so each pair costs one product
/// per term and no exponentiation.
class GridEvaluator {
public:
    GridEvaluator(const BivariatePoly& f, const FiniteSet& a, const FiniteSet& b);

    std::size_t rows() const noexcept { return x_powers_.size(); }
    std::size_t cols() const noexcept { return y_powers_.size(); }
    std::size_t term_count() const noexcept { return coefficients_.size(); }

    Rational value(std::size_t row, std::size_t col) const;
    /// Writes a_{i,j} x^i y^j for every term in canonical order; `out` has term_count() slots.
    void term_values(std::size_t row, std::size_t col, std::span<Rational> out) const;

private:
    std::vector<ExponentPair> exponents_;
    std::vector<Rational> coefficients_;
    std::vector<std::vector<Rational>> x_powers_;
    std::vector<std::vector<Rational>> y_powers_;
};

}  // namespace sumprod
