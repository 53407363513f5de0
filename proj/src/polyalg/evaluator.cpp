#include "sumprod/polyalg/evaluator.hpp"

namespace sumprod {

namespace {

std::vector<std::vector<Rational>> power_table(const FiniteSet& s, std::uint32_t max_exp) {
    std::vector<std::vector<Rational>> table(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        auto& row = table[k];
        row.reserve(max_exp + 1);
        row.emplace_back(1);
        for (std::uint32_t e = 1; e <= max_exp; ++e) row.push_back(row.back() * s[k]);
    }
    return table;
}

}  // namespace

GridEvaluator::GridEvaluator(const BivariatePoly& f, const FiniteSet& a, const FiniteSet& b)
    : x_powers_(power_table(a, f.max_x_exponent())), y_powers_(power_table(b, f.max_y_exponent())) {
    for (const auto& [e, c] : f.terms()) {
        exponents_.push_back(e);
        coefficients_.push_back(c);
    }
}

Rational GridEvaluator::value(std::size_t row, std::size_t col) const {
    const auto& xp = x_powers_[row];
    const auto& yp = y_powers_[col];
    Rational sum;
    for (std::size_t k = 0; k < exponents_.size(); ++k)
        sum += coefficients_[k] * xp[exponents_[k].i] * yp[exponents_[k].j];
    return sum;
}

void GridEvaluator::term_values(std::size_t row, std::size_t col, std::span<Rational> out) const {
    const auto& xp = x_powers_[row];
    const auto& yp = y_powers_[col];
    for (std::size_t k = 0; k < exponents_.size(); ++k)
        out[k] = coefficients_[k] * xp[exponents_[k].i] * yp[exponents_[k].j];
}

}  // namespace sumprod
