#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumprod/ratset/rational.hpp"

namespace sumprod {

/// Exponents (i, j) of the monomial x^i y^j.
struct ExponentPair {
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    std::uint32_t degree() const { return i + j; }
    bool is_zero() const { return i == 0 && j == 0; }

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Canonical term order: total degree ascending, then the x exponent descending
/// (1, x, y, x^2, x*y, y^2, ...).
struct GradedOrder {
    bool operator()(const ExponentPair& a, const ExponentPair& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.i > b.i;
    }
};

std::string to_string(const ExponentPair& e);

/// True when neither vector is a rational multiple of the other.
inline bool non_parallel(const ExponentPair& a, const ExponentPair& b) {
    return static_cast<std::int64_t>(a.i) * b.j != static_cast<std::int64_t>(b.i) * a.j;
}

/// Sparse bivariate polynomial over Q. Zero coefficients are never stored.
class BivariatePoly {
public:
    using Terms = std::map<ExponentPair, Rational, GradedOrder>;

    BivariatePoly() = default;
    explicit BivariatePoly(const Rational& constant);

    static BivariatePoly monomial(const Rational& coefficient, ExponentPair e);
    static BivariatePoly x() { return monomial(1, {1, 0}); }
    static BivariatePoly y() { return monomial(1, {0, 1}); }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(ExponentPair e) const;
    Rational constant_term() const { return coefficient({0, 0}); }

    /// Adds c·x^i y^j, dropping the term if it cancels.
    void add_term(ExponentPair e, const Rational& c);

    /// Support S in canonical order; throws DomainError for the zero polynomial.
    std::vector<ExponentPair> support() const;
    /// max(i + j) over the support; throws DomainError for the zero polynomial.
    std::uint32_t degree() const;
    std::uint32_t max_x_exponent() const;
    std::uint32_t max_y_exponent() const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }

    /// Text accepted by parse_poly: "x*y + 3/2*x^2*y^2 - 1".
    std::string to_string() const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    Terms terms_;
};

/// Univariate polynomial in t; coefficients indexed by power, leading coefficient nonzero
/// (the zero polynomial has no coefficients).
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coefficients_.size()) - 1; }
    Rational coefficient(std::size_t k) const;

    Rational evaluate(const Rational& t) const;
    std::string to_string(char var = 't') const;

    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

private:
    std::vector<Rational> coefficients_;
};

/// Parses the polynomial grammar; throws ParseError carrying the byte offset.
BivariatePoly parse_poly(std::string_view text);

}  // namespace sumprod
