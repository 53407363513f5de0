#include "sumprod/polyalg/poly.hpp"

#include <algorithm>

#include "sumprod/error.hpp"

namespace sumprod {

std::string to_string(const ExponentPair& e) {
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

BivariatePoly::BivariatePoly(const Rational& constant) { add_term({0, 0}, constant); }

BivariatePoly BivariatePoly::monomial(const Rational& coefficient, ExponentPair e) {
    BivariatePoly p;
    p.add_term(e, coefficient);
    return p;
}

Rational BivariatePoly::coefficient(ExponentPair e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(ExponentPair e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::vector<ExponentPair> BivariatePoly::support() const {
    if (is_zero()) throw DomainError("support of the zero polynomial");
    std::vector<ExponentPair> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

std::uint32_t BivariatePoly::degree() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial");
    // graded order: the last term has maximal total degree
    return terms_.rbegin()->first.degree();
}

std::uint32_t BivariatePoly::max_x_exponent() const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e.i);
    return m;
}

std::uint32_t BivariatePoly::max_y_exponent() const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e.j);
    return m;
}

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
    Rational sum;
    for (const auto& [e, c] : terms_) sum += c * x.pow(e.i) * y.pow(e.j);
    return sum;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
    BivariatePoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term({e1.i + e2.i, e1.j + e2.j}, c1 * c2);
    *this = std::move(out);
    return *this;
}

namespace {

std::string monomial_text(ExponentPair e) {
    std::string s;
    auto factor = [&s](char v, std::uint32_t k) {
        if (k == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (k > 1) s += '^' + std::to_string(k);
    };
    factor('x', e.i);
    factor('y', e.j);
    return s;
}

}  // namespace

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        const std::string mono = monomial_text(e);
        if (mono.empty()) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + '*';
            out += mono;
        }
    }
    return out;
}

UnivariatePoly::UnivariatePoly(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational UnivariatePoly::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

Rational UnivariatePoly::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string UnivariatePoly::to_string(char var) const {
    if (coefficients_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        const Rational& c = coefficients_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        if (k == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) out += mag.to_string() + '*';
        out += var;
        if (k > 1) out += '^' + std::to_string(k);
    }
    return out;
}

}  // namespace sumprod
