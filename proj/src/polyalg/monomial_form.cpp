#include "sumprod/polyalg/monomial_form.hpp"

#include <numeric>

#include "sumprod/error.hpp"

namespace sumprod {

std::optional<MonomialDecomposition> classify_monomial_composition(const BivariatePoly& f) {
    if (f.is_zero()) throw DomainError("cannot classify the zero polynomial");

    const Rational constant = f.constant_term();
    const bool trivial = f.term_count() == 1;
    if (f.terms().size() == 1 && !constant.is_zero())
        return MonomialDecomposition{UnivariatePoly({constant}), {0, 0}, true};

    ExponentPair direction;
    std::uint32_t common = 0;
    for (const auto& [e, c] : f.terms()) {
        if (e.is_zero()) continue;
        const std::uint32_t k = std::gcd(e.i, e.j);
        const ExponentPair p{e.i / k, e.j / k};
        if (common == 0)
            direction = p;
        else if (!(p == direction))
            return std::nullopt;
        common = std::gcd(common, k);
    }

    const ExponentPair m{direction.i * common, direction.j * common};
    std::vector<Rational> g(1, constant);
    for (const auto& [e, c] : f.terms()) {
        if (e.is_zero()) continue;
        const std::size_t power = std::gcd(e.i, e.j) / common;
        if (g.size() <= power) g.resize(power + 1);
        g[power] = c;
    }
    return MonomialDecomposition{UnivariatePoly(std::move(g)), m, trivial};
}

std::optional<NonParallelWitness> non_parallel_witness(const BivariatePoly& f) {
    std::optional<ExponentPair> anchor;
    for (const auto& [e, c] : f.terms()) {
        if (e.is_zero()) continue;
        if (!anchor)
            anchor = e;
        else if (non_parallel(*anchor, e))
            return NonParallelWitness{*anchor, e};
    }
    return std::nullopt;
}

BivariatePoly compose(const UnivariatePoly& g, ExponentPair monomial) {
    BivariatePoly f;
    const auto& coeffs = g.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const auto kk = static_cast<std::uint32_t>(k);
        f.add_term({kk * monomial.i, kk * monomial.j}, coeffs[k]);
    }
    return f;
}

std::string monomial_to_string(ExponentPair m) {
    if (m.is_zero()) return "1";
    BivariatePoly p = BivariatePoly::monomial(1, m);
    return p.to_string();
}

}  // namespace sumprod
