#include "sumprod/lab/random.hpp"

#include "sumprod/error.hpp"
#include "sumprod/polyalg/monomial_form.hpp"

namespace sumprod::lab {

Rational random_nonzero_rational(Rng& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    std::bernoulli_distribution negative(0.5);
    const long p = num(rng);
    return Rational(negative(rng) ? -p : p, den(rng));
}

FiniteSet random_nonzero_set(Rng& rng, std::size_t size, long max_num, long max_den) {
    std::vector<Rational> v;
    v.reserve(size);
    for (std::size_t attempts = 0; v.size() < size && attempts < 50 * size + 50; ++attempts) {
        Rational q = random_nonzero_rational(rng, max_num, max_den);
        bool fresh = true;
        for (const auto& e : v) fresh = fresh && !(e == q);
        if (fresh) v.push_back(std::move(q));
    }
    return FiniteSet::from_values(std::move(v));
}

BivariatePoly random_poly(Rng& rng, std::uint32_t max_degree, std::size_t max_terms) {
    std::uniform_int_distribution<std::uint32_t> exp(0, max_degree);
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    for (;;) {
        BivariatePoly f;
        const std::size_t n = count(rng);
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint32_t i = exp(rng);
            std::uniform_int_distribution<std::uint32_t> jexp(0, max_degree - i);
            f.add_term({i, jexp(rng)}, random_nonzero_rational(rng, 5, 3));
        }
        if (!f.is_zero()) return f;
    }
}

BivariatePoly random_non_exceptional_poly(Rng& rng, std::uint32_t max_degree, std::size_t max_terms) {
    if (max_degree < 1 || max_terms < 2)
        throw DomainError("non-exceptional polynomials need degree >= 1 and two terms");
    for (;;) {
        BivariatePoly f = random_poly(rng, max_degree, max_terms);
        if (!classify_monomial_composition(f)) return f;
    }
}

}  // namespace sumprod::lab
