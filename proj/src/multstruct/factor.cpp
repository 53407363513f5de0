#include "sumprod/multstruct/factor.hpp"

#include "sumprod/error.hpp"

namespace sumprod {

Rational FactoredElement::reconstruct() const {
    Rational r(sign);
    for (const auto& [p, e] : exponents) r *= Rational(p).pow_signed(e);
    return r;
}

Factorizer::Factorizer(std::uint32_t trial_bound) : trial_bound_(trial_bound) {
    std::vector<bool> composite(static_cast<std::size_t>(trial_bound) + 1, false);
    for (std::uint64_t p = 2; p <= trial_bound; ++p) {
        if (composite[p]) continue;
        primes_.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t m = p * p; m <= trial_bound; m += p) composite[m] = true;
    }
}

void Factorizer::factor_integer(const BigInt& n, std::int64_t direction,
                                FactoredElement& out) const {
    BigInt rest = n;
    for (const std::uint32_t p : primes_) {
        if (rest == 1) return;
        if (rest < static_cast<unsigned long>(p) * p) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        std::int64_t e = 0;
        do {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
        out.exponents[BigInt(p)] += direction * e;
    }
    if (rest == 1) return;
    // rest has no prime factor <= the trial bound; it is prime if below bound², else test it
    const BigInt bound(trial_bound_);
    const bool prime = rest <= bound * bound || is_probable_prime(rest);
    if (!prime) {
        // p^k with p above the trial bound would otherwise become one opaque key
        const std::size_t bits = mpz_sizeinbase(rest.get_mpz_t(), 2);
        for (unsigned long k = bits; k >= 2; --k) {
            BigInt root;
            if (mpz_root(root.get_mpz_t(), rest.get_mpz_t(), k) != 0) {
                factor_integer(root, direction * static_cast<std::int64_t>(k), out);
                return;
            }
        }
    }
    out.exponents[rest] += direction;
    if (!prime) out.unresolved.insert(rest);
}

FactoredElement Factorizer::factorize(const Rational& q) const {
    if (q.is_zero()) throw DomainError("0 has no multiplicative factorization");
    FactoredElement out;
    out.sign = q.sign();
    factor_integer(::abs(q.num()), +1, out);
    factor_integer(q.den(), -1, out);
    std::erase_if(out.exponents, [](const auto& kv) { return kv.second == 0; });
    return out;
}

const Factorizer& default_factorizer() {
    static const Factorizer instance;
    return instance;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

}  // namespace sumprod
