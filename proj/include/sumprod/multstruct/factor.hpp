#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "sumprod/ratset/rational.hpp"

namespace sumprod {

/// sign · Π key^exponent. Keys are primes, except for cofactors left composite after trial
/// division, which are kept as opaque generators and listed in `unresolved`.
struct FactoredElement {
    int sign = 1;
    std::map<BigInt, std::int64_t> exponents;
    std::set<BigInt> unresolved;

    Rational reconstruct() const;
    friend bool operator==(const FactoredElement&, const FactoredElement&) = default;
};

/// Trial division up to a bound, then a primality test on the remaining cofactor.
class Factorizer {
public:
    static constexpr std::uint32_t kDefaultTrialBound = 1'000'000;

    explicit Factorizer(std::uint32_t trial_bound = kDefaultTrialBound);

    std::uint32_t trial_bound() const noexcept { return trial_bound_; }

    /// Throws DomainError for 0.
    FactoredElement factorize(const Rational& q) const;

private:
    void factor_integer(const BigInt& n, std::int64_t direction, FactoredElement& out) const;

    std::uint32_t trial_bound_;
    std::vector<std::uint32_t> primes_;
};

/// Shared default factorizer (trial bound 10⁶).
const Factorizer& default_factorizer();

inline FactoredElement factorize(const Rational& q) { return default_factorizer().factorize(q); }

/// GMP primality test (BPSW plus Miller-Rabin rounds); exact below 2^64.
bool is_probable_prime(const BigInt& n);

}  // namespace sumprod
