#include "sumprod/polyalg/subsums.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

void check_subsum_support(const BivariatePoly& f) {
    if (f.term_count() < 2)
        throw PreconditionError(Precondition::support_too_small,
                                "subsums need a support of at least two terms");
    if (f.term_count() > kMaxSubsumTerms)
        throw PreconditionError(Precondition::support_too_large,
                                "support too large for subset enumeration");
}

std::vector<Rational> term_values(const BivariatePoly& f, const Rational& x, const Rational& y) {
    std::vector<Rational> v;
    v.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) v.push_back(c * x.pow(e.i) * y.pow(e.j));
    return v;
}

}  // namespace

std::vector<TermMask> proper_subsets(const BivariatePoly& f) {
    check_subsum_support(f);
    const TermMask full = (TermMask{1} << f.term_count()) - 1;
    std::vector<TermMask> out;
    out.reserve(full - 1);
    for (TermMask m = 1; m < full; ++m) out.push_back(m);
    return out;
}

BivariatePoly subsum_poly(const BivariatePoly& f, TermMask mask) {
    BivariatePoly g;
    std::size_t k = 0;
    for (const auto& [e, c] : f.terms()) {
        if (mask & (TermMask{1} << k)) g.add_term(e, c);
        ++k;
    }
    return g;
}

std::vector<TermMask> vanishing_subsets(const BivariatePoly& f, const Rational& x,
                                        const Rational& y) {
    check_subsum_support(f);
    const auto values = term_values(f, x, y);
    SubsumScanner scanner(values.size());
    auto masks = scanner.vanishing_masks(values);
    const TermMask full = (TermMask{1} << f.term_count()) - 1;
    std::erase(masks, full);
    return masks;
}

SubsumScanner::SubsumScanner(std::size_t term_count)
    : n_(term_count), scaled_(term_count), small_(term_count) {
    if (term_count > kMaxSubsumTerms)
        throw PreconditionError(Precondition::support_too_large,
                                "support too large for subset enumeration");
}

template <typename Visit>
void SubsumScanner::walk(std::span<const Rational> values, Visit&& visit) {
    BigInt lcm = 1;
    for (const auto& v : values) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());

    // |subset sum| <= sum |w_k|; use machine integers when that bound fits
    BigInt bound = 0;
    for (std::size_t k = 0; k < n_; ++k) {
        scaled_[k] = values[k].num() * (lcm / values[k].den());
        bound += ::abs(scaled_[k]);
    }
    const TermMask limit = TermMask{1} << n_;
    TermMask mask = 0;
    if (mpz_sizeinbase(bound.get_mpz_t(), 2) < 62) {
        for (std::size_t k = 0; k < n_; ++k) small_[k] = scaled_[k].get_si();
        std::int64_t sum = 0;
        for (TermMask step = 1; step < limit; ++step) {
            const int bit = std::countr_zero(step);
            const TermMask flip = TermMask{1} << bit;
            mask ^= flip;
            sum += (mask & flip) ? small_[bit] : -small_[bit];
            if (sum == 0 && !visit(mask)) return;
        }
        return;
    }
    BigInt sum = 0;
    for (TermMask step = 1; step < limit; ++step) {
        const int bit = std::countr_zero(step);
        const TermMask flip = TermMask{1} << bit;
        mask ^= flip;
        if (mask & flip)
            sum += scaled_[bit];
        else
            sum -= scaled_[bit];
        if (sgn(sum) == 0 && !visit(mask)) return;
    }
}

VanishingScan SubsumScanner::scan(std::span<const Rational> values) {
    VanishingScan result;
    const TermMask full = (TermMask{1} << n_) - 1;
    walk(values, [&](TermMask m) {
        if (m == full)
            result.full = true;
        else
            result.proper = true;
        return !(result.full && result.proper);
    });
    return result;
}

std::vector<TermMask> SubsumScanner::vanishing_masks(std::span<const Rational> values) {
    std::vector<TermMask> out;
    walk(values, [&](TermMask m) {
        out.push_back(m);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sumprod
