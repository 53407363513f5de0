#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sumprod/polyalg/poly.hpp"
#include "sumprod/ratset/finite_set.hpp"

namespace sumprod {

struct PairOptions {
    /// |A|·|B| above this is refused with CapExceeded.
    std::uint64_t max_pairs = 100'000'000;
    /// Worker count for the pair sweep; the result never depends on it.
    unsigned threads = 1;
};

/// m(α) = #{(x, y) ∈ A × B : f(x, y) = α}, one entry per distinct value, sorted by value.
class MultiplicityHistogram {
public:
    using Entry = std::pair<Rational, std::uint64_t>;

    MultiplicityHistogram() = default;
    explicit MultiplicityHistogram(std::vector<Entry> sorted_entries);

    std::span<const Entry> entries() const noexcept { return entries_; }
    /// Number of distinct values, |f(A, B)|.
    std::size_t size() const noexcept { return entries_.size(); }
    std::uint64_t total() const noexcept;
    std::uint64_t count(const Rational& alpha) const;
    std::uint64_t max_count() const noexcept;
    FiniteSet values() const;
    /// Σ m(α)².
    BigInt sum_of_squares() const;

    friend bool operator==(const MultiplicityHistogram&, const MultiplicityHistogram&) = default;

private:
    std::vector<Entry> entries_;
};

/// Throws CapExceeded when |A|·|B| exceeds opts.max_pairs.
void check_pair_cap(const FiniteSet& a, const FiniteSet& b, const PairOptions& opts);

MultiplicityHistogram multiplicity_histogram(const BivariatePoly& f, const FiniteSet& a,
                                             const FiniteSet& b, const PairOptions& opts = {});
inline MultiplicityHistogram multiplicity_histogram(const BivariatePoly& f, const FiniteSet& a,
                                                    const PairOptions& opts = {}) {
    return multiplicity_histogram(f, a, a, opts);
}

/// f(A, B) = {f(a, b) : a ∈ A, b ∈ B}.
FiniteSet image(const BivariatePoly& f, const FiniteSet& a, const FiniteSet& b,
                const PairOptions& opts = {});

/// E_f(A) = #{(x, y, x', y') ∈ A⁴ : f(x, y) = f(x', y')}, computed as Σ m_A(α)².
BigInt energy(const BivariatePoly& f, const FiniteSet& a, const PairOptions& opts = {});

}  // namespace sumprod
