#include "sumprod/ratset/image.hpp"

#include <algorithm>
#include <unordered_map>

#include "sumprod/error.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/polyalg/evaluator.hpp"

namespace sumprod {

MultiplicityHistogram::MultiplicityHistogram(std::vector<Entry> sorted_entries)
    : entries_(std::move(sorted_entries)) {}

std::uint64_t MultiplicityHistogram::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto& [v, c] : entries_) t += c;
    return t;
}

std::uint64_t MultiplicityHistogram::count(const Rational& alpha) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), alpha,
                                     [](const Entry& e, const Rational& a) { return e.first < a; });
    return (it != entries_.end() && it->first == alpha) ? it->second : 0;
}

std::uint64_t MultiplicityHistogram::max_count() const noexcept {
    std::uint64_t m = 0;
    for (const auto& [v, c] : entries_) m = std::max(m, c);
    return m;
}

FiniteSet MultiplicityHistogram::values() const {
    std::vector<Rational> v;
    v.reserve(entries_.size());
    for (const auto& [value, c] : entries_) v.push_back(value);
    return FiniteSet::from_values(std::move(v));
}

BigInt MultiplicityHistogram::sum_of_squares() const {
    BigInt s = 0;
    for (const auto& [v, c] : entries_) {
        const BigInt m(static_cast<unsigned long>(c));
        s += m * m;
    }
    return s;
}

void check_pair_cap(const FiniteSet& a, const FiniteSet& b, const PairOptions& opts) {
    const unsigned long long pairs = static_cast<unsigned long long>(a.size()) * b.size();
    if (pairs > opts.max_pairs) throw CapExceeded("pair count", pairs, opts.max_pairs);
}

MultiplicityHistogram multiplicity_histogram(const BivariatePoly& f, const FiniteSet& a,
                                             const FiniteSet& b, const PairOptions& opts) {
    check_pair_cap(a, b, opts);
    const GridEvaluator grid(f, a, b);
    using Partial = std::unordered_map<Rational, std::uint64_t>;
    std::vector<Partial> partials(std::max(1u, opts.threads));
    for_each_row_chunk(grid.rows(), opts.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
        Partial& counts = partials[w];
        for (std::size_t r = begin; r < end; ++r)
            for (std::size_t c = 0; c < grid.cols(); ++c) ++counts[grid.value(r, c)];
    });
    Partial& merged = partials.front();
    for (std::size_t w = 1; w < partials.size(); ++w)
        for (auto& [v, c] : partials[w]) merged[v] += c;

    std::vector<MultiplicityHistogram::Entry> entries(merged.begin(), merged.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return MultiplicityHistogram(std::move(entries));
}

FiniteSet image(const BivariatePoly& f, const FiniteSet& a, const FiniteSet& b,
                const PairOptions& opts) {
    return multiplicity_histogram(f, a, b, opts).values();
}

BigInt energy(const BivariatePoly& f, const FiniteSet& a, const PairOptions& opts) {
    return multiplicity_histogram(f, a, a, opts).sum_of_squares();
}

}  // namespace sumprod
