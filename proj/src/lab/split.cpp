#include "sumprod/lab/split.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "sumprod/error.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/polyalg/evaluator.hpp"
#include "sumprod/polyalg/subsums.hpp"

namespace sumprod::lab {

namespace {

void refuse_trivial(const BivariatePoly& f) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no solution structure");
    if (f.term_count() < 2)
        throw PreconditionError(
            Precondition::trivial_polynomial,
            "f = " + f.to_string() +
                " is a constant or a single monomial: it has no proper subsums to split on");
}

struct Counts {
    std::uint64_t clean = 0;
    std::uint64_t dirty = 0;
    std::uint64_t dirty_inclusive = 0;
};

// Only pairs with f(x, y) == *only are tallied when `only` is set.
std::vector<SolutionSplit> tally(const BivariatePoly& f, const FiniteSet& a,
                                 const std::optional<Rational>& only, const PairOptions& opts) {
    refuse_trivial(f);
    check_pair_cap(a, a, opts);
    const GridEvaluator grid(f, a, a);
    using Partial = std::unordered_map<Rational, Counts>;
    std::vector<Partial> partials(std::max(1u, opts.threads));
    for_each_row_chunk(grid.rows(), opts.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
        SubsumScanner scanner(grid.term_count());
        std::vector<Rational> terms(grid.term_count());
        Partial& out = partials[w];
        for (std::size_t r = begin; r < end; ++r) {
            for (std::size_t c = 0; c < grid.cols(); ++c) {
                grid.term_values(r, c, terms);
                Rational value;
                for (const auto& t : terms) value += t;
                if (only && value != *only) continue;
                const VanishingScan scan = scanner.scan(terms);
                Counts& slot = out[value];
                if (scan.proper)
                    ++slot.dirty;
                else
                    ++slot.clean;
                if (scan.proper || scan.full) ++slot.dirty_inclusive;
            }
        }
    });
    Partial& merged = partials.front();
    for (std::size_t w = 1; w < partials.size(); ++w) {
        for (const auto& [v, c] : partials[w]) {
            Counts& slot = merged[v];
            slot.clean += c.clean;
            slot.dirty += c.dirty;
            slot.dirty_inclusive += c.dirty_inclusive;
        }
    }
    std::vector<SolutionSplit> table;
    table.reserve(merged.size());
    for (const auto& [v, c] : merged) table.push_back({v, c.clean, c.dirty, c.dirty_inclusive});
    std::sort(table.begin(), table.end(),
              [](const SolutionSplit& l, const SolutionSplit& r) { return l.alpha < r.alpha; });
    return table;
}

}  // namespace

SolutionSplit solution_split(const BivariatePoly& f, const FiniteSet& a, const Rational& alpha,
                             const PairOptions& opts) {
    auto table = tally(f, a, alpha, opts);
    if (table.empty()) return SolutionSplit{alpha, 0, 0, 0};
    return table.front();
}

std::vector<SolutionSplit> split_table(const BivariatePoly& f, const FiniteSet& a,
                                       const PairOptions& opts) {
    return tally(f, a, std::nullopt, opts);
}

}  // namespace sumprod::lab
