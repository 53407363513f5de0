#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "sumprod/ratset/rational.hpp"

namespace sumprod {

/// A non-empty set of rationals stored strictly increasing.
class FiniteSet {
public:
    using const_iterator = std::vector<Rational>::const_iterator;

    /// Sorts and deduplicates; throws DomainError on empty input.
    static FiniteSet from_values(std::vector<Rational> values);

    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const Rational> elements() const noexcept { return elements_; }
    const Rational& operator[](std::size_t i) const { return elements_[i]; }
    const_iterator begin() const noexcept { return elements_.begin(); }
    const_iterator end() const noexcept { return elements_.end(); }

    bool contains(const Rational& q) const;
    bool contains_zero() const { return contains(Rational(0)); }
    bool all_positive() const { return elements_.front().sign() > 0; }

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
    explicit FiniteSet(std::vector<Rational> sorted) : elements_(std::move(sorted)) {}

    std::vector<Rational> elements_;
};

inline FiniteSet make_set(std::vector<Rational> values) {
    return FiniteSet::from_values(std::move(values));
}

/// {q, q^2, ..., q^n}.
FiniteSet geometric_set(const Rational& q, unsigned n);

/// Set file: one element per line; blank lines and '#' comment lines are skipped.
FiniteSet parse_set_text(std::string_view text);
FiniteSet read_set_file(const std::filesystem::path& path);
void write_set(std::ostream& os, const FiniteSet& set);

}  // namespace sumprod
