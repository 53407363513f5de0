#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sumprod/ratset/finite_set.hpp"

namespace sumprod {

/// Generalized geometric progression g_1^[H_1] · ... · g_r^[H_r], where [H] = {0, ..., H-1}.
/// Generators are nonzero and different from 1; r = 0 is the singleton {1}.
struct GGP {
    std::vector<Rational> generators;
    std::vector<std::uint64_t> dims;

    std::size_t rank() const noexcept { return generators.size(); }
    bool all_positive() const;
    /// Π t·H_i; throws CapExceeded on 64-bit overflow.
    std::uint64_t box_size(std::uint64_t t = 1) const;
    /// The same generators with every H_i multiplied by `factor`.
    GGP scaled(std::uint64_t factor) const;
    std::string to_string() const;

    friend bool operator==(const GGP&, const GGP&) = default;
};

/// Validates generators (nonzero, != 1) and dims (>= 1).
GGP make_ggp(std::vector<Rational> generators, std::vector<std::uint64_t> dims);

/// "2^[4] * 3^[4]"; an empty string is the rank-0 progression.
GGP parse_ggp(std::string_view text);

struct EnumerationOptions {
    std::uint64_t max_points = 10'000'000;
};

/// Calls visit(mu, value) for every exponent vector mu in the box Π [t·H_i], in
/// lexicographic order of mu, with value = Π g_i^{mu_i}.
void for_each_box_point(const GGP& g, std::uint64_t t, const EnumerationOptions& opts,
                        const std::function<void(std::span<const std::uint64_t>, const Rational&)>& visit);

/// G^(t) = {Π g_i^{mu_i} : mu_i ∈ [t·H_i]}, deduplicated.
FiniteSet ggp_power(const GGP& g, std::uint64_t t, const EnumerationOptions& opts = {});

/// True iff all Π t·H_i products in G^(t) are pairwise distinct.
bool distinctness_check(const GGP& g, std::uint64_t t, const EnumerationOptions& opts = {});

/// value -> exponent vector over the box of G^(t). Throws PreconditionError(not_distinct) if two
/// exponent vectors give the same value.
std::unordered_map<Rational, std::vector<std::uint64_t>> box_index(const GGP& g, std::uint64_t t,
                                                                  const EnumerationOptions& opts = {});

}  // namespace sumprod
