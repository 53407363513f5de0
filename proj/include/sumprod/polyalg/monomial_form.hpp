#pragma once

#include <optional>

#include "sumprod/polyalg/poly.hpp"

namespace sumprod {

/// f = g(x^a y^b). `monomial` is maximal: the powers of t carrying nonzero non-constant
/// coefficients in g have gcd 1. `trivial` marks constants and single monomials.
struct MonomialDecomposition {
    UnivariatePoly g;
    ExponentPair monomial;
    bool trivial = false;
};

/// Two support vectors of f, neither a rational multiple of the other.
struct NonParallelWitness {
    ExponentPair first;
    ExponentPair second;
};

/// Decides whether f = g(M(x, y)) for a univariate g and a single monomial M. Returns the
/// maximal decomposition, or nullopt when two support vectors point in different directions.
/// Throws DomainError for the zero polynomial.
std::optional<MonomialDecomposition> classify_monomial_composition(const BivariatePoly& f);

/// The first non-parallel pair of non-constant support vectors in canonical order, or nullopt
/// when f is exceptional.
std::optional<NonParallelWitness> non_parallel_witness(const BivariatePoly& f);

/// sum_k g_k x^{k a} y^{k b}.
BivariatePoly compose(const UnivariatePoly& g, ExponentPair monomial);

std::string monomial_to_string(ExponentPair m);

}  // namespace sumprod
