#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/lab/split.hpp"
#include "sumprod/multstruct/ggp.hpp"
#include "sumprod/polyalg/monomial_form.hpp"

namespace sumprod::lab {

/// All alpha with m_A(alpha) > tau, sorted.
std::vector<Rational> upsilon(const BivariatePoly& f, const FiniteSet& a, std::uint64_t tau,
                              const PairOptions& opts = {});

/// d² · 2^|S|, the per-alpha cap on dirty solutions outside the exceptional alphas.
std::uint64_t dirty_solution_bound(std::uint32_t degree, std::size_t support_size);

struct AuditOptions {
    PairOptions pairs;
    /// Threshold for the exceptional set; defaults to d² · 2^|S|.
    std::optional<std::uint64_t> tau;
    bool allow_exceptional = false;
};

struct AuditReport {
    std::string polynomial;
    std::uint32_t degree = 0;
    std::size_t support_size = 0;
    std::size_t set_size = 0;
    Rational doubling;                     // K = |AA| / |A|
    std::vector<SolutionSplit> table;
    std::uint64_t dirty_bound = 0;         // d² · 2^|S|
    double general_dirty_bound_log10 = 0;  // log10(d² · 2^binom(d+2, 2))
    std::vector<Rational> bad_alphas;      // dirty > dirty_bound
    std::vector<Rational> bad_alphas_inclusive;
    std::uint64_t tau = 0;
    double theoretical_tau_log10 = 0;      // log10(C(binom(d+2,2), floor K) + d² 2^binom(d+2,2))
    std::vector<Rational> upsilon;         // m > tau
    std::uint64_t max_multiplicity = 0;

    /// At most d + 1 alphas exceed the dirty bound.
    bool consistent() const { return bad_alphas.size() <= degree + 1; }
    bool conventions_agree() const { return bad_alphas == bad_alphas_inclusive; }
};

/// Brute-force check of the vanishing-subsum lemma on A × A. Refuses exceptional f unless
/// opts.allow_exceptional.
AuditReport lemma2_audit(const BivariatePoly& f, const FiniteSet& a, const AuditOptions& opts = {});

struct InjectivityReport {
    NonParallelWitness witness;
    std::uint64_t t = 0;
    std::size_t progression_size = 0;
    std::uint64_t pairs = 0;
    std::uint64_t collisions = 0;         // pairs sharing their two monomial values
    std::uint64_t solver_mismatches = 0;  // pairs the exponent solver did not reproduce

    bool injective() const { return collisions == 0; }
    bool solver_consistent() const { return solver_mismatches == 0; }
    bool passed() const { return injective() && solver_consistent(); }
};

/// Checks that (x, y) -> (x^i y^j, x^i' y^j') is injective on G × G for the witness pair of f,
/// and that decoding both values in G^(t) and solving the exponent system recovers (x, y).
/// Preconditions, each with its own PreconditionError kind: f non-exceptional, generators
/// positive, t at least the degree of both witness monomials, G^(t) pairwise distinct.
InjectivityReport injectivity_audit(const BivariatePoly& f, const GGP& g, std::uint64_t t,
                                    const EnumerationOptions& opts = {});

struct CauchySchwarzReport {
    BigInt energy;
    std::size_t image_size = 0;
    std::size_t set_size = 0;
    Rational bound;  // |A|⁴ / |f(A, A)|
    bool holds = false;
};

CauchySchwarzReport cauchy_schwarz_check(const BivariatePoly& f, const FiniteSet& a,
                                         const PairOptions& opts = {});

}  // namespace sumprod::lab
