#include "sumprod/lab/audit.hpp"

#include <cmath>
#include <unordered_set>

#include "sumprod/error.hpp"
#include "sumprod/multstruct/bound.hpp"
#include "sumprod/multstruct/exponent_system.hpp"
#include "sumprod/ratset/set_ops.hpp"

namespace sumprod::lab {

namespace {

double log10_of(const BigInt& z) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log10(mant) + static_cast<double>(exp2) * std::log10(2.0);
}

std::string describe(const MonomialDecomposition& m) {
    return "g(t) = " + m.g.to_string() + ", M = " + monomial_to_string(m.monomial);
}

}  // namespace

std::vector<Rational> upsilon(const BivariatePoly& f, const FiniteSet& a, std::uint64_t tau,
                              const PairOptions& opts) {
    std::vector<Rational> out;
    const auto histogram = multiplicity_histogram(f, a, opts);
    for (const auto& [alpha, m] : histogram.entries())
        if (m > tau) out.push_back(alpha);
    return out;
}

std::uint64_t dirty_solution_bound(std::uint32_t degree, std::size_t support_size) {
    if (support_size > 40) throw DomainError("support too large for the dirty-solution bound");
    const std::uint64_t d = degree;
    return d * d * (std::uint64_t{1} << support_size);
}

AuditReport lemma2_audit(const BivariatePoly& f, const FiniteSet& a, const AuditOptions& opts) {
    if (f.is_zero()) throw DomainError("cannot audit the zero polynomial");
    if (f.term_count() < 2)
        throw PreconditionError(Precondition::support_too_small,
                                "the audit needs at least two support terms");
    if (!opts.allow_exceptional) {
        if (const auto dec = classify_monomial_composition(f))
            throw PreconditionError(Precondition::exceptional_polynomial,
                                    "f is of the form g(M(x,y)) (" + describe(*dec) +
                                        "); the lemma does not apply. Use the override to "
                                        "audit it anyway");
    }

    AuditReport rep;
    rep.polynomial = f.to_string();
    rep.degree = f.degree();
    rep.support_size = f.term_count();
    rep.set_size = a.size();
    check_pair_cap(a, a, opts.pairs);
    rep.doubling = doubling_K(a);
    rep.table = split_table(f, a, opts.pairs);
    rep.dirty_bound = dirty_solution_bound(rep.degree, rep.support_size);

    const std::uint64_t d = rep.degree;
    const std::uint64_t monomials = (d + 2) * (d + 1) / 2;
    rep.general_dirty_bound_log10 =
        2 * std::log10(static_cast<double>(d)) + static_cast<double>(monomials) * std::log10(2.0);

    rep.tau = opts.tau.value_or(rep.dirty_bound);
    for (const auto& s : rep.table) {
        if (s.dirty > rep.dirty_bound) rep.bad_alphas.push_back(s.alpha);
        if (s.dirty_inclusive > rep.dirty_bound) rep.bad_alphas_inclusive.push_back(s.alpha);
        if (s.multiplicity() > rep.tau) rep.upsilon.push_back(s.alpha);
        rep.max_multiplicity = std::max(rep.max_multiplicity, s.multiplicity());
    }

    // the unit-equation constant dwarfs the d² 2^binom term, so log10 of the sum is log10 C
    // unless C is small enough to add exactly
    const BigInt k_floor = rep.doubling.num() / rep.doubling.den();
    const BoundValue c = amoroso_viada_bound(monomials, k_floor.get_ui(), 10'000);
    if (c.value) {
        BigInt dirty_general = BigInt(static_cast<unsigned long>(d * d));
        mpz_mul_2exp(dirty_general.get_mpz_t(), dirty_general.get_mpz_t(), monomials);
        rep.theoretical_tau_log10 = log10_of(*c.value + dirty_general);
    } else {
        rep.theoretical_tau_log10 = c.log10;
    }
    return rep;
}

InjectivityReport injectivity_audit(const BivariatePoly& f, const GGP& g, std::uint64_t t,
                                    const EnumerationOptions& opts) {
    if (f.is_zero()) throw DomainError("cannot audit the zero polynomial");
    if (const auto dec = classify_monomial_composition(f))
        throw PreconditionError(Precondition::exceptional_polynomial,
                                "f is of the form g(M(x,y)) (" + describe(*dec) +
                                    "): no two non-parallel support vectors");
    const NonParallelWitness w = *non_parallel_witness(f);
    if (!g.all_positive())
        throw PreconditionError(Precondition::nonpositive_generator,
                                "injectivity audit needs positive generators");
    const std::uint64_t needed = std::max(w.first.degree(), w.second.degree());
    if (t < needed)
        throw PreconditionError(Precondition::dilation_too_small,
                                "t = " + std::to_string(t) + " is below the witness degree " +
                                    std::to_string(needed));
    if (!distinctness_check(g, t, opts))
        throw PreconditionError(Precondition::not_distinct,
                                "products of G^(" + std::to_string(t) + ") are not pairwise distinct");

    std::vector<std::vector<std::uint64_t>> mus;
    std::vector<Rational> points;
    for_each_box_point(g, 1, opts, [&](std::span<const std::uint64_t> mu, const Rational& v) {
        mus.emplace_back(mu.begin(), mu.end());
        points.push_back(v);
    });
    const auto pairs = static_cast<unsigned long long>(points.size()) * points.size();
    if (pairs > opts.max_points) throw CapExceeded("injectivity pairs", pairs, opts.max_points);
    const auto index = box_index(g, t, opts);

    InjectivityReport rep;
    rep.witness = w;
    rep.t = t;
    rep.progression_size = points.size();
    rep.pairs = pairs;

    struct PairHash {
        std::size_t operator()(const std::pair<Rational, Rational>& p) const noexcept {
            return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
        }
    };
    std::unordered_set<std::pair<Rational, Rational>, PairHash> seen;
    seen.reserve(pairs);
    std::vector<std::int64_t> t1, t2;
    for (std::size_t xi = 0; xi < points.size(); ++xi) {
        for (std::size_t yi = 0; yi < points.size(); ++yi) {
            const Rational& x = points[xi];
            const Rational& y = points[yi];
            Rational z1 = x.pow(w.first.i) * y.pow(w.first.j);
            Rational z2 = x.pow(w.second.i) * y.pow(w.second.j);

            const auto i1 = index.find(z1);
            const auto i2 = index.find(z2);
            bool reproduced = false;
            if (i1 != index.end() && i2 != index.end()) {
                t1.assign(i1->second.begin(), i1->second.end());
                t2.assign(i2->second.begin(), i2->second.end());
                const auto sol = solve_exponent_system(w.first, w.second, t1, t2);
                if (sol) {
                    reproduced = true;
                    for (std::size_t k = 0; k < g.rank() && reproduced; ++k)
                        reproduced = sol->x[k] == static_cast<std::int64_t>(mus[xi][k]) &&
                                     sol->y[k] == static_cast<std::int64_t>(mus[yi][k]);
                }
            }
            if (!reproduced) ++rep.solver_mismatches;
            if (!seen.emplace(std::move(z1), std::move(z2)).second) ++rep.collisions;
        }
    }
    return rep;
}

CauchySchwarzReport cauchy_schwarz_check(const BivariatePoly& f, const FiniteSet& a,
                                         const PairOptions& opts) {
    const auto hist = multiplicity_histogram(f, a, opts);
    CauchySchwarzReport rep;
    rep.energy = hist.sum_of_squares();
    rep.image_size = hist.size();
    rep.set_size = a.size();
    const BigInt n(static_cast<unsigned long>(a.size()));
    const BigInt n4 = n * n * n * n;
    rep.bound = Rational(n4, BigInt(static_cast<unsigned long>(rep.image_size)));
    rep.holds = rep.energy * static_cast<unsigned long>(rep.image_size) >= n4;
    return rep;
}

}  // namespace sumprod::lab
