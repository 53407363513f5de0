#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sumprod/error.hpp"
#include "sumprod/lab/random.hpp"
#include "sumprod/multstruct/bound.hpp"
#include "sumprod/multstruct/exponent_system.hpp"
#include "sumprod/multstruct/factor.hpp"
#include "sumprod/multstruct/ggp.hpp"
#include "sumprod/multstruct/lattice.hpp"
#include "sumprod/multstruct/structure.hpp"
#include "sumprod/ratset/set_ops.hpp"

using namespace sumprod;

namespace {

FiniteSet S(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return FiniteSet::from_values(std::move(v));
}

std::map<BigInt, std::int64_t> E(std::initializer_list<std::pair<long, std::int64_t>> xs) {
    std::map<BigInt, std::int64_t> m;
    for (auto [p, e] : xs) m[BigInt(p)] = e;
    return m;
}

}  // namespace

TEST(Factorize, Examples) {
    const auto a = factorize(Rational(12));
    EXPECT_EQ(a.sign, 1);
    EXPECT_EQ(a.exponents, E({{2, 2}, {3, 1}}));
    const auto b = factorize(Rational(-3, 4));
    EXPECT_EQ(b.sign, -1);
    EXPECT_EQ(b.exponents, E({{2, -2}, {3, 1}}));
    const auto c = factorize(Rational(1));
    EXPECT_EQ(c.sign, 1);
    EXPECT_TRUE(c.exponents.empty());
    EXPECT_THROW(factorize(Rational(0)), DomainError);
}

TEST(Factorize, LargeCofactors) {
    // 1000003 and 1000033 are primes above the trial bound
    const BigInt p("1000003"), q("1000033");
    const auto f = factorize(Rational(BigInt(p * p * 6), BigInt(q)));
    EXPECT_EQ(f.exponents.at(p), 2);
    EXPECT_EQ(f.exponents.at(q), -1);
    EXPECT_EQ(f.exponents.at(BigInt(2)), 1);
    EXPECT_TRUE(f.unresolved.empty());

    // a small trial bound leaves a composite cofactor unresolved
    const Factorizer tiny(100);
    const auto g = tiny.factorize(Rational(101 * 103));
    EXPECT_EQ(g.unresolved.size(), 1u);
    EXPECT_EQ(g.reconstruct(), Rational(101 * 103));
    EXPECT_TRUE(is_probable_prime(p));
    EXPECT_FALSE(is_probable_prime(p * q));
}

TEST(Factorize, RoundTrip) {
    lab::Rng rng(1000);
    for (int k = 0; k < 1000; ++k) {
        Rational q = lab::random_nonzero_rational(rng, 5000, 5000);
        if (k % 4 == 0) q = q * Rational(BigInt(BigInt("1000000007") * static_cast<unsigned long>(rng() % 1000 + 1)));
        if (k % 7 == 0) q = q.pow(3);
        EXPECT_EQ(factorize(q).reconstruct(), q) << q;
    }
}

TEST(Lattice, HermiteNormalForm) {
    IntMatrix m{{BigInt(2), BigInt(4)}, {BigInt(3), BigInt(6)}, {BigInt(0), BigInt(5)}};
    const auto h = hermite_normal_form(m);
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(h[0], (std::vector<BigInt>{BigInt(1), BigInt(2)}));
    EXPECT_EQ(h[1], (std::vector<BigInt>{BigInt(0), BigInt(5)}));
    EXPECT_TRUE(hermite_normal_form({}).empty());
    EXPECT_THROW(hermite_normal_form({{BigInt(1)}, {BigInt(1), BigInt(2)}}), DomainError);
}

TEST(Lattice, RankMatchesRationalElimination) {
    lab::Rng rng(5);
    std::uniform_int_distribution<int> entry(-4, 4), dim(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        IntMatrix m(rows, std::vector<BigInt>(cols));
        std::vector<std::vector<Rational>> q(rows, std::vector<Rational>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                // sparse entries make rank deficiency common
                const int v = (rng() % 2) ? entry(rng) : 0;
                m[r][c] = v;
                q[r][c] = Rational(v);
            }
        EXPECT_EQ(lattice_rank(m), oracle::rational_rank(q));
        const auto h = hermite_normal_form(m);
        for (std::size_t r = 0; r < h.size(); ++r) {
            std::size_t pivot = 0;
            while (h[r][pivot] == 0) ++pivot;
            EXPECT_GT(h[r][pivot], 0);
            for (std::size_t above = 0; above < r; ++above) {
                EXPECT_GE(h[above][pivot], 0);
                EXPECT_LT(h[above][pivot], h[r][pivot]);
            }
        }
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(multiplicative_rank(S({2, 4, 8})), 1u);
    EXPECT_EQ(multiplicative_rank(S({2, 3, 6})), 2u);
    EXPECT_EQ(multiplicative_rank(S({1})), 0u);
    EXPECT_EQ(multiplicative_rank(S({-1, 1})), 0u);
    EXPECT_THROW(multiplicative_rank(S({0, 2})), DomainError);
}

TEST(Rank, CoprimeRefinementOfUnresolvedCofactors) {
    const Factorizer tiny(100);
    EXPECT_EQ(multiplicative_rank(S({101 * 103, 101 * 107, 103 * 107}), tiny), 3u);
    EXPECT_EQ(multiplicative_rank(S({101 * 103, 101, 103}), tiny), 2u);
    EXPECT_EQ(multiplicative_rank(S({101 * 103, 101 * 103 * 101 * 103}), tiny), 1u);
    const auto em = exponent_matrix(S({101 * 103, 101}), tiny);
    EXPECT_EQ(em.basis, (std::vector<BigInt>{BigInt(101), BigInt(103)}));
}

TEST(Rank, PowersOfOneElement) {
    lab::Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        Rational q = lab::random_nonzero_rational(rng, 30, 30);
        if (q == Rational(1) || q == Rational(-1)) continue;
        std::vector<Rational> v;
        const int n = 1 + trial % 12;
        for (int k = 1; k <= n; ++k) v.push_back(q.pow(k));
        EXPECT_EQ(multiplicative_rank(FiniteSet::from_values(v)), 1u) << q;
    }
}

TEST(Rank, ProductSetPreservesRank) {
    lab::Rng rng(78);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> v;
        for (int k = 0; k < 6; ++k) v.push_back(lab::random_nonzero_rational(rng, 40, 12).abs());
        const auto a = FiniteSet::from_values(v);
        EXPECT_EQ(multiplicative_rank(productset(a, a)), multiplicative_rank(a));
    }
}

TEST(GGP, ParseAndPrint) {
    const auto g = parse_ggp("2^[3] * 3^[3]");
    EXPECT_EQ(g.generators, (std::vector<Rational>{Rational(2), Rational(3)}));
    EXPECT_EQ(g.dims, (std::vector<std::uint64_t>{3, 3}));
    EXPECT_EQ(g.to_string(), "2^[3] * 3^[3]");
    EXPECT_EQ(parse_ggp("1/2^[4]").generators[0], Rational(1, 2));
    EXPECT_EQ(parse_ggp("").rank(), 0u);
    EXPECT_THROW(parse_ggp("2^3"), ParseError);
    EXPECT_THROW(parse_ggp("2^[0]"), ParseError);
    EXPECT_THROW(parse_ggp("1^[3]"), ParseError);
    EXPECT_THROW(make_ggp({Rational(1)}, {3}), DomainError);
    EXPECT_THROW(parse_ggp("0^[3]"), ParseError);
    EXPECT_EQ(g.scaled(4).dims, (std::vector<std::uint64_t>{12, 12}));
    EXPECT_EQ(g.box_size(2), 36u);
}

TEST(GGP, PowerExamples) {
    EXPECT_EQ(ggp_power(parse_ggp("2^[3]"), 1), S({1, 2, 4}));
    EXPECT_EQ(ggp_power(parse_ggp("2^[2] * 3^[2]"), 1), S({1, 2, 3, 6}));
    EXPECT_EQ(ggp_power(parse_ggp("2^[2]"), 2), S({1, 2, 4, 8}));
    EXPECT_EQ(ggp_power(parse_ggp(""), 5), S({1}));
    EnumerationOptions small;
    small.max_points = 35;
    EXPECT_THROW(ggp_power(parse_ggp("2^[3] * 3^[3]"), 2, small), CapExceeded);
}

TEST(GGP, DistinctnessExamples) {
    EXPECT_TRUE(distinctness_check(parse_ggp("2^[3] * 3^[3]"), 2));
    EXPECT_EQ(ggp_power(parse_ggp("2^[3] * 3^[3]"), 2).size(), 36u);
    EXPECT_FALSE(distinctness_check(parse_ggp("2^[3] * 4^[3]"), 1));
    EXPECT_TRUE(distinctness_check(parse_ggp("2^[1]"), 1));
    EXPECT_FALSE(distinctness_check(parse_ggp("-1^[3]"), 1));
    EXPECT_THROW(box_index(parse_ggp("2^[3] * 4^[3]"), 1), PreconditionError);
    const auto idx = box_index(parse_ggp("2^[2] * 3^[2]"), 1);
    EXPECT_EQ(idx.at(Rational(6)), (std::vector<std::uint64_t>{1, 1}));
}

TEST(GGP, DistinctnessMatchesPairwiseComparison) {
    lab::Rng rng(2024);
    const std::vector<Rational> pool{Rational(2), Rational(3), Rational(4), Rational(6), Rational(8),
                                     Rational(1, 2), Rational(9), Rational(2, 3), Rational(-2),
                                     Rational(5), Rational(12), Rational(-1)};
    int distinct = 0, collide = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = rng() % 4;
        std::vector<Rational> gens;
        std::vector<std::uint64_t> dims;
        for (std::size_t k = 0; k < r; ++k) {
            gens.push_back(pool[rng() % pool.size()]);
            dims.push_back(1 + rng() % 6);
        }
        const auto g = make_ggp(gens, dims);
        const std::uint64_t t = 1 + rng() % 3;
        if (g.box_size(t) > 10'000) continue;
        const bool want = oracle::naive_distinct(g, t);
        EXPECT_EQ(distinctness_check(g, t), want) << g.to_string() << " t=" << t;
        EXPECT_EQ(ggp_power(g, t).size() == g.box_size(t), want);
        (want ? distinct : collide)++;
    }
    EXPECT_GT(distinct, 30);
    EXPECT_GT(collide, 30);
}

TEST(Solver, Examples) {
    const std::vector<std::int64_t> five{5}, thirteen{13}, zero{0}, one{1};
    auto s = solve_exponent_system({1, 1}, {2, 3}, five, thirteen);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->x, std::vector<std::int64_t>{2});
    EXPECT_EQ(s->y, std::vector<std::int64_t>{3});

    const std::vector<std::int64_t> a{7, -3}, b{-2, 11};
    s = solve_exponent_system({1, 0}, {0, 1}, a, b);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->x, a);
    EXPECT_EQ(s->y, b);

    s = solve_exponent_system({1, 1}, {2, 3}, zero, one);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->x, std::vector<std::int64_t>{-1});
    EXPECT_EQ(s->y, std::vector<std::int64_t>{1});

    s = solve_exponent_system({1, 1}, {2, 3}, one, one);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->x, std::vector<std::int64_t>{2});
    EXPECT_EQ(s->y, std::vector<std::int64_t>{-1});

    EXPECT_FALSE(solve_exponent_system({1, 1}, {1, 3}, zero, one));
    EXPECT_THROW(solve_exponent_system({1, 1}, {2, 2}, one, one), PreconditionError);
    EXPECT_THROW(solve_exponent_system({1, 0}, {0, 1}, a, one), DomainError);
}

TEST(Solver, AgreesWithMatrixInverse) {
    lab::Rng rng(11);
    std::uniform_int_distribution<int> e(0, 6);
    std::uniform_int_distribution<std::int64_t> rhs(-50, 50);
    int integral = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const ExponentPair v1{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng))};
        const ExponentPair v2{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng))};
        const std::vector<std::int64_t> t1{rhs(rng)}, t2{rhs(rng)};
        if (!non_parallel(v1, v2)) {
            EXPECT_THROW(solve_exponent_system(v1, v2, t1, t2), PreconditionError);
            continue;
        }
        const auto [x, y] = oracle::inverse_2x2_solve(v1, v2, Rational(t1[0]), Rational(t2[0]));
        const auto s = solve_exponent_system(v1, v2, t1, t2);
        ASSERT_EQ(s.has_value(), x.is_integer() && y.is_integer());
        if (!s) continue;
        ++integral;
        EXPECT_EQ(Rational(s->x[0]), x);
        EXPECT_EQ(Rational(s->y[0]), y);
        // both equations hold exactly
        EXPECT_EQ(v1.i * s->x[0] + v1.j * s->y[0], t1[0]);
        EXPECT_EQ(v2.i * s->x[0] + v2.j * s->y[0], t2[0]);
    }
    EXPECT_GT(integral, 100);
}

TEST(Bound, Examples) {
    const auto c10 = amoroso_viada_bound(1, 0);
    EXPECT_EQ(c10.base, 8u);
    EXPECT_EQ(c10.exponent, 8);
    ASSERT_TRUE(c10.value);
    EXPECT_EQ(*c10.value, BigInt("16777216"));
    const auto c11 = amoroso_viada_bound(1, 1);
    ASSERT_TRUE(c11.value);
    EXPECT_EQ(*c11.value, BigInt("68719476736"));
    const auto c32 = amoroso_viada_bound(3, 2);
    EXPECT_EQ(c32.exponent, 3240);
    EXPECT_NEAR(c32.log10, 3240 * std::log10(24.0), 1e-6 * c32.log10);
    ASSERT_TRUE(c32.value);
    EXPECT_EQ(c32.value->get_str().size(), static_cast<std::size_t>(std::floor(c32.log10)) + 1);
    BigInt direct;
    mpz_ui_pow_ui(direct.get_mpz_t(), 24, 3240);
    EXPECT_EQ(*c32.value, direct);
    EXPECT_THROW(amoroso_viada_bound(0, 0), DomainError);
    EXPECT_FALSE(amoroso_viada_bound(6, 6, 1000).value);
}

TEST(Bound, StrictlyIncreasing) {
    for (std::uint64_t n = 1; n <= 6; ++n)
        for (std::uint64_t r = 0; r <= 6; ++r) {
            const auto here = amoroso_viada_bound(n, r, 0);
            EXPECT_LT(here.log10, amoroso_viada_bound(n + 1, r, 0).log10);
            EXPECT_LT(here.log10, amoroso_viada_bound(n, r + 1, 0).log10);
        }
}
