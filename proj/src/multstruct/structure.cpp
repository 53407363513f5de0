#include "sumprod/multstruct/structure.hpp"

#include <algorithm>
#include <map>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

// Replaces the keys by a pairwise coprime set such that every original key is a product of
// members.
std::vector<BigInt> coprime_base(std::vector<BigInt> keys) {
    auto normalize = [](std::vector<BigInt>& v) {
        std::erase_if(v, [](const BigInt& z) { return z == 1; });
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(keys);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < keys.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < keys.size() && !changed; ++j) {
                BigInt g;
                mpz_gcd(g.get_mpz_t(), keys[i].get_mpz_t(), keys[j].get_mpz_t());
                if (g == 1) continue;
                BigInt a = keys[i] / g;
                BigInt b = keys[j] / g;
                keys[i] = g;
                keys[j] = std::move(a);
                keys.push_back(std::move(b));
                changed = true;
            }
        }
        normalize(keys);
    }
    return keys;
}

}  // namespace

ExponentMatrix exponent_matrix(const FiniteSet& a, const Factorizer& factorizer) {
    if (a.contains_zero())
        throw DomainError("0 lies in no multiplicative group; remove it before structure analysis");

    std::vector<FactoredElement> factored;
    factored.reserve(a.size());
    for (const auto& q : a) factored.push_back(factorizer.factorize(q));

    // keys above the trial bound may share factors across elements; refine those jointly
    const BigInt bound(factorizer.trial_bound());
    std::vector<BigInt> small;
    std::vector<BigInt> large;
    for (const auto& fe : factored)
        for (const auto& [key, e] : fe.exponents) (key > bound ? large : small).push_back(key);
    std::vector<BigInt> basis = coprime_base(std::move(large));
    std::sort(small.begin(), small.end());
    small.erase(std::unique(small.begin(), small.end()), small.end());
    basis.insert(basis.begin(), small.begin(), small.end());

    std::map<BigInt, std::size_t> column;
    for (std::size_t k = 0; k < basis.size(); ++k) column.emplace(basis[k], k);

    ExponentMatrix out;
    out.basis = basis;
    for (const auto& fe : factored) {
        std::vector<BigInt> row(basis.size(), 0);
        for (const auto& [key, e] : fe.exponents) {
            if (key <= bound) {
                row[column.at(key)] += e;
                continue;
            }
            BigInt rest = key;
            for (std::size_t k = small.size(); k < basis.size() && rest != 1; ++k) {
                while (mpz_divisible_p(rest.get_mpz_t(), basis[k].get_mpz_t())) {
                    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), basis[k].get_mpz_t());
                    row[k] += e;
                }
            }
        }
        out.rows.push_back(std::move(row));
        out.signs.push_back(fe.sign);
    }
    return out;
}

std::size_t multiplicative_rank(const FiniteSet& a, const Factorizer& factorizer) {
    const ExponentMatrix m = exponent_matrix(a, factorizer);
    if (m.basis.empty()) return 0;
    return lattice_rank(m.rows);
}

}  // namespace sumprod
