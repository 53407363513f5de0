#include "sumprod/ratset/set_ops.hpp"

#include <unordered_set>

namespace sumprod {

namespace {

template <typename Op>
FiniteSet combine(const FiniteSet& a, const FiniteSet& b, Op op) {
    std::unordered_set<Rational> seen;
    seen.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) seen.insert(op(x, y));
    return FiniteSet::from_values(std::vector<Rational>(seen.begin(), seen.end()));
}

}  // namespace

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

FiniteSet productset(const FiniteSet& a, const FiniteSet& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

Rational doubling_K(const FiniteSet& a) {
    return Rational(static_cast<long>(productset(a, a).size()), static_cast<long>(a.size()));
}

}  // namespace sumprod
