#include "sumprod/multstruct/ggp.hpp"

#include <cctype>
#include <limits>
#include <unordered_set>

#include "sumprod/error.hpp"

namespace sumprod {

bool GGP::all_positive() const {
    for (const auto& g : generators)
        if (g.sign() <= 0) return false;
    return true;
}

std::uint64_t GGP::box_size(std::uint64_t t) const {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t n = 1;
    for (const auto h : dims) {
        if (t != 0 && h > kMax / t) throw CapExceeded("GGP box side", kMax, kMax);
        const std::uint64_t side = h * t;
        if (side != 0 && n > kMax / side) throw CapExceeded("GGP box size", kMax, kMax);
        n *= side;
    }
    return n;
}

GGP GGP::scaled(std::uint64_t factor) const {
    GGP out = *this;
    for (auto& h : out.dims) h *= factor;
    return out;
}

std::string GGP::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) s += " * ";
        s += generators[i].to_string() + "^[" + std::to_string(dims[i]) + "]";
    }
    return s;
}

GGP make_ggp(std::vector<Rational> generators, std::vector<std::uint64_t> dims) {
    if (generators.size() != dims.size())
        throw DomainError("GGP needs one box size per generator");
    for (const auto& g : generators) {
        if (g.is_zero()) throw DomainError("GGP generator must be nonzero");
        if (g.is_one()) throw DomainError("GGP generator must differ from 1");
    }
    for (const auto h : dims)
        if (h == 0) throw DomainError("GGP box sizes must be positive");
    return GGP{std::move(generators), std::move(dims)};
}

GGP parse_ggp(std::string_view text) {
    std::vector<Rational> gens;
    std::vector<std::uint64_t> dims;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos == text.size()) return GGP{};
    for (;;) {
        skip();
        const std::size_t start = pos;
        const std::size_t caret = text.find('^', pos);
        if (caret == std::string_view::npos) throw ParseError("expected '^[H]' after generator", pos);
        try {
            gens.push_back(parse_rational(text.substr(start, caret - start)));
        } catch (const ParseError& e) {
            throw ParseError("bad GGP generator", start + e.position());
        }
        pos = caret + 1;
        skip();
        if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
        ++pos;
        skip();
        const std::size_t digits = pos;
        std::uint64_t h = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (h > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
                throw ParseError("box size too large", digits);
            h = h * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            ++pos;
        }
        if (pos == digits) throw ParseError("expected a box size", pos);
        skip();
        if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
        ++pos;
        dims.push_back(h);
        skip();
        if (pos == text.size()) break;
        if (text[pos] != '*') throw ParseError("expected '*' between factors", pos);
        ++pos;
    }
    try {
        return make_ggp(std::move(gens), std::move(dims));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

void for_each_box_point(const GGP& g, std::uint64_t t, const EnumerationOptions& opts,
                        const std::function<void(std::span<const std::uint64_t>, const Rational&)>& visit) {
    if (t == 0) throw DomainError("dilation t must be positive");
    const std::uint64_t total = g.box_size(t);
    if (total > opts.max_points) throw CapExceeded("GGP enumeration", total, opts.max_points);

    const std::size_t r = g.rank();
    std::vector<std::uint64_t> mu(r, 0);
    // prefix[k] = Π_{i<k} g_i^{mu_i}; the odometer only recomputes the suffix it advanced
    std::vector<Rational> prefix(r + 1, Rational(1));
    for (;;) {
        visit(mu, prefix[r]);
        std::size_t k = r;
        while (k > 0) {
            --k;
            if (++mu[k] < g.dims[k] * t) break;
            mu[k] = 0;
            if (k == 0) return;
        }
        if (r == 0) return;
        // mu[k] advanced; rebuild prefix products from k on
        prefix[k + 1] = prefix[k] * g.generators[k].pow(mu[k]);
        for (std::size_t i = k + 1; i < r; ++i) prefix[i + 1] = prefix[i];
    }
}

FiniteSet ggp_power(const GGP& g, std::uint64_t t, const EnumerationOptions& opts) {
    std::vector<Rational> values;
    for_each_box_point(g, t, opts, [&](std::span<const std::uint64_t>, const Rational& v) {
        values.push_back(v);
    });
    return FiniteSet::from_values(std::move(values));
}

bool distinctness_check(const GGP& g, std::uint64_t t, const EnumerationOptions& opts) {
    std::unordered_set<Rational> seen;
    bool distinct = true;
    for_each_box_point(g, t, opts, [&](std::span<const std::uint64_t>, const Rational& v) {
        if (!seen.insert(v).second) distinct = false;
    });
    return distinct;
}

std::unordered_map<Rational, std::vector<std::uint64_t>> box_index(const GGP& g, std::uint64_t t,
                                                                  const EnumerationOptions& opts) {
    std::unordered_map<Rational, std::vector<std::uint64_t>> index;
    for_each_box_point(g, t, opts, [&](std::span<const std::uint64_t> mu, const Rational& v) {
        auto [it, inserted] = index.try_emplace(v, mu.begin(), mu.end());
        if (!inserted)
            throw PreconditionError(Precondition::not_distinct,
                                    "G^(t) products are not pairwise distinct: " + v.to_string());
    });
    return index;
}

}  // namespace sumprod
