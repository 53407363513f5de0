#include "sumprod/lab/sweep.hpp"

#include <cmath>

#include "sumprod/error.hpp"
#include "sumprod/polyalg/monomial_form.hpp"
#include "sumprod/ratset/set_ops.hpp"

namespace sumprod::lab {

std::string FamilySpec::describe() const {
    switch (kind) {
        case Kind::geometric:
            return "geometric:" + ratio.to_string();
        case Kind::ggp:
            return "ggp:" + progression.to_string();
        case Kind::files: {
            std::string s = "files:";
            for (std::size_t k = 0; k < files.size(); ++k) {
                if (k) s += ',';
                s += files[k].string();
            }
            return s;
        }
    }
    return {};
}

FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("family must look like geometric:q, ggp:SPEC or files:a,b", 0);
    const std::string_view kind = text.substr(0, colon);
    const std::string_view arg = text.substr(colon + 1);
    FamilySpec spec;
    if (kind == "geometric") {
        spec.kind = FamilySpec::Kind::geometric;
        try {
            spec.ratio = parse_rational(arg);
        } catch (const ParseError& e) {
            throw ParseError("bad geometric ratio", colon + 1 + e.position());
        }
        if (spec.ratio.is_zero() || spec.ratio.abs().is_one())
            throw ParseError("geometric ratio must not be 0, 1 or -1", colon + 1);
    } else if (kind == "ggp") {
        spec.kind = FamilySpec::Kind::ggp;
        try {
            spec.progression = parse_ggp(arg);
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad GGP family: ") + e.what(), colon + 1 + e.position());
        }
    } else if (kind == "files" || kind == "file") {
        spec.kind = FamilySpec::Kind::files;
        std::size_t start = 0;
        while (start <= arg.size()) {
            auto comma = arg.find(',', start);
            if (comma == std::string_view::npos) comma = arg.size();
            if (comma > start) spec.files.emplace_back(std::string(arg.substr(start, comma - start)));
            start = comma + 1;
        }
        if (spec.files.empty()) throw ParseError("files family lists no files", colon + 1);
    } else {
        throw ParseError("unknown family '" + std::string(kind) + "'", 0);
    }
    return spec;
}

FiniteSet family_member(const FamilySpec& family, std::uint64_t n, const EnumerationOptions& opts) {
    switch (family.kind) {
        case FamilySpec::Kind::geometric:
            if (n == 0 || n > 1'000'000) throw DomainError("geometric family needs 1 <= N <= 10^6");
            return geometric_set(family.ratio, static_cast<unsigned>(n));
        case FamilySpec::Kind::ggp:
            if (n == 0) throw DomainError("ggp family needs N >= 1");
            return ggp_power(family.progression.scaled(n), 1, opts);
        case FamilySpec::Kind::files:
            if (n == 0 || n > family.files.size()) throw DomainError("no file for that sample");
            return read_set_file(family.files[n - 1]);
    }
    throw DomainError("unknown family kind");
}

std::optional<double> fit_growth_exponent(std::span<const SweepRow> rows) {
    if (rows.size() < 2) return std::nullopt;
    double sx = 0, sy = 0;
    for (const auto& r : rows) {
        sx += std::log(static_cast<double>(r.set_size));
        sy += std::log(static_cast<double>(r.image_size));
    }
    const double mx = sx / static_cast<double>(rows.size());
    const double my = sy / static_cast<double>(rows.size());
    double sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        const double dx = std::log(static_cast<double>(r.set_size)) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(static_cast<double>(r.image_size)) - my);
    }
    if (sxx == 0) return std::nullopt;
    return sxy / sxx;
}

ExpansionReport expansion_sweep(const BivariatePoly& f, const FamilySpec& family,
                                std::span<const std::uint64_t> ns, const SweepOptions& opts) {
    if (f.is_zero()) throw DomainError("cannot sweep the zero polynomial");
    ExpansionReport rep;
    rep.family = family.describe();
    rep.polynomial = f.to_string();
    if (const auto dec = classify_monomial_composition(f)) {
        rep.exceptional = true;
        if (!opts.allow_exceptional)
            throw PreconditionError(
                Precondition::exceptional_polynomial,
                "f = " + f.to_string() + " is of the form g(M(x,y)) with g(t) = " + dec->g.to_string() +
                    ", M = " + monomial_to_string(dec->monomial) +
                    "; such f need not expand. Pass the override to reproduce its growth anyway");
    }

    std::vector<std::uint64_t> samples(ns.begin(), ns.end());
    if (family.kind == FamilySpec::Kind::files) {
        samples.clear();
        for (std::uint64_t k = 1; k <= family.files.size(); ++k) samples.push_back(k);
    }
    if (samples.empty()) throw DomainError("sweep needs at least one sample size");

    for (const std::uint64_t n : samples) {
        const FiniteSet a = family_member(family, n, opts.enumeration);
        check_pair_cap(a, a, opts.pairs);
        SweepRow row;
        row.n = n;
        row.set_size = a.size();
        row.productset_size = productset(a, a).size();
        row.doubling = Rational(static_cast<long>(row.productset_size), static_cast<long>(row.set_size));
        row.image_size = multiplicity_histogram(f, a, opts.pairs).size();
        const BigInt sq(static_cast<unsigned long>(row.set_size * row.set_size));
        row.ratio = Rational(BigInt(static_cast<unsigned long>(row.image_size)), sq);
        rep.rows.push_back(std::move(row));
    }
    rep.growth_exponent = fit_growth_exponent(rep.rows);
    return rep;
}

}  // namespace sumprod::lab
