#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumprod/multstruct/ggp.hpp"
#include "sumprod/polyalg/poly.hpp"
#include "sumprod/ratset/image.hpp"

namespace sumprod::lab {

/// Which sets a sweep runs over.
///   geometric:q      N -> {q, q^2, ..., q^N}
///   ggp:SPEC         N -> the progression with every box size multiplied by N
///   files:a.txt,...  one set per file; N is the file's position (1-based)
struct FamilySpec {
    enum class Kind { geometric, ggp, files };

    Kind kind = Kind::geometric;
    Rational ratio{2};
    GGP progression;
    std::vector<std::filesystem::path> files;

    std::string describe() const;
};

FamilySpec parse_family(std::string_view text);

/// The member of the family for sample size N.
FiniteSet family_member(const FamilySpec& family, std::uint64_t n,
                        const EnumerationOptions& opts = {});

struct SweepRow {
    std::uint64_t n = 0;
    std::size_t set_size = 0;
    std::size_t productset_size = 0;
    Rational doubling;  // K
    std::size_t image_size = 0;
    Rational ratio;     // |f(A, A)| / |A|²
};

struct ExpansionReport {
    std::string family;
    std::string polynomial;
    bool exceptional = false;
    std::vector<SweepRow> rows;
    /// Least-squares slope of log |f(A, A)| against log |A|; present with two or more distinct
    /// set sizes.
    std::optional<double> growth_exponent;
};

struct SweepOptions {
    PairOptions pairs;
    EnumerationOptions enumeration;
    /// Exceptional f = g(M) is refused unless set.
    bool allow_exceptional = false;
};

/// For the files family `ns` is ignored: every listed file is one sample.
ExpansionReport expansion_sweep(const BivariatePoly& f, const FamilySpec& family,
                                std::span<const std::uint64_t> ns, const SweepOptions& opts = {});

std::optional<double> fit_growth_exponent(std::span<const SweepRow> rows);

}  // namespace sumprod::lab
