#include "sumprod/ratset/finite_set.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "sumprod/error.hpp"

namespace sumprod {

FiniteSet FiniteSet::from_values(std::vector<Rational> values) {
    if (values.empty()) throw DomainError("a finite set needs at least one element");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return FiniteSet(std::move(values));
}

bool FiniteSet::contains(const Rational& q) const {
    return std::binary_search(elements_.begin(), elements_.end(), q);
}

FiniteSet geometric_set(const Rational& q, unsigned n) {
    if (n == 0) throw DomainError("geometric family needs N >= 1");
    std::vector<Rational> v;
    v.reserve(n);
    Rational p = q;
    for (unsigned i = 0; i < n; ++i) {
        v.push_back(p);
        p *= q;
    }
    return FiniteSet::from_values(std::move(v));
}

FiniteSet parse_set_text(std::string_view text) {
    std::vector<Rational> values;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            try {
                values.push_back(parse_rational(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad set element '") + std::string(line) + "'",
                                 line_start + e.position());
            }
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    return FiniteSet::from_values(std::move(values));
}

FiniteSet read_set_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open set file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_set_text(buf.str());
}

void write_set(std::ostream& os, const FiniteSet& set) {
    for (const auto& q : set) os << q << '\n';
}

}  // namespace sumprod
