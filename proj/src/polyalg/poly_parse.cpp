#include <cctype>
#include <string>

#include "sumprod/error.hpp"
#include "sumprod/polyalg/poly.hpp"

namespace sumprod {

namespace {

constexpr std::uint32_t kMaxExponent = 100000;

// Recursive descent over the grammar
//   poly   := ["+"|"-"] term (("+"|"-") term)*
//   term   := coef ("*" factor)* | factor ("*" factor)*
//   factor := ("x"|"y") ("^" uint)?
//   coef   := uint ("/" uint)? | decimal
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    BivariatePoly parse() {
        BivariatePoly result;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            advance();
        }
        for (;;) {
            auto [e, c] = term();
            result.add_term(e, negative ? -c : c);
            skip_space();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail(unexpected());
            negative = peek() == '-';
            advance();
        }
        return result;
    }

private:
    std::pair<ExponentPair, Rational> term() {
        skip_space();
        if (at_end()) fail("expected a term");
        Rational coef(1);
        ExponentPair e;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            coef = coefficient();
        } else {
            factor(e);
        }
        for (;;) {
            skip_space();
            if (at_end() || peek() != '*') break;
            advance();
            factor(e);
        }
        return {e, coef};
    }

    void factor(ExponentPair& e) {
        skip_space();
        if (at_end()) fail("expected 'x' or 'y'");
        const char v = peek();
        if (v != 'x' && v != 'y') {
            if (std::isalpha(static_cast<unsigned char>(v)))
                fail(std::string("unknown variable '") + v + "' (only x and y are allowed)");
            fail(unexpected());
        }
        advance();
        std::uint32_t k = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
            advance();
            skip_space();
            if (!at_end() && peek() == '-') fail("negative exponent");
            k = exponent();
        }
        std::uint32_t& slot = v == 'x' ? e.i : e.j;
        if (static_cast<std::uint64_t>(slot) + k > kMaxExponent) fail("exponent too large");
        slot += k;
    }

    std::uint32_t exponent() {
        const std::size_t start = pos_;
        std::uint64_t k = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            k = k * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (k > kMaxExponent) fail("exponent too large");
            advance();
        }
        if (pos_ == start) fail("expected an unsigned exponent");
        return static_cast<std::uint32_t>(k);
    }

    Rational coefficient() {
        const std::size_t start = pos_;
        std::string digits = take_digits();
        if (!at_end() && peek() == '.') {
            advance();
            std::string frac = take_digits();
            if (digits.empty() && frac.empty()) fail("malformed decimal", start);
            return parse_rational(digits + "." + frac);
        }
        if (digits.empty()) fail("malformed coefficient", start);
        skip_space();
        if (!at_end() && peek() == '/') {
            advance();
            skip_space();
            const std::size_t den_pos = pos_;
            std::string den = take_digits();
            if (den.empty()) fail("expected a denominator");
            if (den.find_first_not_of('0') == std::string::npos)
                fail("zero denominator", den_pos);
            return Rational(BigInt(digits), BigInt(den));
        }
        return Rational(BigInt(digits));
    }

    std::string take_digits() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            s += peek();
            advance();
        }
        return s;
    }

    std::string unexpected() const {
        return std::string("unexpected character '") + peek() + "'";
    }

    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw ParseError(what, at);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace sumprod
