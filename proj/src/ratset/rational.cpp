#include "sumprod/ratset/rational.hpp"

#include <cctype>
#include <ostream>

#include "sumprod/error.hpp"

namespace sumprod {

std::size_t hash_value(const BigInt& z) noexcept {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) * 0x9e3779b97f4a7c15ULL;
    const std::size_t limbs = mpz_size(p);
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))) +
             0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), e);
    // powers of coprime integers stay coprime; the denominator stays positive
    return Rational(std::move(r));
}

Rational Rational::pow_signed(long e) const {
    if (e >= 0) return pow(static_cast<unsigned long>(e));
    return inverse().pow(static_cast<unsigned long>(-e));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

std::size_t Rational::hash() const noexcept {
    const std::size_t h = hash_value(num());
    return h ^ (hash_value(den()) * 0x100000001b3ULL + (h << 7));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view s = text.substr(begin, end - begin);
    if (s.empty()) throw ParseError("empty rational", begin);

    bool negative = false;
    std::size_t offset = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        offset = 1;
    }
    std::string_view body = s.substr(offset);

    BigInt num;
    BigInt den = 1;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto p = body.substr(0, slash);
        const auto q = body.substr(slash + 1);
        if (!all_digits(p)) throw ParseError("malformed numerator", begin + offset);
        if (!all_digits(q)) throw ParseError("malformed denominator", begin + offset + slash + 1);
        num.set_str(std::string(p), 10);
        den.set_str(std::string(q), 10);
        if (den == 0) throw DomainError("rational with zero denominator: " + std::string(s));
    } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw ParseError("malformed decimal", begin + offset);
        num.set_str(std::string(whole) + std::string(frac), 10);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else {
        if (!all_digits(body)) throw ParseError("malformed integer", begin + offset);
        num.set_str(std::string(body), 10);
    }
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace sumprod
