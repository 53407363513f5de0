#include "sumprod/multstruct/bound.hpp"

#include <cmath>

#include "sumprod/error.hpp"

namespace sumprod {

BoundValue amoroso_viada_bound(std::uint64_t n, std::uint64_t r, std::uint64_t max_digits) {
    if (n == 0) throw DomainError("the bound needs n >= 1");
    BoundValue b;
    b.n = n;
    b.r = r;
    b.base = 8 * n;
    const BigInt bn(static_cast<unsigned long>(n));
    const BigInt br(static_cast<unsigned long>(r));
    b.exponent = 4 * bn * bn * bn * bn * (bn + bn * br + 1);
    b.log10 = b.exponent.get_d() * std::log10(static_cast<double>(b.base));
    if (b.exponent.fits_ulong_p() && b.log10 + 1 <= static_cast<double>(max_digits)) {
        BigInt v;
        mpz_ui_pow_ui(v.get_mpz_t(), b.base, b.exponent.get_ui());
        b.value = std::move(v);
    }
    return b;
}

}  // namespace sumprod
