#include "sumprod/multstruct/lattice.hpp"

#include <utility>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

void combine_rows(std::vector<BigInt>& a, std::vector<BigInt>& b, const BigInt& s,
                  const BigInt& t, const BigInt& u, const BigInt& v) {
    // [a; b] <- [s t; u v] [a; b], a unimodular transform when s*v - t*u = ±1
    for (std::size_t k = 0; k < a.size(); ++k) {
        BigInt na = s * a[k] + t * b[k];
        BigInt nb = u * a[k] + v * b[k];
        a[k] = std::move(na);
        b[k] = std::move(nb);
    }
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw DomainError("ragged integer matrix");

    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        for (std::size_t k = pivot_row + 1; k < rows.size(); ++k) {
            if (rows[k][c] == 0) continue;
            BigInt g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[pivot_row][c].get_mpz_t(),
                       rows[k][c].get_mpz_t());
            const BigInt u = -(rows[k][c] / g);
            const BigInt v = rows[pivot_row][c] / g;
            combine_rows(rows[pivot_row], rows[k], s, t, u, v);
        }
        // zero here means the column vanishes from pivot_row down
        if (rows[pivot_row][c] == 0) continue;
        if (rows[pivot_row][c] < 0)
            for (auto& x : rows[pivot_row]) x = -x;
        const BigInt& p = rows[pivot_row][c];
        for (std::size_t k = 0; k < pivot_row; ++k) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), rows[k][c].get_mpz_t(), p.get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) rows[k][j] -= q * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::size_t lattice_rank(const IntMatrix& rows) { return hermite_normal_form(rows).size(); }

}  // namespace sumprod
