#include "sumprod/lab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace sumprod::lab {

namespace {

Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(q.to_string());
    return out;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string join(const std::vector<Rational>& v) {
    if (v.empty()) return "(none)";
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ' ';
        s += v[k].to_string();
    }
    return s;
}

}  // namespace

std::string decimal(const Rational& q) {
    // round half away from zero at 1e-6, exactly
    const BigInt scale = 1'000'000;
    BigInt scaled = ::abs(q.num()) * scale * 2 + q.den();
    BigInt denom = q.den() * 2;
    BigInt units;
    mpz_fdiv_q(units.get_mpz_t(), scaled.get_mpz_t(), denom.get_mpz_t());
    BigInt whole = units / scale;
    BigInt frac = units % scale;
    std::string f = frac.get_str();
    f.insert(0, 6 - f.size(), '0');
    const bool negative = q.sign() < 0 && units != 0;
    return (negative ? "-" : "") + whole.get_str() + "." + f;
}

Json to_json(const SolutionSplit& s) {
    return Json{{"alpha", s.alpha.to_string()},
                {"multiplicity", s.multiplicity()},
                {"clean", s.clean},
                {"dirty", s.dirty},
                {"dirty_inclusive", s.dirty_inclusive}};
}

Json to_json(const AuditReport& r) {
    Json table = Json::array();
    for (const auto& s : r.table) table.push_back(to_json(s));
    return Json{{"polynomial", r.polynomial},
                {"degree", r.degree},
                {"support_size", r.support_size},
                {"set_size", r.set_size},
                {"K", r.doubling.to_string()},
                {"dirty_bound", r.dirty_bound},
                {"general_dirty_bound_log10", fixed6(r.general_dirty_bound_log10)},
                {"bad_alphas", rationals(r.bad_alphas)},
                {"bad_alphas_inclusive", rationals(r.bad_alphas_inclusive)},
                {"conventions_agree", r.conventions_agree()},
                {"allowed_bad_alphas", r.degree + 1},
                {"consistent", r.consistent()},
                {"tau", r.tau},
                {"theoretical_tau_log10", fixed6(r.theoretical_tau_log10)},
                {"upsilon", rationals(r.upsilon)},
                {"max_multiplicity", r.max_multiplicity},
                {"table", std::move(table)}};
}

Json to_json(const InjectivityReport& r) {
    return Json{{"witness", {to_string(r.witness.first), to_string(r.witness.second)}},
                {"t", r.t},
                {"progression_size", r.progression_size},
                {"pairs", r.pairs},
                {"collisions", r.collisions},
                {"solver_mismatches", r.solver_mismatches},
                {"injective", r.injective()},
                {"solver_consistent", r.solver_consistent()}};
}

Json to_json(const CauchySchwarzReport& r) {
    return Json{{"energy", r.energy.get_str()},
                {"image_size", r.image_size},
                {"set_size", r.set_size},
                {"bound", r.bound.to_string()},
                {"holds", r.holds}};
}

Json to_json(const ExpansionReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"N", row.n},
                            {"setsize", row.set_size},
                            {"productset", row.productset_size},
                            {"K", row.doubling.to_string()},
                            {"image", row.image_size},
                            {"ratio", row.ratio.to_string()}});
    Json out{{"family", r.family}, {"polynomial", r.polynomial}, {"exceptional", r.exceptional},
             {"rows", std::move(rows)}};
    out["growth_exponent"] = r.growth_exponent ? Json(fixed6(*r.growth_exponent)) : Json(nullptr);
    return out;
}

void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << line << '\n';
    }
}

void write_text(std::ostream& os, const AuditReport& r) {
    os << "polynomial        " << r.polynomial << '\n'
       << "degree            " << r.degree << '\n'
       << "support size      " << r.support_size << '\n'
       << "set size          " << r.set_size << '\n'
       << "K                 " << r.doubling << '\n'
       << "dirty bound       " << r.dirty_bound << "  (d^2 * 2^|S|)\n"
       << "bad alphas        " << join(r.bad_alphas) << '\n'
       << "allowed           " << r.degree + 1 << '\n'
       << "consistent        " << (r.consistent() ? "yes" : "NO") << '\n';
    if (!r.conventions_agree())
        os << "bad (inclusive)   " << join(r.bad_alphas_inclusive) << '\n';
    os << "tau               " << r.tau << "  (theoretical log10 " << fixed6(r.theoretical_tau_log10)
       << ")\n"
       << "upsilon           " << join(r.upsilon) << '\n'
       << "max multiplicity  " << r.max_multiplicity << '\n';
}

void write_text(std::ostream& os, const InjectivityReport& r) {
    os << "witnesses         " << to_string(r.witness.first) << ' ' << to_string(r.witness.second)
       << '\n'
       << "t                 " << r.t << '\n'
       << "|G|               " << r.progression_size << '\n'
       << "pairs             " << r.pairs << '\n'
       << "collisions        " << r.collisions << '\n'
       << "solver mismatches " << r.solver_mismatches << '\n'
       << "injective         " << (r.injective() ? "yes" : "NO") << '\n';
}

void write_text(std::ostream& os, const ExpansionReport& r) {
    os << "family      " << r.family << '\n'
       << "polynomial  " << r.polynomial << (r.exceptional ? "  (exceptional)" : "") << '\n';
    std::vector<std::vector<std::string>> rows{{"N", "|A|", "|AA|", "K", "|f(A,A)|", "ratio"}};
    for (const auto& row : r.rows)
        rows.push_back({std::to_string(row.n), std::to_string(row.set_size),
                        std::to_string(row.productset_size), decimal(row.doubling),
                        std::to_string(row.image_size), decimal(row.ratio)});
    write_table(os, rows);
    os << "growth exponent  " << (r.growth_exponent ? fixed6(*r.growth_exponent) : "n/a") << '\n';
}

void write_csv(std::ostream& os, const ExpansionReport& r) {
    os << "N,setsize,productset,K,image,ratio\n";
    for (const auto& row : r.rows)
        os << row.n << ',' << row.set_size << ',' << row.productset_size << ','
           << decimal(row.doubling) << ',' << row.image_size << ',' << decimal(row.ratio) << '\n';
}

}  // namespace sumprod::lab
