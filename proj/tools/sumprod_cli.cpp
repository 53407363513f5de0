// sumprod: command-line front end for the expansion lab.
//
// Exit codes: 0 success, 1 internal error, 2 usage / parse / missing input,
// 3 pair or enumeration cap exceeded, 4 an audit contradicted a lemma.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumprod/error.hpp"
#include "sumprod/lab/audit.hpp"
#include "sumprod/lab/random.hpp"
#include "sumprod/lab/report.hpp"
#include "sumprod/lab/sweep.hpp"
#include "sumprod/multstruct/bound.hpp"
#include "sumprod/multstruct/ggp.hpp"
#include "sumprod/multstruct/structure.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/polyalg/monomial_form.hpp"
#include "sumprod/ratset/image.hpp"
#include "sumprod/ratset/set_ops.hpp"

namespace {

using namespace sumprod;
using lab::Json;

enum Exit : int { kOk = 0, kInternal = 1, kUsage = 2, kCap = 3, kInconsistent = 4 };

struct UsageError : Error {
    using Error::Error;
};

struct RunConfig {
    std::string command;
    std::string set_path;
    std::string set2_path;
    std::string poly;
    std::string format = "text";
    std::uint64_t max_pairs = 100'000'000;
    unsigned threads = default_thread_count();
    std::uint64_t seed = 1;
    std::size_t random_set = 0;
    std::string family;
    std::vector<std::uint64_t> ns;
    bool allow_exceptional = false;
    std::string ggp;
    std::uint64_t t = 0;
    std::optional<std::uint64_t> tau;
    bool table = false;
    std::uint64_t n = 1;
    std::uint64_t r = 0;

    PairOptions pairs() const { return {max_pairs, threads}; }
};

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--set", cfg.set_path, "set file: one rational per line");
    sub->add_option("--poly", cfg.poly, "polynomial in x and y, e.g. \"x*y + x^2*y^2\"");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--max-pairs", cfg.max_pairs, "cap on |A|*|B| pair enumeration");
    sub->add_option("--threads", cfg.threads, "worker threads (never changes output)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for generated inputs");
}

void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

void validate(const RunConfig& cfg) {
    const std::string& c = cfg.command;
    if (cfg.format == "csv") require(c == "sweep", "--format csv is only available for sweep");
    if (c == "classify" || c == "image" || c == "energy" || c == "audit" || c == "sweep")
        require(!cfg.poly.empty(), c + " needs --poly");
    if (c == "image" || c == "energy")
        require(!cfg.set_path.empty(), c + " needs --set");
    if (c == "audit")
        require(!cfg.set_path.empty() || cfg.random_set > 0, "audit needs --set or --random-set");
    if (c == "structure")
        require(!cfg.set_path.empty() || !cfg.ggp.empty(), "structure needs --set or --ggp");
    if (c == "sweep") {
        require(!cfg.family.empty(), "sweep needs --family");
        require(cfg.family.rfind("files:", 0) == 0 || cfg.family.rfind("file:", 0) == 0 ||
                    !cfg.ns.empty(),
                "sweep needs --N");
    }
    if (c == "bound") require(cfg.n >= 1, "bound needs --n >= 1");
}

FiniteSet load_set(const std::string& path) {
    if (!std::filesystem::exists(path)) throw UsageError("set file not found: " + path);
    return read_set_file(path);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json witness_json(const NonParallelWitness& w) {
    return Json::array({Json::array({w.first.i, w.first.j}), Json::array({w.second.i, w.second.j})});
}

int cmd_classify(const RunConfig& cfg) {
    const BivariatePoly f = parse_poly(cfg.poly);
    if (f.is_zero()) throw UsageError("the zero polynomial has no classification");
    const auto dec = classify_monomial_composition(f);
    if (cfg.format == "json") {
        Json j{{"polynomial", f.to_string()}};
        if (dec) {
            Json g = Json::array();
            for (const auto& c : dec->g.coefficients()) g.push_back(c.to_string());
            j["class"] = "EXCEPTIONAL";
            j["g"] = dec->g.to_string();
            j["g_coefficients"] = std::move(g);
            j["M"] = Json::array({dec->monomial.i, dec->monomial.j});
            j["trivial"] = dec->trivial;
        } else {
            j["class"] = "NON-EXCEPTIONAL";
            j["witnesses"] = witness_json(*non_parallel_witness(f));
        }
        emit(j);
        return kOk;
    }
    if (dec) {
        std::cout << "EXCEPTIONAL\n"
                  << "f        " << f.to_string() << '\n'
                  << "g(t)     " << dec->g.to_string() << '\n'
                  << "M        " << monomial_to_string(dec->monomial) << '\n'
                  << "trivial  " << (dec->trivial ? "yes (constant or single monomial)" : "no")
                  << '\n';
    } else {
        const auto w = *non_parallel_witness(f);
        std::cout << "NON-EXCEPTIONAL\n"
                  << "f          " << f.to_string() << '\n'
                  << "witnesses  " << to_string(w.first) << ' ' << to_string(w.second) << '\n';
    }
    return kOk;
}

int cmd_image(const RunConfig& cfg) {
    const BivariatePoly f = parse_poly(cfg.poly);
    const FiniteSet a = load_set(cfg.set_path);
    const FiniteSet b = cfg.set2_path.empty() ? a : load_set(cfg.set2_path);
    const FiniteSet img = image(f, a, b, cfg.pairs());
    if (cfg.format == "json") {
        Json values = Json::array();
        for (const auto& q : img) values.push_back(q.to_string());
        emit(Json{{"polynomial", f.to_string()},
                       {"A_size", a.size()},
                       {"B_size", b.size()},
                       {"image_size", img.size()},
                       {"image", std::move(values)}});
        return kOk;
    }
    std::cout << "|f(A,B)|=" << img.size() << '\n';
    write_set(std::cout, img);
    return kOk;
}

int cmd_energy(const RunConfig& cfg) {
    const BivariatePoly f = parse_poly(cfg.poly);
    const FiniteSet a = load_set(cfg.set_path);
    const auto cs = lab::cauchy_schwarz_check(f, a, cfg.pairs());
    if (cfg.format == "json") {
        Json j = lab::to_json(cs);
        j["polynomial"] = f.to_string();
        emit(j);
        return kOk;
    }
    std::cout << "E=" << cs.energy.get_str() << '\n'
              << "|f(A,A)|=" << cs.image_size << '\n'
              << "|A|=" << cs.set_size << '\n'
              << "|A|^4/|f(A,A)|=" << cs.bound << '\n'
              << "cauchy_schwarz=" << (cs.holds ? "holds" : "VIOLATED") << '\n';
    return kOk;
}

int cmd_structure(const RunConfig& cfg) {
    Json j = Json::object();
    std::vector<std::vector<std::string>> lines;
    if (!cfg.set_path.empty()) {
        const FiniteSet a = load_set(cfg.set_path);
        const std::size_t aa = productset(a, a).size();
        const Rational k = doubling_K(a);
        j["set_size"] = a.size();
        j["productset_size"] = aa;
        j["K"] = k.to_string();
        lines.push_back({"|A|", std::to_string(a.size())});
        lines.push_back({"|AA|", std::to_string(aa)});
        lines.push_back({"K", k.to_string()});
        if (a.contains_zero()) {
            j["rank"] = nullptr;
            lines.push_back({"rank", "n/a (set contains 0)"});
        } else {
            const std::size_t rank = multiplicative_rank(a);
            j["rank"] = rank;
            j["has_negative"] = !a.all_positive();
            lines.push_back({"rank", std::to_string(rank)});
            if (!a.all_positive()) lines.push_back({"sign", "negative elements (torsion not counted)"});
        }
    }
    if (!cfg.ggp.empty()) {
        const GGP g = parse_ggp(cfg.ggp);
        const std::uint64_t t = cfg.t == 0 ? 1 : cfg.t;
        const EnumerationOptions opts{cfg.max_pairs};
        const std::size_t size = ggp_power(g, t, opts).size();
        const bool distinct = distinctness_check(g, t, opts);
        j["ggp"] = g.to_string();
        j["t"] = t;
        j["box_size"] = g.box_size(t);
        j["power_size"] = size;
        j["distinct"] = distinct;
        lines.push_back({"G", g.to_string()});
        lines.push_back({"t", std::to_string(t)});
        lines.push_back({"box", std::to_string(g.box_size(t))});
        lines.push_back({"|G^(t)|", std::to_string(size)});
        lines.push_back({"distinct", distinct ? "yes" : "no"});
    }
    if (cfg.format == "json")
        emit(j);
    else
        lab::write_table(std::cout, lines);
    return kOk;
}

int cmd_audit(const RunConfig& cfg) {
    const BivariatePoly f = parse_poly(cfg.poly);
    FiniteSet a = FiniteSet::from_values({Rational(1)});
    if (!cfg.set_path.empty()) {
        a = load_set(cfg.set_path);
    } else {
        lab::Rng rng(cfg.seed);
        a = lab::random_nonzero_set(rng, cfg.random_set);
    }
    lab::AuditOptions opts;
    opts.pairs = cfg.pairs();
    opts.tau = cfg.tau;
    opts.allow_exceptional = cfg.allow_exceptional;
    const lab::AuditReport rep = lab::lemma2_audit(f, a, opts);

    std::optional<lab::InjectivityReport> inj;
    if (!cfg.ggp.empty()) {
        const GGP g = parse_ggp(cfg.ggp);
        const std::uint64_t t = cfg.t == 0 ? f.degree() : cfg.t;
        inj = lab::injectivity_audit(f, g, t, EnumerationOptions{cfg.max_pairs});
    }
    const bool failed = !rep.consistent() || (inj && !inj->passed());

    if (cfg.format == "json") {
        Json j{{"lemma2", lab::to_json(rep)}};
        if (!cfg.table && !failed) j["lemma2"].erase("table");
        if (inj) j["injectivity"] = lab::to_json(*inj);
        emit(j);
    } else {
        lab::write_text(std::cout, rep);
        if (inj) {
            std::cout << '\n';
            lab::write_text(std::cout, *inj);
        }
        if (cfg.table || failed) {
            std::cout << '\n';
            std::vector<std::vector<std::string>> rows{{"alpha", "m", "clean", "dirty", "dirty_incl"}};
            for (const auto& s : rep.table)
                rows.push_back({s.alpha.to_string(), std::to_string(s.multiplicity()),
                                std::to_string(s.clean), std::to_string(s.dirty),
                                std::to_string(s.dirty_inclusive)});
            lab::write_table(std::cout, rows);
        }
    }
    return failed ? kInconsistent : kOk;
}

int cmd_sweep(const RunConfig& cfg) {
    const BivariatePoly f = parse_poly(cfg.poly);
    const lab::FamilySpec family = lab::parse_family(cfg.family);
    if (family.kind == lab::FamilySpec::Kind::files)
        for (const auto& p : family.files)
            if (!std::filesystem::exists(p)) throw UsageError("set file not found: " + p.string());
    lab::SweepOptions opts;
    opts.pairs = cfg.pairs();
    opts.enumeration.max_points = cfg.max_pairs;
    opts.allow_exceptional = cfg.allow_exceptional;
    const auto rep = lab::expansion_sweep(f, family, cfg.ns, opts);
    if (cfg.format == "json")
        emit(lab::to_json(rep));
    else if (cfg.format == "csv")
        lab::write_csv(std::cout, rep);
    else
        lab::write_text(std::cout, rep);
    return kOk;
}

int cmd_bound(const RunConfig& cfg) {
    const BoundValue b = amoroso_viada_bound(cfg.n, cfg.r);
    char log_buf[64];
    std::snprintf(log_buf, sizeof log_buf, "%.6f", b.log10);
    if (cfg.format == "json") {
        emit(Json{{"n", b.n},
                       {"r", b.r},
                       {"base", b.base},
                       {"exponent", b.exponent.get_str()},
                       {"value", b.value ? Json(b.value->get_str()) : Json(nullptr)},
                       {"log10", log_buf}});
        return kOk;
    }
    std::cout << (b.value ? b.value->get_str() : std::string("(too large to print)")) << '\n'
              << "C(" << b.n << "," << b.r << ") = " << b.base << "^" << b.exponent.get_str() << '\n'
              << "log10 = " << log_buf << '\n';
    return kOk;
}

int dispatch(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "image") return cmd_image(cfg);
    if (cfg.command == "energy") return cmd_energy(cfg);
    if (cfg.command == "structure") return cmd_structure(cfg);
    if (cfg.command == "audit") return cmd_audit(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "bound") return cmd_bound(cfg);
    throw UsageError("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact experiments on expanding polynomials over sets with few products"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "decide whether f = g(M(x,y))");
    auto* image_cmd = app.add_subcommand("image", "the image set f(A,B)");
    auto* energy_cmd = app.add_subcommand("energy", "polynomial energy E_f(A)");
    auto* structure = app.add_subcommand("structure", "multiplicative rank, K and GGP distinctness");
    auto* audit = app.add_subcommand("audit", "brute-force lemma audits");
    auto* sweep = app.add_subcommand("sweep", "growth of |f(A,A)| over a set family");
    auto* bound = app.add_subcommand("bound", "the unit-equation constant C(n,r)");
    for (auto* sub : {classify, image_cmd, energy_cmd, structure, audit, sweep, bound})
        add_common(sub, cfg);

    image_cmd->add_option("--set2", cfg.set2_path, "second set B (defaults to A)");
    structure->add_option("--ggp", cfg.ggp, "progression, e.g. \"2^[3] * 3^[3]\"");
    structure->add_option("--t", cfg.t, "dilation t for G^(t)");
    audit->add_option("--ggp", cfg.ggp, "progression for the injectivity audit");
    audit->add_option("--t", cfg.t, "dilation t (defaults to deg f)");
    audit->add_option("--tau", cfg.tau, "threshold for the exceptional set");
    audit->add_option("--random-set", cfg.random_set, "audit a random set of this size (uses --seed)");
    audit->add_flag("--allow-exceptional", cfg.allow_exceptional, "audit f = g(M) anyway");
    audit->add_flag("--table", cfg.table, "always print the full split table");
    sweep->add_option("--family", cfg.family, "geometric:q | ggp:\"spec\" | files:a.txt,b.txt");
    sweep->add_option("--N", cfg.ns, "sample sizes, comma separated")->delimiter(',');
    sweep->add_flag("--allow-exceptional", cfg.allow_exceptional, "sweep f = g(M) anyway");
    bound->add_option("--n", cfg.n, "number of unknowns n >= 1");
    bound->add_option("--r", cfg.r, "group rank r >= 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    try {
        return dispatch(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
