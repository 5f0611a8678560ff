// Command-line front end: quotients, tangent/obstruction reports, closed-form
// family numbers, and reproduction of the named example catalog.

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ec/json_io.hpp"
#include "ec/oracle.hpp"
#include "ec/parallel.hpp"
#include "ec/scenarios.hpp"

namespace {

using ec::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

enum class OutputMode { Json, Csv, Pretty };

struct CommonOpts {
    std::string field = "p:2147483647";
    bool as_csv = false;
    bool as_pretty = false;
    std::uint64_t seed = 0;
    int random_socle = 0;
    std::string engine = "structured";
    std::optional<int> t2_cutoff;
    bool with_oracle = false;
};

struct SpecOpts {
    int n1 = -1, n2 = -1, n3 = -1;
    std::string socle;
    std::string raw;
};

ec::FieldSpec parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return ec::FieldSpec::rationals();
    if (text.rfind("p:", 0) == 0) return ec::FieldSpec::prime(std::stoull(text.substr(2)));
    throw CLI::ValidationError("--field", "expected q or p:<prime>");
}

ec::IdealSpec spec_from_opts(const SpecOpts& s) {
    const bool has_family = s.n1 >= 0 || s.n2 >= 0;
    const bool has_raw = !s.raw.empty();
    if (has_family == has_raw)
        throw CLI::ValidationError("spec", "provide exactly one of --n1/--n2 or --raw");
    ec::IdealSpec spec;
    if (has_raw) {
        if (s.n3 >= 0) throw CLI::ValidationError("--n3", "requires a family spec");
        std::vector<std::string> gens;
        std::size_t start = 0;
        while (start <= s.raw.size()) {
            std::size_t end = s.raw.find(';', start);
            std::string piece =
                s.raw.substr(start, end == std::string::npos ? std::string::npos : end - start);
            if (piece.find_first_not_of(" \t") != std::string::npos) gens.push_back(piece);
            if (end == std::string::npos) break;
            start = end + 1;
        }
        spec = ec::IdealSpec::raw_ideal(gens);
    } else {
        if (s.n1 < 2 || s.n2 < 2)
            throw CLI::ValidationError("--n1/--n2", "family spec needs n1, n2 >= 2");
        spec = s.n3 >= 0 ? ec::IdealSpec::family_variant(s.n1, s.n2, s.n3)
                         : ec::IdealSpec::family(s.n1, s.n2);
    }
    if (!s.socle.empty()) {
        std::vector<std::string> extras;
        std::size_t start = 0;
        while (start <= s.socle.size()) {
            std::size_t end = s.socle.find(';', start);
            std::string piece = s.socle.substr(
                start, end == std::string::npos ? std::string::npos : end - start);
            if (piece.find_first_not_of(" \t") != std::string::npos) extras.push_back(piece);
            if (end == std::string::npos) break;
            start = end + 1;
        }
        spec = spec.with_extras(extras);
    }
    return spec;
}

void emit(const json& j, const CommonOpts& opts) {
    if (opts.as_pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// Draws `count` random socle elements (uniform coefficients over the socle
// basis) and returns the extended quotient plus the drawn polynomials.
template <class F>
ec::ArtinQuotient<F> with_random_socle(const ec::ArtinQuotient<F>& Q, int count,
                                       std::uint64_t seed, const F& K,
                                       std::vector<std::string>& echoed) {
    std::vector<ec::Vec<F>> soc = Q.socle();
    if (soc.empty()) throw std::runtime_error("random socle draw: socle is zero");
    std::mt19937_64 rng(seed);
    std::vector<ec::Polynomial<F>> drawn;
    for (int i = 0; i < count; ++i) {
        ec::Vec<F> combo(Q.dim(), K.zero());
        for (const auto& s : soc) {
            typename F::Elem c;
            if constexpr (std::is_same_v<F, ec::PrimeField>) {
                std::uniform_int_distribution<std::uint64_t> dist(0, K.modulus() - 1);
                c = dist(rng);
            } else {
                std::uniform_int_distribution<long> dist(-50, 50);
                c = K.from_int(dist(rng));
            }
            for (int t = 0; t < Q.dim(); ++t) combo[t] = K.addmul(combo[t], s[t], c);
        }
        drawn.push_back(Q.vector_to_poly(combo));
        echoed.push_back(drawn.back().str());
    }
    return Q.extended(drawn);
}

template <class F>
int run_quotient(const ec::IdealSpec& spec, const F& K, const CommonOpts& opts) {
    ec::ArtinQuotient<F> Q = ec::ArtinQuotient<F>::build(spec, K);
    std::vector<std::string> drawn;
    if (opts.random_socle > 0)
        Q = with_random_socle(Q, opts.random_socle, opts.seed, K, drawn);
    json out;
    out["spec"] = ec::spec_to_json(spec);
    out["dim"] = Q.dim();
    if (Q.graded()) {
        json g = json::object();
        for (int d = 0; d <= Q.top_degree(); ++d) {
            auto [lo, hi] = Q.graded_slice(d);
            g[std::to_string(d)] = hi - lo;
        }
        out["graded"] = g;
    }
    if (Q.bigraded()) {
        json b = json::object();
        for (int d1 = 0; d1 <= Q.top_degree(); ++d1)
            for (int d2 = 0; d2 + d1 <= Q.top_degree(); ++d2) {
                auto slice = Q.bigraded_slice(d1, d2);
                if (!slice.empty())
                    b[std::to_string(d1) + "," + std::to_string(d2)] = slice.size();
            }
        out["bigraded"] = b;
    }
    out["socle_dim"] = Q.socle().size();
    if (spec.family_rooted() && Q.bigraded())
        out["socle_condition"] = Q.socle_condition();
    else
        out["socle_condition"] = nullptr;
    if (Q.extension_was_noop())
        out["warning"] = "an extra generator was already in the ideal";
    if (!drawn.empty()) out["drawn_socle"] = drawn;
    emit(out, opts);
    return kExitOk;
}

template <class F>
int run_tangent(const ec::IdealSpec& spec, const F& K, const CommonOpts& opts,
                bool negative_only) {
    ec::ArtinQuotient<F> Q = ec::ArtinQuotient<F>::build(spec, K);
    std::vector<std::string> drawn;
    if (opts.random_socle > 0)
        Q = with_random_socle(Q, opts.random_socle, opts.seed, K, drawn);

    ec::TangentEngine engine = opts.engine == "generic" ? ec::TangentEngine::Generic
                                                        : ec::TangentEngine::Structured;
    json out;
    out["spec"] = ec::spec_to_json(spec);
    if (!drawn.empty()) out["drawn_socle"] = drawn;

    if (negative_only) {
        ec::TangentSolver<F> solver(Q);
        ec::TangentEngine used = engine;
        if (used == ec::TangentEngine::Structured && !solver.structured_available())
            used = ec::TangentEngine::Generic;
        json per = json::object();
        bool neg_zero = true;
        for (int j = solver.j_min(); j <= -1; ++j) {
            int dim = solver.hom_dim(j, used);
            per[std::to_string(j)] = dim;
            if (j <= -2 && dim != 0) neg_zero = false;
        }
        int trivial = solver.trivial_rank();
        out["per_degree_negative"] = per;
        out["trivial_rank_at_minus1"] = trivial;
        out["tnt"] = neg_zero && per[std::to_string(-1)].get<int>() == trivial;
        out["engine"] = engine_name(used);
        emit(out, opts);
        return kExitOk;
    }

    ec::TangentReport rep = ec::tangent_report(Q, engine);
    bool agree = true;
    if (opts.engine == "both") {
        ec::TangentReport gen = ec::tangent_report(Q, ec::TangentEngine::Generic);
        agree = gen.per_degree == rep.per_degree;
        out["engines_agree"] = agree;
    }
    json rj = ec::tangent_report_to_json(rep);
    for (auto& [k, v] : rj.items()) out[k] = v;
    if (opts.with_oracle) {
        try {
            ec::oracle::HomOracle<F> horacle(Q.generators(), K);
            long ototal = 0;
            for (const auto& [j, dim] : horacle.hom_all()) ototal += dim;
            out["oracle_total"] = ototal;
            out["oracle_agrees"] = ototal == rep.total;
            agree = agree && ototal == rep.total;
        } catch (const std::runtime_error& e) {
            std::cerr << "oracle guard: " << e.what() << "\n";
            return kExitGuard;
        }
    }
    if (opts.as_csv) {
        std::cout << "j,dim\n";
        for (const auto& [j, dim] : rep.per_degree) std::cout << j << "," << dim << "\n";
    } else {
        emit(out, opts);
    }
    return agree ? kExitOk : kExitMismatch;
}

template <class F>
int run_t2(const ec::IdealSpec& spec, const F& K, const CommonOpts& opts) {
    ec::ArtinQuotient<F> Q = ec::ArtinQuotient<F>::build(spec, K);
    const bool variant442 = spec.kind == ec::IdealSpec::Kind::FamilyVariant && spec.n1 == 4 &&
                            spec.n2 == 4 && spec.n3 == 2;
    bool oversized = false;
    if (spec.family_rooted())
        oversized = spec.n1 + spec.n2 > 9 && !variant442;
    else
        oversized = Q.dim() > 200;
    if (oversized && !opts.t2_cutoff.has_value()) {
        std::cerr << "t2: request exceeds the default scope; pass --t2-cutoff to run anyway\n";
        return kExitGuard;
    }
    ec::ObstructionReport rep = ec::t2_nonneg(Q, opts.t2_cutoff);
    if (opts.as_csv) {
        std::cout << "j,dim\n";
        for (const auto& [j, dim] : rep.per_degree) std::cout << j << "," << dim << "\n";
        return kExitOk;
    }
    json out;
    out["spec"] = ec::spec_to_json(spec);
    json rj = ec::obstruction_report_to_json(rep);
    for (auto& [k, v] : rj.items()) out[k] = v;
    emit(out, opts);
    return kExitOk;
}

int run_formula(int n1, int n2, const CommonOpts& opts) {
    ec::FamilyStats s = ec::family_stats(n1, n2);
    if (opts.as_csv) {
        std::cout << "n1,n2,d,D,lt_4d,lt_3dm1\n"
                  << s.n1 << "," << s.n2 << "," << s.d << "," << s.D_closed << ","
                  << (s.lt_4d ? 1 : 0) << "," << (s.lt_3dm1 ? 1 : 0) << "\n";
    } else {
        emit(ec::stats_to_json(s), opts);
    }
    return kExitOk;
}

int run_reproduce(const std::vector<std::string>& names, bool all, const CommonOpts& opts) {
    std::vector<ec::Scenario> selected;
    if (all) {
        selected = ec::example_catalog();
    } else {
        if (names.empty()) throw CLI::ValidationError("reproduce", "give scenario names or --all");
        for (const auto& want : names) {
            bool found = false;
            for (const auto& sc : ec::example_catalog()) {
                if (sc.name == want || sc.name.rfind(want + "-", 0) == 0) {
                    selected.push_back(sc);
                    found = true;
                }
            }
            if (!found) {
                std::cerr << "unknown scenario: " << want << "\n";
                return kExitUsage;
            }
        }
    }
    std::sort(selected.begin(), selected.end(),
              [](const ec::Scenario& a, const ec::Scenario& b) { return a.name < b.name; });
    selected.erase(std::unique(selected.begin(), selected.end(),
                               [](const ec::Scenario& a, const ec::Scenario& b) {
                                   return a.name == b.name;
                               }),
                   selected.end());

    ec::FieldSpec field = parse_field(opts.field);
    std::vector<ec::ScenarioResult> results(selected.size());
    ec::parallel_for(selected.size(), [&](std::size_t i) {
        results[i] = ec::run_scenario(selected[i], field, 1);
    });

    bool all_pass = true;
    if (opts.as_csv)
        std::cout << "scenario,pass,colength,tangent_total,tnt,t2_zero,socle_dim,seconds\n";
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (opts.as_csv) {
            auto cell = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
            std::cout << r.name << "," << (r.pass ? "pass" : "FAIL") << "," << cell(r.colength)
                      << "," << cell(r.tangent_total) << "," << cell(r.tnt) << ","
                      << cell(r.t2_zero) << "," << cell(r.socle_dim) << "," << r.seconds
                      << "\n";
            continue;
        }
        json out;
        out["scenario"] = r.name;
        out["pass"] = r.pass;
        out["expected"] = ec::expectation_to_json(r.expected);
        json computed;
        computed["colength"] = r.colength ? json(*r.colength) : json(nullptr);
        computed["tangent_total"] = r.tangent_total ? json(*r.tangent_total) : json(nullptr);
        computed["tnt"] = r.tnt ? json(*r.tnt) : json(nullptr);
        computed["t2_zero"] = r.t2_zero ? json(*r.t2_zero) : json(nullptr);
        computed["socle_dim"] = r.socle_dim ? json(*r.socle_dim) : json(nullptr);
        out["computed"] = computed;
        if (!r.mismatches.empty()) out["mismatches"] = r.mismatches;
        out["seconds"] = r.seconds;
        emit(out, opts);
    }
    return all_pass ? kExitOk : kExitMismatch;
}

template <class F>
int run_table1(const std::vector<std::array<int, 3>>& rows, const F& K,
               const CommonOpts& opts) {
    bool csv = opts.as_csv;
    if (csv) std::cout << "n1,n2,n3,d_B,hom_total,tnt,lt_4dB,lt_3dBm1\n";
    json arr = json::array();
    bool ok = true;
    for (const auto& row : rows) {
        ec::IdealSpec spec = ec::IdealSpec::family_variant(row[0], row[1], row[2]);
        ec::ArtinQuotient<F> Q = ec::ArtinQuotient<F>::build(spec, K);
        ec::TangentReport rep = ec::tangent_report(Q);
        long dB = Q.dim();
        bool lt4 = rep.total < 4 * dB;
        bool lt3 = rep.total < 3 * (dB - 1);
        ok = ok && rep.tnt;
        if (csv) {
            std::cout << row[0] << "," << row[1] << "," << row[2] << "," << dB << ","
                      << rep.total << "," << (rep.tnt ? 1 : 0) << "," << (lt4 ? 1 : 0) << ","
                      << (lt3 ? 1 : 0) << "\n";
        } else {
            json item;
            item["n1"] = row[0];
            item["n2"] = row[1];
            item["n3"] = row[2];
            item["d_B"] = dB;
            item["hom_total"] = rep.total;
            item["tnt"] = rep.tnt;
            item["lt_4dB"] = lt4;
            item["lt_3dBm1"] = lt3;
            arr.push_back(item);
        }
    }
    if (!csv) emit(arr, opts);
    return ok ? kExitOk : kExitMismatch;
}

template <class Fn>
int with_field(const CommonOpts& opts, Fn&& fn) {
    ec::FieldSpec field = parse_field(opts.field);
    if (field.mode == ec::FieldSpec::Mode::Rationals) return fn(ec::RationalField{});
    return fn(ec::PrimeField(field.p));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around small elementary components of Hilbert schemes"};
    app.require_subcommand(1);

    CommonOpts opts;
    SpecOpts sopts;
    int f_n1 = -1, f_n2 = -1;
    std::vector<std::string> names;
    bool all = false;
    std::string rows_text;

    auto add_common = [&](CLI::App* cmd, bool with_spec) {
        cmd->add_option("--field", opts.field, "coefficient field: q or p:<prime>");
        cmd->add_flag("--csv", opts.as_csv, "CSV output");
        cmd->add_flag("--pretty", opts.as_pretty, "indented JSON output");
        cmd->add_flag(
            "--json", [](std::int64_t) {}, "JSON output (default)");
        if (with_spec) {
            cmd->add_option("--n1", sopts.n1, "family parameter n1");
            cmd->add_option("--n2", sopts.n2, "family parameter n2");
            cmd->add_option("--n3", sopts.n3, "variant parameter: adds (xz)^n3");
            cmd->add_option("--socle", sopts.socle, "extra generators 'p1;p2;...'");
            cmd->add_option("--raw", sopts.raw, "raw generator list 'p1;p2;...'");
            cmd->add_option("--random-socle", opts.random_socle,
                            "extend by N random socle elements");
            cmd->add_option("--seed", opts.seed, "seed for the random socle draw");
        }
    };

    CLI::App* c_quot = app.add_subcommand("quotient", "build S/J and report its structure");
    add_common(c_quot, true);
    CLI::App* c_tan = app.add_subcommand("tangent", "graded dimensions of Hom(J, S/J)");
    add_common(c_tan, true);
    c_tan->add_option("--engine", opts.engine, "structured|generic|both")
        ->check(CLI::IsMember({"structured", "generic", "both"}));
    c_tan->add_flag("--oracle", opts.with_oracle, "cross-check with the brute-force oracle");
    CLI::App* c_tnt = app.add_subcommand("tnt", "trivial negative tangents verdict");
    add_common(c_tnt, true);
    c_tnt->add_option("--engine", opts.engine, "structured|generic")
        ->check(CLI::IsMember({"structured", "generic"}));
    CLI::App* c_t2 = app.add_subcommand("t2", "nonnegative obstruction space T^2");
    add_common(c_t2, true);
    int cutoff_opt = -1;
    c_t2->add_option("--t2-cutoff", cutoff_opt, "syzygy slice degree cutoff");
    CLI::App* c_form = app.add_subcommand("formula", "closed-form family numbers");
    c_form->add_option("--n1", f_n1, "n1")->required();
    c_form->add_option("--n2", f_n2, "n2")->required();
    add_common(c_form, false);
    CLI::App* c_rep = app.add_subcommand("reproduce", "run named catalog scenarios");
    c_rep->add_option("names", names, "scenario names (prefixes allowed)");
    c_rep->add_flag("--all", all, "run the whole catalog");
    add_common(c_rep, false);
    CLI::App* c_tab = app.add_subcommand("table1", "variant triples (n1,n2,n3) sweep");
    c_tab->add_option("--rows", rows_text, "triples 'n1,n2,n3;n1,n2,n3;...'");
    add_common(c_tab, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_quot->parsed())
            return with_field(opts, [&](auto K) {
                return run_quotient(spec_from_opts(sopts), K, opts);
            });
        if (c_tan->parsed())
            return with_field(opts, [&](auto K) {
                return run_tangent(spec_from_opts(sopts), K, opts, false);
            });
        if (c_tnt->parsed())
            return with_field(opts, [&](auto K) {
                return run_tangent(spec_from_opts(sopts), K, opts, true);
            });
        if (c_t2->parsed()) {
            if (cutoff_opt >= 0) opts.t2_cutoff = cutoff_opt;
            return with_field(opts,
                              [&](auto K) { return run_t2(spec_from_opts(sopts), K, opts); });
        }
        if (c_form->parsed()) return run_formula(f_n1, f_n2, opts);
        if (c_rep->parsed()) return run_reproduce(names, all, opts);
        if (c_tab->parsed()) {
            std::vector<std::array<int, 3>> rows;
            if (rows_text.empty()) {
                rows = {{4, 4, 2}, {4, 5, 3}, {5, 5, 3}, {6, 7, 4}, {6, 7, 5}, {7, 8, 6}};
            } else {
                std::size_t start = 0;
                while (start <= rows_text.size()) {
                    std::size_t end = rows_text.find(';', start);
                    std::string piece = rows_text.substr(
                        start, end == std::string::npos ? std::string::npos : end - start);
                    if (!piece.empty()) {
                        std::array<int, 3> row{};
                        if (std::sscanf(piece.c_str(), "%d,%d,%d", &row[0], &row[1], &row[2]) != 3)
                            throw CLI::ValidationError("--rows", "expected 'n1,n2,n3;...'");
                        rows.push_back(row);
                    }
                    if (end == std::string::npos) break;
                    start = end + 1;
                }
            }
            return with_field(opts, [&](auto K) { return run_table1(rows, K, opts); });
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ec::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
