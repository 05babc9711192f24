#include "sympv/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sympv/closed_forms.hpp"
#include "sympv/compositions.hpp"
#include "sympv/formulas.hpp"
#include "sympv/geometric.hpp"
#include "sympv/report.hpp"
#include "sympv/series_builders.hpp"
#include "sympv/verify.hpp"

namespace sympv {

namespace {

std::string join_parts(std::span<const int> parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(parts[i]);
    }
    return s;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit(const Report& rep, std::ostream& out) { out << rep.to_json().dump(2) << "\n"; }

Stat parse_stat(const std::string& name) {
    if (auto s = stat_from_name(name)) return *s;
    throw CLI::ValidationError("--stat", "unknown statistic: " + name);
}

struct EnumerateArgs {
    int n = 0;
    int k = -1;  // -1 = all part counts
    std::string format = "json";
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    std::optional<int> k;
    if (a.k >= 0) k = a.k;

    if (a.format == "csv") {
        out << "parts,k,sp,sv,hsp,dsv\n";
        for_each_composition(a.n, k, [&](std::span<const int> parts) {
            const StatRecord r = stat_record(parts);
            out << csv_quote(join_parts(parts)) << ',' << parts.size() << ',' << r.sp << ',' << r.sv
                << ',' << r.hsp << ',' << r.dsv << "\n";
        });
        return 0;
    }

    Report rep;
    rep.command = "enumerate";
    rep.params["n"] = std::to_string(a.n);
    if (k) rep.params["k"] = std::to_string(*k);
    for_each_composition(a.n, k, [&](std::span<const int> parts) {
        const StatRecord r = stat_record(parts);
        nlohmann::ordered_json row;
        row["parts"] = join_parts(parts);
        row["k"] = parts.size();
        row["sp"] = r.sp;
        row["sv"] = r.sv;
        row["hsp"] = r.hsp;
        row["dsv"] = r.dsv;
        rep.rows.push_back(row);
    });
    rep.params["count"] = std::to_string(rep.rows.size());
    emit(rep, out);
    return rep.exit_code();
}

int cmd_table(int max_n, std::ostream& out) {
    Report rep;
    rep.command = "table";
    rep.params["max_n"] = std::to_string(max_n);
    for (int n = 0; n <= max_n; ++n) {
        const AggregateTable table = aggregate(n);
        for (const AggregateRow& row : table.rows) {
            if (row.count == 0) continue;
            nlohmann::ordered_json jr;
            jr["n"] = n;
            jr["k"] = row.k;
            jr["count"] = row.count.str();
            jr["sp"] = row.sp.str();
            jr["sv"] = row.sv.str();
            jr["hsp"] = row.hsp.str();
            jr["dsv"] = row.dsv.str();
            rep.rows.push_back(jr);
        }
        nlohmann::ordered_json jt;
        jt["n"] = n;
        jt["k"] = "total";
        jt["count"] = table.totals.count.str();
        jt["sp"] = table.totals.sp.str();
        jt["sv"] = table.totals.sv.str();
        jt["hsp"] = table.totals.hsp.str();
        jt["dsv"] = table.totals.dsv.str();
        rep.rows.push_back(jt);
    }
    emit(rep, out);
    return rep.exit_code();
}

int cmd_gf(const std::string& which, int max_n, std::ostream& out) {
    Report rep;
    rep.command = "gf";
    rep.params["which"] = which;
    rep.params["max_n"] = std::to_string(max_n);

    const auto emit_total = [&](const TruncSeries& s) {
        for (int n = 0; n <= max_n; ++n) {
            nlohmann::ordered_json row;
            row["n"] = n;
            row["value"] = to_integer(s.coeff(n).constant_value()).str();
            rep.rows.push_back(row);
        }
    };
    const auto emit_grid = [&](const TruncSeries& s) {
        for (int n = 0; n <= max_n; ++n)
            for (int k = 0; k <= n; ++k) {
                nlohmann::ordered_json row;
                row["n"] = n;
                row["k"] = k;
                row["value"] = to_integer(coeff_nk(s, n, k)).str();
                rep.rows.push_back(row);
            }
    };
    const auto emit_full = [&](const TruncSeries& s, const char* count_key, const char* magnitude_key) {
        for (int n = 0; n <= max_n; ++n)
            for (const auto& [e, c] : s.coeff(n).terms()) {
                nlohmann::ordered_json row;
                row["n"] = n;
                row["k"] = e[0];
                row[count_key] = e[1];
                row[magnitude_key] = e[2];
                row["count"] = to_integer(c).str();
                rep.rows.push_back(row);
            }
    };
    const auto emit_moment_grid = [&](const TruncSeries& s) {
        // count-marker moment per (n, k) of the three-variable count series
        for (int n = 0; n <= max_n; ++n)
            for (int k = 0; k <= n; ++k) {
                nlohmann::ordered_json row;
                row["n"] = n;
                row["k"] = k;
                row["value"] = to_integer(s.coeff(n).select(kSlotParts, k).moment(kSlotCount)).str();
                rep.rows.push_back(row);
            }
    };

    if (which == "full-hsp") emit_full(build_hsp_series(max_n), "sp", "hsp");
    else if (which == "full-dsv") emit_full(build_dsv_series(max_n), "sv", "dsv");
    else if (which == "hsp-total") emit_total(rational_gf(GfKind::hsp_total, max_n));
    else if (which == "dsv-total") emit_total(rational_gf(GfKind::dsv_total, max_n));
    else if (which == "hsp-nk") emit_grid(rational_gf(GfKind::hsp_nk, max_n));
    else if (which == "dsv-nk") emit_grid(rational_gf(GfKind::dsv_nk, max_n));
    else if (which == "sp-marginal") emit_moment_grid(build_sp_marginal_series(max_n));
    else if (which == "sv-marginal") emit_moment_grid(build_sv_marginal_series(max_n));
    else throw CLI::ValidationError("--which", "unknown table: " + which);

    emit(rep, out);
    return rep.exit_code();
}

int cmd_closed_form(const std::string& which, int n, int max_n, std::ostream& out) {
    Report rep;
    rep.command = "closed-form";
    rep.params["which"] = which;
    const int lo = max_n >= 0 ? 0 : n;
    const int hi = max_n >= 0 ? max_n : n;
    if (max_n >= 0)
        rep.params["max_n"] = std::to_string(max_n);
    else
        rep.params["n"] = std::to_string(n);

    bool all_integral = true;
    for (int i = lo; i <= hi; ++i) {
        nlohmann::ordered_json row;
        row["n"] = i;
        try {
            const BigInt v = which == "hsp" ? hsp_closed(i) : dsv_closed(i);
            row["value"] = v.str();
            row["integral"] = true;
        } catch (const NonIntegralClosedForm& e) {
            row["value"] = nullptr;
            row["integral"] = false;
            row["error"] = e.what();
            all_integral = false;
        }
        rep.rows.push_back(row);
    }
    rep.check_that("closed-form-integrality", all_integral, which, "integer for every requested n");
    emit(rep, out);
    return rep.exit_code();
}

int cmd_formula(const std::string& which, int n, int k, int max_n, std::ostream& out) {
    Report rep;
    rep.command = "formula";
    rep.params["which"] = which;

    const auto value_at = [&](int nn, int kk) -> BigInt {
        if (which == "hsp") return hsp_nk(nn, kk);
        if (which == "dsv") return dsv_nk(nn, kk);
        return sp_count_nk(nn, kk);
    };

    if (max_n >= 0) {
        rep.params["max_n"] = std::to_string(max_n);
        for (int nn = 0; nn <= max_n; ++nn)
            for (int kk = 0; kk <= nn; ++kk) {
                if (which == "sp-count" && kk < 4) continue;
                nlohmann::ordered_json row;
                row["n"] = nn;
                row["k"] = kk;
                row["value"] = value_at(nn, kk).str();
                rep.rows.push_back(row);
            }
    } else {
        rep.params["n"] = std::to_string(n);
        rep.params["k"] = std::to_string(k);
        nlohmann::ordered_json row;
        row["n"] = n;
        row["k"] = k;
        row["value"] = value_at(n, k).str();
        rep.rows.push_back(row);
    }
    emit(rep, out);
    return rep.exit_code();
}

struct GeomArgs {
    std::string stat;
    std::string p;
    int n = 0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    int cap = 60;
};

int cmd_geom_expect(const GeomArgs& a, bool variance, std::ostream& out) {
    Report rep;
    rep.command = variance ? "geom variance" : "geom expect";
    rep.params["stat"] = a.stat;
    rep.params["p"] = a.p;
    rep.params["n"] = std::to_string(a.n);

    const Stat stat = parse_stat(a.stat);
    const GeomParams params(parse_rational(a.p), a.n);
    nlohmann::ordered_json row;
    row["stat"] = a.stat;
    row["p"] = rational_json(params.p);
    row["n"] = a.n;
    if (variance) {
        const Rational v = variance_formula(stat, params);
        row["value"] = rational_json(v);
        if (v < 0)
            rep.finding("variance-negative", decimal_string(v), ">= 0 required of a true variance",
                        "published expression evaluates negative here");
    } else {
        row["value"] = rational_json(expected_value(stat, params));
    }
    rep.rows.push_back(row);
    emit(rep, out);
    return rep.exit_code();
}

int cmd_geom_simulate(const GeomArgs& a, std::ostream& out) {
    Report rep;
    rep.command = "geom simulate";
    rep.params["stat"] = a.stat;
    rep.params["p"] = a.p;
    rep.params["n"] = std::to_string(a.n);
    rep.params["trials"] = std::to_string(a.trials);
    rep.params["seed"] = std::to_string(a.seed);

    const Stat stat = parse_stat(a.stat);
    const GeomParams params(parse_rational(a.p), a.n);
    const MCSummary mc = monte_carlo(stat, params, a.trials, a.seed);
    nlohmann::ordered_json row;
    row["trials"] = mc.trials;
    row["mean"] = mc.mean;
    row["variance"] = mc.variance;
    row["std_error"] = mc.std_error;
    row["seed"] = mc.seed;
    row["expected"] = rational_json(expected_value(stat, params));
    rep.rows.push_back(row);
    emit(rep, out);
    return rep.exit_code();
}

int cmd_geom_oracle(const GeomArgs& a, std::ostream& out) {
    Report rep;
    rep.command = "geom oracle";
    rep.params["stat"] = a.stat;
    rep.params["p"] = a.p;
    rep.params["n"] = std::to_string(a.n);
    rep.params["cap"] = std::to_string(a.cap);

    const Stat stat = parse_stat(a.stat);
    const GeomParams params(parse_rational(a.p), a.n);
    const OracleMoments om = exact_oracle_moments(stat, params, a.cap);
    nlohmann::ordered_json row;
    row["mean"] = rational_json(om.mean);
    row["second_moment"] = rational_json(om.second_moment);
    row["variance"] = rational_json(om.second_moment - om.mean * om.mean);
    row["tail_bound"] = rational_json(om.tail_bound);
    row["expected"] = rational_json(expected_value(stat, params));
    rep.rows.push_back(row);

    const Rational expect = expected_value(stat, params);
    const Rational diff = expect >= om.mean ? expect - om.mean : om.mean - expect;
    rep.check_that("oracle-within-tail-bound", diff <= om.tail_bound, decimal_string(diff, 3),
                   "<= " + decimal_string(om.tail_bound, 3));
    emit(rep, out);
    return rep.exit_code();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact statistics of symmetric peaks and valleys over integer compositions"};
    app.require_subcommand(1);

    // enumerate
    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "list compositions with their statistics");
    enumerate->add_option("--n", en.n, "target sum")->required()->check(CLI::Range(0, 30));
    enumerate->add_option("--k", en.k, "exact number of parts")->check(CLI::NonNegativeNumber);
    enumerate->add_option("--format", en.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // table
    int table_max_n = 0;
    auto* table = app.add_subcommand("table", "aggregate statistics per n and per (n,k)");
    table->add_option("--max-n", table_max_n, "largest n")->required()->check(CLI::Range(0, 30));

    // gf
    std::string gf_which;
    int gf_max_n = 18;
    auto* gf = app.add_subcommand("gf", "generating-function coefficient tables");
    gf->add_option("--which", gf_which, "table name")
        ->required()
        ->check(CLI::IsMember({"full-hsp", "full-dsv", "hsp-total", "hsp-nk", "dsv-total", "dsv-nk",
                               "sp-marginal", "sv-marginal"}));
    gf->add_option("--max-n", gf_max_n, "truncation degree (default 18)")
        ->check(CLI::NonNegativeNumber);

    // closed-form
    std::string cf_which;
    int cf_n = -1, cf_max_n = -1;
    auto* cf = app.add_subcommand("closed-form", "closed-form sequence values");
    cf->add_option("--which", cf_which, "hsp or dsv")->required()->check(CLI::IsMember({"hsp", "dsv"}));
    auto* cf_n_opt = cf->add_option("--n", cf_n, "single n")->check(CLI::NonNegativeNumber);
    cf->add_option("--max-n", cf_max_n, "all n up to this")
        ->check(CLI::NonNegativeNumber)
        ->excludes(cf_n_opt);

    // formula
    std::string f_which;
    int f_n = -1, f_k = -1, f_max_n = -1;
    auto* formula = app.add_subcommand("formula", "summation-formula grid values");
    formula->add_option("--which", f_which, "hsp, dsv or sp-count")
        ->required()
        ->check(CLI::IsMember({"hsp", "dsv", "sp-count"}));
    auto* f_n_opt = formula->add_option("--n", f_n, "row")->check(CLI::NonNegativeNumber);
    formula->add_option("--k", f_k, "column")->check(CLI::NonNegativeNumber)->needs(f_n_opt);
    formula->add_option("--max-n", f_max_n, "whole grid up to this n")
        ->check(CLI::NonNegativeNumber)
        ->excludes(f_n_opt);

    // geom
    auto* geom = app.add_subcommand("geom", "geometric random-word statistics");
    geom->require_subcommand(1);
    GeomArgs ga;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--stat", ga.stat, "sp, sv, hsp or dsv")
            ->required()
            ->check(CLI::IsMember({"sp", "sv", "hsp", "dsv"}));
        sub->add_option("--p", ga.p, "success probability, as a/b or decimal")->required();
        sub->add_option("--n", ga.n, "word length")->required()->check(CLI::NonNegativeNumber);
    };
    auto* g_expect = geom->add_subcommand("expect", "exact expected value");
    add_common(g_expect);
    auto* g_variance = geom->add_subcommand("variance", "published variance expression, verbatim");
    add_common(g_variance);
    auto* g_simulate = geom->add_subcommand("simulate", "seeded Monte Carlo estimate");
    add_common(g_simulate);
    g_simulate->add_option("--trials", ga.trials, "sample count")->required();
    g_simulate->add_option("--seed", ga.seed, "64-bit seed")->required();
    auto* g_oracle = geom->add_subcommand("oracle", "exact truncated-alphabet moments");
    add_common(g_oracle);
    g_oracle->add_option("--cap", ga.cap, "largest letter value kept")->required()->check(CLI::Range(2, 500));

    // verify
    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "run the full cross-verification matrix");
    verify->add_option("--max-n", vo.max_n, "exhaustive-enumeration ceiling")
        ->required()
        ->check(CLI::Range(0, 24));
    verify->add_flag("--deep", vo.deep, "raise bounds and Monte Carlo trials");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*enumerate) return cmd_enumerate(en, out);
        if (*table) return cmd_table(table_max_n, out);
        if (*gf) return cmd_gf(gf_which, gf_max_n, out);
        if (*cf) {
            if (cf_n < 0 && cf_max_n < 0) {
                err << "closed-form requires --n or --max-n\n";
                return 2;
            }
            return cmd_closed_form(cf_which, cf_n, cf_max_n, out);
        }
        if (*formula) {
            if (f_max_n < 0 && (f_n < 0 || f_k < 0)) {
                err << "formula requires --max-n or both --n and --k\n";
                return 2;
            }
            return cmd_formula(f_which, f_n, f_k, f_max_n, out);
        }
        if (*geom) {
            if (*g_expect) return cmd_geom_expect(ga, false, out);
            if (*g_variance) return cmd_geom_expect(ga, true, out);
            if (*g_simulate) return cmd_geom_simulate(ga, out);
            if (*g_oracle) return cmd_geom_oracle(ga, out);
        }
        if (*verify) {
            const Report rep = run_verification(vo);
            out << rep.to_json().dump(2) << "\n";
            return rep.exit_code();
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const FormulaRangeError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace sympv
