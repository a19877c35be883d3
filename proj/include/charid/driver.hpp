#pragma once

#include <cmath>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charid/catalog.hpp"
#include "charid/plot.hpp"
#include "charid/report.hpp"
#include "charid/weil.hpp"

namespace charid {

/// Everything the command line can express. Fields round-trip through
/// to_args/parse_args byte-exactly, which keeps batch runs reproducible.
struct RunConfig {
    std::string command;
    std::string pair = "sl2R/su2";
    std::string catalog_path;
    std::string lambda_spec;  // "n=3" or fundamental coordinates "2,1"
    std::string lambda_list;  // semicolon-separated lambda specs (sweep)
    int coord_max = -1;       // lambda - rho box bound (sweep)
    std::string point_spec;   // explicit torus point
    int count = 20;
    long long denom_bound = 12;
    std::uint64_t seed = 20240101;
    std::string route = "both";
    std::string format = "human";
    int jobs = 0;  // 0 = CHARID_JOBS or hardware default
    int weil_n = 0;
    int t_count = 1000;
    double t_min = 0.0;
    double t_max = 3.141592653589793;
    double margin = 1e-3;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"list-catalog", "validate", "packet",  "character",
                                                   "verify",       "sweep",    "pf1",     "weil",
                                                   "plot"};
    return names;
}

inline std::unique_ptr<CLI::App> make_cli(RunConfig& cfg) {
    auto app = std::make_unique<CLI::App>("exact discrete-series character identity checker");
    app->add_option("command", cfg.command,
                    "one of: list-catalog validate packet character verify sweep pf1 weil plot")
        ->required();
    app->add_option("--pair", cfg.pair, "inner-form pair name, e.g. sl2R/su2");
    app->add_option("--catalog", cfg.catalog_path, "catalog JSON file (defaults to the built-in catalog)");
    app->add_option("--lambda", cfg.lambda_spec, "parameter: 'n=3' for n*rho, or fundamental coords '2,1'");
    app->add_option("--lambda-list", cfg.lambda_list, "semicolon-separated lambda specs for sweeps");
    app->add_option("--coord-max", cfg.coord_max, "sweep lambda-rho over the box {0..K}^rank");
    app->add_option("--point", cfg.point_spec, "torus point as comma-separated rationals, e.g. 1/4");
    app->add_option("--count", cfg.count, "number of sampled regular points");
    app->add_option("--denom-bound", cfg.denom_bound, "denominator bound for sampled points");
    app->add_option("--seed", cfg.seed, "sampling seed");
    app->add_option("--route", cfg.route, "characters | fixed_point | both");
    app->add_option("--format", cfg.format, "human | json | csv");
    app->add_option("--jobs", cfg.jobs, "worker threads (0 = CHARID_JOBS or all cores)");
    app->add_option("--n", cfg.weil_n, "weil: single parameter index (default: 1..10)");
    app->add_option("--t-count", cfg.t_count, "plot: grid size");
    app->add_option("--t-min", cfg.t_min, "plot: left end of the t interval");
    app->add_option("--t-max", cfg.t_max, "plot: right end of the t interval");
    app->add_option("--margin", cfg.margin, "plot: exclusion margin around singular t");
    return app;
}

inline std::vector<std::string> to_args(const RunConfig& cfg) {
    std::vector<std::string> args = {cfg.command};
    auto add = [&args](const std::string& flag, const std::string& value) {
        args.push_back(flag);
        args.push_back(value);
    };
    add("--pair", cfg.pair);
    if (!cfg.catalog_path.empty()) add("--catalog", cfg.catalog_path);
    if (!cfg.lambda_spec.empty()) add("--lambda", cfg.lambda_spec);
    if (!cfg.lambda_list.empty()) add("--lambda-list", cfg.lambda_list);
    if (cfg.coord_max >= 0) add("--coord-max", std::to_string(cfg.coord_max));
    if (!cfg.point_spec.empty()) add("--point", cfg.point_spec);
    add("--count", std::to_string(cfg.count));
    add("--denom-bound", std::to_string(cfg.denom_bound));
    add("--seed", std::to_string(cfg.seed));
    add("--route", cfg.route);
    add("--format", cfg.format);
    add("--jobs", std::to_string(cfg.jobs));
    if (cfg.weil_n > 0) add("--n", std::to_string(cfg.weil_n));
    add("--t-count", std::to_string(cfg.t_count));
    add("--t-min", float_str(cfg.t_min));
    add("--t-max", float_str(cfg.t_max));
    add("--margin", float_str(cfg.margin));
    return args;
}

inline RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    auto app = make_cli(cfg);
    std::vector<const char*> argv = {"charid"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app->parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    bool known = false;
    for (const auto& name : command_names()) known = known || name == cfg.command;
    if (!known) throw ConfigError("unknown command '" + cfg.command + "'");
    if (cfg.format != "human" && cfg.format != "json" && cfg.format != "csv")
        throw ConfigError("unknown format '" + cfg.format + "'");
    route_from_name(cfg.route);
    return cfg;
}

namespace detail {

inline Weight parse_lambda(const RootSystem& R, const std::string& spec) {
    if (spec.empty()) throw ConfigError("missing --lambda");
    if (spec.rfind("n=", 0) == 0) {
        Rational n = parse_rational(spec.substr(2));
        return n * R.rho();
    }
    auto coords = parse_rational_list(spec);
    if (static_cast<int>(coords.size()) != R.rank())
        throw ConfigError("lambda '" + spec + "' has " + std::to_string(coords.size()) + " coordinates, rank is " +
                          std::to_string(R.rank()));
    return Weight(std::move(coords));
}

inline std::vector<Weight> sweep_lambdas(const RootSystem& R, const RunConfig& cfg) {
    if (cfg.coord_max >= 0) return lambda_box(R, cfg.coord_max);
    if (!cfg.lambda_list.empty()) {
        std::vector<Weight> out;
        std::string item;
        std::istringstream is(cfg.lambda_list);
        while (std::getline(is, item, ';')) out.push_back(parse_lambda(R, item));
        return out;
    }
    if (!cfg.lambda_spec.empty()) return {parse_lambda(R, cfg.lambda_spec)};
    throw ConfigError("sweep needs --coord-max, --lambda-list or --lambda");
}

inline TorusPoint parse_point(const RootSystem& R, const std::string& spec) {
    TorusPoint g = TorusPoint::parse(spec);
    if (static_cast<int>(g.c.size()) != R.rank())
        throw ConfigError("point '" + spec + "' has " + std::to_string(g.c.size()) + " coordinates, rank is " +
                          std::to_string(R.rank()));
    return g;
}

inline std::vector<TorusPoint> points_for(const InnerFormPair& pair, const RunConfig& cfg) {
    if (!cfg.point_spec.empty()) return {parse_point(*pair.lie.R, cfg.point_spec)};
    return sample_regular_points(*pair.lie.R, cfg.count, cfg.denom_bound, cfg.seed);
}

inline std::string word_str(const WeylGroup& W, int idx) {
    const auto& word = W[idx].word;
    if (word.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += "*";
        out += "s" + std::to_string(word[i] + 1);
    }
    return out;
}

inline void emit_reports(const RunConfig& cfg, const std::vector<PacketReport>& reports,
                         const SweepSummary& summary, std::ostream& out) {
    if (cfg.format == "json") {
        json j;
        j["command"] = cfg.command;
        j["pair"] = reports.empty() ? cfg.pair : reports.front().pair_name;
        j["seed"] = cfg.seed;
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        j["reports"] = std::move(arr);
        j["summary"] = summary_to_json(summary);
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << report_csv_header() << "\n";
        for (const auto& r : reports) out << report_to_csv_row(r) << "\n";
    } else {
        for (const auto& r : reports) {
            out << r.pair_name << "  lambda=" << r.lambda.str() << "  g=" << r.point.str();
            if (r.error) {
                out << "  ERROR " << *r.error << "\n";
                continue;
            }
            out << "  lhs=" << r.lhs.str() << "  rhs=" << r.rhs.str() << "  "
                << (r.equal ? "equal" : "UNEQUAL") << "\n";
        }
        out << "summary: " << summary.equal << "/" << summary.total << " equal, " << summary.unequal
            << " unequal, " << summary.errors << " errors\n";
    }
}

inline int exit_code_for(const SweepSummary& summary) {
    return summary.unequal == 0 && summary.errors == 0 ? 0 : 1;
}

inline int run_list_catalog(const RunConfig& cfg, std::ostream& out) {
    auto records = cfg.catalog_path.empty() ? builtin_catalog_records() : load_catalog_records(cfg.catalog_path);
    if (cfg.format == "json") {
        out << records_to_json(records).dump(2) << "\n";
        return 0;
    }
    auto pairs = pairs_from_records(records);
    if (cfg.format == "csv") {
        out << "name,cartan,weyl_order,wk_order,packet_size,q,dim_gk\n";
        for (const auto& p : pairs)
            out << p.name << "," << p.lie.R->spec_string() << "," << p.lie.W->order() << "," << p.wk.size()
                << "," << p.packet_size() << "," << p.q << "," << p.dim_gk << "\n";
        return 0;
    }
    for (const auto& p : pairs)
        out << p.name << "  type=" << p.lie.R->spec_string() << "  |W_G|=" << p.lie.W->order()
            << "  |W_K|=" << p.wk.size() << "  packet=" << p.packet_size() << "  q=" << p.q
            << "  dimG/K=" << p.dim_gk << "\n";
    return 0;
}

inline int run_validate(const RunConfig& cfg, std::ostream& out) {
    auto records = cfg.catalog_path.empty() ? builtin_catalog_records() : load_catalog_records(cfg.catalog_path);
    json results = json::array();
    bool all_ok = true;
    for (const auto& rec : records) {
        if (!cfg.pair.empty() && cfg.pair != "all" && rec.name != cfg.pair) continue;
        LieData lie = make_lie(rec.cartan);
        RealFormSpec spec{lie, rec.name, rec.compact_roots};
        std::sort(spec.compact_roots.begin(), spec.compact_roots.end());
        auto violations = validate_real_form(spec);
        json j;
        j["name"] = rec.name;
        j["ok"] = violations.empty();
        json v = json::array();
        for (const auto& viol : violations) v.push_back(viol.message);
        j["violations"] = std::move(v);
        if (violations.empty()) {
            QDim qd = q_and_dim(spec);
            j["q"] = qd.q;
            j["dim_gk"] = qd.dim_gk;
        }
        all_ok = all_ok && violations.empty();
        results.push_back(std::move(j));
    }
    if (results.empty()) throw CatalogError("no pair named '" + cfg.pair + "' in catalog");
    if (cfg.format == "json") {
        out << results.dump(2) << "\n";
    } else {
        for (const auto& j : results) {
            out << j["name"].get<std::string>() << ": " << (j["ok"].get<bool>() ? "ok" : "INVALID") << "\n";
            for (const auto& v : j["violations"]) out << "  violation: " << v.get<std::string>() << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

inline int run_packet(const RunConfig& cfg, std::ostream& out) {
    InnerFormPair pair = find_pair(cfg.pair, cfg.catalog_path);
    Weight lambda = parse_lambda(*pair.lie.R, cfg.lambda_spec);
    LPacket packet = build_packet(pair, lambda);
    if (cfg.format == "json") {
        json j;
        j["pair"] = packet.pair_name;
        j["lambda"] = weight_to_json(packet.lambda_dominant);
        j["packet_size"] = packet.size();
        json members = json::array();
        for (int i = 0; i < packet.size(); ++i) {
            json m;
            m["coset"] = word_str(*pair.lie.W, packet.coset_reps[i]);
            m["parameter"] = weight_to_json(packet.members[i].lambda);
            members.push_back(std::move(m));
        }
        j["members"] = std::move(members);
        out << j.dump(2) << "\n";
    } else {
        out << packet.pair_name << "  lambda=" << packet.lambda_dominant.str() << "  size=" << packet.size()
            << "\n";
        for (int i = 0; i < packet.size(); ++i)
            out << "  [" << word_str(*pair.lie.W, packet.coset_reps[i]) << "]  "
                << packet.members[i].lambda.str() << "\n";
    }
    return 0;
}

inline int run_character(const RunConfig& cfg, std::ostream& out) {
    InnerFormPair pair = find_pair(cfg.pair, cfg.catalog_path);
    const RootSystem& R = *pair.lie.R;
    Weight lambda = parse_lambda(R, cfg.lambda_spec);
    if (cfg.point_spec.empty()) throw ConfigError("character needs --point");
    TorusPoint g = parse_point(R, cfg.point_spec);

    LPacket packet = build_packet(pair, lambda);
    EvalContext ctx(pair.lie, g);
    Cyclotomic chi = weyl_character(pair.lie, packet.lambda_dominant, g, &ctx);
    Cyclotomic oracle = freudenthal_character(pair.lie, packet.lambda_dominant - R.rho(), g);
    bool oracle_equal = chi == oracle;

    std::vector<std::pair<Weight, Cyclotomic>> values;
    for (int i = 0; i < packet.size(); ++i)
        values.emplace_back(packet.members[i].lambda,
                            ds_character_impl(pair.lie, pair.wk, pair.q, packet.members[i].lambda, g, &ctx));

    if (cfg.format == "json") {
        json j;
        j["pair"] = pair.name;
        j["lambda"] = weight_to_json(packet.lambda_dominant);
        j["point"] = point_to_json(g);
        j["compact_character"] = cyc_to_json(chi);
        j["weight_multiplicity_oracle"] = cyc_to_json(oracle);
        j["oracle_equal"] = oracle_equal;
        json members = json::array();
        for (const auto& [param, value] : values) {
            json m;
            m["parameter"] = weight_to_json(param);
            m["value"] = cyc_to_json(value);
            members.push_back(std::move(m));
        }
        j["discrete_series"] = std::move(members);
        out << j.dump(2) << "\n";
    } else {
        out << "compact character: " << chi.str() << (oracle_equal ? "  (oracle ok)" : "  (ORACLE MISMATCH)")
            << "\n";
        for (const auto& [param, value] : values)
            out << "Theta[" << param.str() << "] = " << value.str() << "\n";
    }
    return oracle_equal ? 0 : 1;
}

inline int run_verify_or_sweep(const RunConfig& cfg, std::ostream& out) {
    InnerFormPair pair = find_pair(cfg.pair, cfg.catalog_path);
    SweepConfig sc;
    sc.lambdas = cfg.command == "sweep" ? sweep_lambdas(*pair.lie.R, cfg)
                                        : std::vector<Weight>{parse_lambda(*pair.lie.R, cfg.lambda_spec)};
    sc.point_count = cfg.count;
    sc.denominator_bound = cfg.denom_bound;
    sc.seed = cfg.seed;
    sc.route = route_from_name(cfg.route);
    sc.jobs = cfg.jobs;

    SweepSummary summary;
    std::vector<PacketReport> reports;
    if (!cfg.point_spec.empty()) {
        TorusPoint g = parse_point(*pair.lie.R, cfg.point_spec);
        for (const auto& lambda : sc.lambdas)
            reports.push_back(verify_identity(pair, lambda, g, sc.route));
        summary.total = reports.size();
        for (const auto& r : reports) (r.equal ? summary.equal : summary.unequal)++;
    } else {
        reports = sweep(pair, sc, &summary);
    }
    emit_reports(cfg, reports, summary, out);
    return exit_code_for(summary);
}

inline int run_pf1(const RunConfig& cfg, std::ostream& out) {
    InnerFormPair pair = find_pair(cfg.pair, cfg.catalog_path);
    auto lambdas = sweep_lambdas(*pair.lie.R, cfg);
    auto points = points_for(pair, cfg);
    json rows = json::array();
    bool all_ok = true;
    for (const auto& lambda : lambdas) {
        Weight lambda_dom = pair.lie.W->act(pair.lie.W->dominant_chamber_element(lambda), lambda);
        for (const auto& g : points) {
            Pf1Result res = verify_pf1_decomposition(pair, lambda_dom, g);
            all_ok = all_ok && res.equal;
            json j;
            j["lambda"] = weight_to_json(lambda_dom);
            j["point"] = point_to_json(g);
            j["compact_side"] = cyc_to_json(res.compact_side);
            j["regrouped_side"] = cyc_to_json(res.regrouped_side);
            j["equal"] = res.equal;
            rows.push_back(std::move(j));
        }
    }
    if (cfg.format == "json") {
        json j;
        j["pair"] = pair.name;
        j["rows"] = std::move(rows);
        j["all_equal"] = all_ok;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& j : rows)
            out << "lambda=" << j["lambda"].dump() << " g=" << j["point"].dump() << " "
                << (j["equal"].get<bool>() ? "equal" : "UNEQUAL") << "\n";
        out << (all_ok ? "all decompositions equal\n" : "DECOMPOSITION FAILURES\n");
    }
    return all_ok ? 0 : 1;
}

inline int run_weil(const RunConfig& cfg, std::ostream& out) {
    std::vector<int> ns;
    if (cfg.weil_n > 0) ns.push_back(cfg.weil_n);
    else
        for (int n = 1; n <= 10; ++n) ns.push_back(n);
    auto samples = standard_weil_samples();
    json rows = json::array();
    bool all_ok = true;
    for (int n : ns) {
        auto res = check_homomorphism(n, samples);
        all_ok = all_ok && res.ok;
        json j;
        j["n"] = n;
        j["samples"] = samples.size();
        j["ok"] = res.ok;
        if (!res.ok) {
            j["failing_pair"] =
                json::array({samples[res.failing_index].first.str(), samples[res.failing_index].second.str()});
        }
        rows.push_back(std::move(j));
    }
    if (cfg.format == "json") {
        out << rows.dump(2) << "\n";
    } else {
        for (const auto& j : rows)
            out << "phi_" << j["n"].get<int>() << ": " << (j["ok"].get<bool>() ? "homomorphism ok" : "FAILED")
                << " over " << j["samples"].get<std::size_t>() << " pairs\n";
    }
    return all_ok ? 0 : 1;
}

inline int run_plot(const RunConfig& cfg, std::ostream& out) {
    InnerFormPair pair = find_pair(cfg.pair, cfg.catalog_path);
    Weight lambda = parse_lambda(*pair.lie.R, cfg.lambda_spec);
    auto grid = plot_grid(pair, cfg.t_min, cfg.t_max, cfg.t_count, cfg.margin);
    auto rows = emit_plot_data(pair, lambda, grid);
    double max_diff = 0;
    for (const auto& r : rows)
        if (r.valid && r.abs_diff > max_diff) max_diff = r.abs_diff;
    if (cfg.format == "json") {
        json j;
        j["pair"] = pair.name;
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json row;
            row["t"] = r.t;
            if (r.valid) {
                row["lhs"] = json::array({r.lhs.real(), r.lhs.imag()});
                row["rhs"] = json::array({r.rhs.real(), r.rhs.imag()});
                row["abs_diff"] = r.abs_diff;
            } else {
                row["lhs"] = nullptr;
                row["rhs"] = nullptr;
                row["abs_diff"] = nullptr;
            }
            j["rows"].push_back(std::move(row));
        }
        j["max_abs_diff"] = max_diff;
        out << j.dump(2) << "\n";
    } else {
        out << "t,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff\n";
        for (const auto& r : rows) {
            if (r.valid)
                out << float_str(r.t) << "," << float_str(r.lhs.real()) << "," << float_str(r.lhs.imag()) << ","
                    << float_str(r.rhs.real()) << "," << float_str(r.rhs.imag()) << "," << float_str(r.abs_diff)
                    << "\n";
            else
                out << float_str(r.t) << ",nan,nan,nan,nan,nan\n";
        }
    }
    return 0;
}

}  // namespace detail

/// Executes one parsed command. Exit codes: 0 all verifications passed,
/// 1 a verification failed, 2 configuration or catalog problem, 3 domain
/// error (singular data and friends).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "list-catalog") return detail::run_list_catalog(cfg, out);
        if (cfg.command == "validate") return detail::run_validate(cfg, out);
        if (cfg.command == "packet") return detail::run_packet(cfg, out);
        if (cfg.command == "character") return detail::run_character(cfg, out);
        if (cfg.command == "verify" || cfg.command == "sweep") return detail::run_verify_or_sweep(cfg, out);
        if (cfg.command == "pf1") return detail::run_pf1(cfg, out);
        if (cfg.command == "weil") return detail::run_weil(cfg, out);
        if (cfg.command == "plot") return detail::run_plot(cfg, out);
        throw ConfigError("unknown command '" + cfg.command + "'");
    } catch (const RouteMismatch& e) {
        err << "{\"error\":{\"code\":\"" << e.code() << "\",\"message\":" << json(e.what()).dump() << "}}\n";
        return 1;
    } catch (const ConfigError& e) {
        err << "{\"error\":{\"code\":\"" << e.code() << "\",\"message\":" << json(e.what()).dump() << "}}\n";
        return 2;
    } catch (const CatalogError& e) {
        err << "{\"error\":{\"code\":\"" << e.code() << "\",\"message\":" << json(e.what()).dump() << "}}\n";
        return 2;
    } catch (const Error& e) {
        err << "{\"error\":{\"code\":\"" << e.code() << "\",\"message\":" << json(e.what()).dump() << "}}\n";
        return 3;
    }
}

inline int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return run(cfg, std::cout, std::cerr);
}

}  // namespace charid
