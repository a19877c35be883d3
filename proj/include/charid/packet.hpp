#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charid/fixed_point.hpp"
#include "charid/parallel.hpp"

namespace charid {

/// The packet of discrete-series representations sharing one infinitesimal
/// character: one Harish-Chandra parameter w^{-1} lambda per coset [w] in
/// W_G / W_K, with lambda normalized to the dominant chamber.
struct LPacket {
    std::string pair_name;
    Weight lambda_dominant;
    std::vector<int> coset_reps;
    std::vector<HarishChandraParameter> members;

    int size() const { return static_cast<int>(members.size()); }
};

inline LPacket build_packet(const InnerFormPair& pair, const Weight& lambda) {
    const RootSystem& R = *pair.lie.R;
    const WeylGroup& W = *pair.lie.W;
    if (!R.is_regular(lambda)) throw SingularWeight("packet parameter " + lambda.str() + " is singular");
    if (!R.is_integral(lambda))
        throw NonIntegralWeight("packet parameter " + lambda.str() + " is not rho-shifted integral");

    LPacket packet;
    packet.pair_name = pair.name;
    packet.lambda_dominant = W.act(W.dominant_chamber_element(lambda), lambda);
    packet.coset_reps = pair.coset_reps;
    for (int rep : pair.coset_reps)
        packet.members.push_back(HarishChandraParameter::make(R, W.act(W.inverse(rep), packet.lambda_dominant)));
    return packet;
}

enum class Route { characters, fixed_point, both };

inline std::string route_name(Route r) {
    switch (r) {
        case Route::characters: return "characters";
        case Route::fixed_point: return "fixed_point";
        default: return "both";
    }
}

inline Route route_from_name(const std::string& s) {
    if (s == "characters") return Route::characters;
    if (s == "fixed_point") return Route::fixed_point;
    if (s == "both") return Route::both;
    throw ConfigError("unknown route '" + s + "'");
}

/// Exact verdict on the identity at one (lambda, g): the signed packet sum
/// of discrete-series characters against the compact-form character.
struct PacketReport {
    std::string pair_name;
    Weight lambda;
    TorusPoint point;
    int packet_size = 0;
    int q = 0;
    Route route = Route::both;
    Cyclotomic lhs;  // (-1)^q sum over the packet of Theta_pi(g)
    Cyclotomic rhs;  // character of the compact form at g
    bool equal = false;
    std::optional<std::string> error;  // set when evaluation failed
};

/// Evaluates both sides of the identity at (lambda, g). With Route::both the
/// fixed-point sums must reproduce the character values exactly before any
/// verdict is issued; disagreement raises RouteMismatch.
inline PacketReport verify_identity(const InnerFormPair& pair, const Weight& lambda, const TorusPoint& g,
                                    Route route = Route::both) {
    const RootSystem& R = *pair.lie.R;
    if (!is_regular(R, g)) throw SingularPoint("torus point " + g.str() + " is singular");
    LPacket packet = build_packet(pair, lambda);

    PacketReport report;
    report.pair_name = pair.name;
    report.lambda = packet.lambda_dominant;
    report.point = g;
    report.packet_size = packet.size();
    report.q = pair.q;
    report.route = route;

    EvalContext ctx(pair.lie, g);
    const int qsign = pair.q % 2 == 0 ? 1 : -1;

    std::optional<Cyclotomic> lhs_chars, rhs_chars, lhs_fp, rhs_fp;
    if (route == Route::characters || route == Route::both) {
        Cyclotomic acc;
        for (const auto& member : packet.members)
            acc += ds_character_impl(pair.lie, pair.wk, pair.q, member.lambda, g, &ctx);
        lhs_chars = qsign > 0 ? acc : -acc;
        rhs_chars = weyl_character(pair.lie, packet.lambda_dominant, g, &ctx);
    }
    if (route == Route::fixed_point || route == Route::both) {
        Cyclotomic acc;
        for (int rep : packet.coset_reps)
            acc += tau_index_noncompact(pair, packet.lambda_dominant, rep, g, &ctx);
        lhs_fp = std::move(acc);
        rhs_fp = tau_index_compact(pair.lie, packet.lambda_dominant, g, &ctx);
    }
    if (route == Route::both) {
        if (*lhs_chars != *lhs_fp)
            throw RouteMismatch("packet sum disagrees between routes at lambda=" + report.lambda.str() +
                                " g=" + g.str() + ": characters " + lhs_chars->str() + " vs fixed-point " +
                                lhs_fp->str());
        if (*rhs_chars != *rhs_fp)
            throw RouteMismatch("compact side disagrees between routes at lambda=" + report.lambda.str() +
                                " g=" + g.str() + ": characters " + rhs_chars->str() + " vs fixed-point " +
                                rhs_fp->str());
    }
    report.lhs = lhs_chars ? *lhs_chars : *lhs_fp;
    report.rhs = rhs_chars ? *rhs_chars : *rhs_fp;
    report.equal = report.lhs == report.rhs;
    return report;
}

struct SweepConfig {
    std::vector<Weight> lambdas;
    int point_count = 20;
    long long denominator_bound = 12;
    std::uint64_t seed = 20240101;
    Route route = Route::both;
    int jobs = 1;
};

struct SweepSummary {
    std::size_t total = 0;
    std::size_t equal = 0;
    std::size_t unequal = 0;
    std::size_t errors = 0;
};

/// One report per (lambda, point), in input order regardless of parallelism.
/// Per-task domain errors are recorded in the report rather than aborting
/// the sweep.
inline std::vector<PacketReport> sweep(const InnerFormPair& pair, const SweepConfig& config,
                                       SweepSummary* summary = nullptr) {
    std::vector<TorusPoint> points =
        sample_regular_points(*pair.lie.R, config.point_count, config.denominator_bound, config.seed);
    std::vector<PacketReport> reports(config.lambdas.size() * points.size());
    parallel_for(reports.size(), config.jobs, [&](std::size_t i) {
        const Weight& lambda = config.lambdas[i / points.size()];
        const TorusPoint& g = points[i % points.size()];
        try {
            reports[i] = verify_identity(pair, lambda, g, config.route);
        } catch (const Error& e) {
            PacketReport r;
            r.pair_name = pair.name;
            r.lambda = lambda;
            r.point = g;
            r.q = pair.q;
            r.route = config.route;
            r.error = e.what();
            reports[i] = std::move(r);
        }
    });
    if (summary) {
        *summary = SweepSummary{};
        summary->total = reports.size();
        for (const auto& r : reports) {
            if (r.error) ++summary->errors;
            else if (r.equal) ++summary->equal;
            else ++summary->unequal;
        }
    }
    return reports;
}

/// Lambdas with lambda - rho running over the integer box {0..max_coord}^rank.
inline std::vector<Weight> lambda_box(const RootSystem& R, int max_coord) {
    std::vector<Weight> out;
    const int r = R.rank();
    std::vector<long long> n(r, 0);
    for (;;) {
        std::vector<Rational> fc(r);
        for (int j = 0; j < r; ++j) fc[j] = Rational(n[j] + 1);  // lambda = (lambda - rho) + rho
        out.push_back(Weight(std::move(fc)));
        int j = r - 1;
        while (j >= 0 && ++n[j] > max_coord) n[j--] = 0;
        if (j < 0) break;
    }
    return out;
}

}  // namespace charid
