#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "charid/packet.hpp"

namespace charid {

/// Floating-point sweep of both sides of the identity along the rank-one
/// torus path g(t) = exp(t X), for visual inspection of the closed forms.
/// Never used for verdicts: the exact machinery is the authority.
struct PlotRow {
    double t = 0;
    std::complex<double> lhs{0, 0};
    std::complex<double> rhs{0, 0};
    double abs_diff = 0;
    bool valid = true;  // false rows mark grid points that touched a singularity
};

namespace detail {

inline std::complex<double> eval_f(const Weight& mu, double t) {
    // rank one: exponent <mu, g> = f_0(mu) * t / (2 pi)
    double f = to_double(mu.fc[0]);
    return std::polar(1.0, f * t);
}

inline std::complex<double> alternating_sum_f(const LieData& lie, const std::vector<int>& subset,
                                              const Weight& lambda, double t) {
    std::complex<double> acc(0, 0);
    for (int w : subset) acc += static_cast<double>(lie.W->sign(w)) * eval_f(lie.W->act(w, lambda), t);
    return acc;
}

}  // namespace detail

/// Grid of t values in (t_min, t_max) excluding margins around the singular
/// set {t : e^alpha(g(t)) = 1 for some root alpha}.
inline std::vector<double> plot_grid(const InnerFormPair& pair, double t_min, double t_max, int count,
                                     double margin) {
    const RootSystem& R = *pair.lie.R;
    if (R.rank() != 1) throw ConfigError("plot sweeps support rank-one pairs only");
    std::vector<double> singular_periods;
    for (int i = 0; i < R.positive_count(); ++i)
        singular_periods.push_back(2.0 * M_PI / std::abs(to_double(Rational(R.root_fund(i)[0]))));
    std::vector<double> grid;
    grid.reserve(count);
    for (int i = 0; i < count; ++i) {
        double t = t_min + (t_max - t_min) * (i + 1) / (count + 1);
        bool near_wall = false;
        for (double period : singular_periods) {
            double k = std::round(t / period);
            if (std::abs(t - k * period) < margin) near_wall = true;
        }
        if (!near_wall) grid.push_back(t);
    }
    return grid;
}

/// Rows (t, lhs, rhs, |lhs - rhs|) with both sides evaluated in complex
/// doubles through the same alternating-sum formulas as the exact route.
inline std::vector<PlotRow> emit_plot_data(const InnerFormPair& pair, const Weight& lambda,
                                           const std::vector<double>& t_grid) {
    const RootSystem& R = *pair.lie.R;
    if (R.rank() != 1) throw ConfigError("plot sweeps support rank-one pairs only");
    if (!R.is_regular(lambda)) throw SingularWeight("plot parameter " + lambda.str() + " is singular");
    const WeylGroup& W = *pair.lie.W;
    const Weight lambda_dom = W.act(W.dominant_chamber_element(lambda), lambda);
    std::vector<int> full(W.order());
    for (int w = 0; w < W.order(); ++w) full[w] = w;

    const Weight rho = R.rho();
    const int qsign = pair.q % 2 == 0 ? 1 : -1;
    std::vector<PlotRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        PlotRow row;
        row.t = t;
        std::complex<double> den = detail::alternating_sum_f(pair.lie, full, rho, t);
        if (std::abs(den) < 1e-12) {
            row.valid = false;
            row.lhs = row.rhs = {std::numeric_limits<double>::quiet_NaN(), 0};
            row.abs_diff = std::numeric_limits<double>::quiet_NaN();
            rows.push_back(row);
            continue;
        }
        // lhs: (-1)^q sum over packet members of the discrete-series value.
        std::complex<double> lhs(0, 0);
        for (int rep : pair.coset_reps) {
            Weight member = W.act(W.inverse(rep), lambda_dom);
            int u = W.dominant_chamber_element(member);
            std::complex<double> num = detail::alternating_sum_f(pair.lie, pair.wk, member, t);
            double chamber_sign = static_cast<double>(W.sign(u) * qsign);
            lhs += chamber_sign * num / den;
        }
        lhs *= static_cast<double>(qsign);
        std::complex<double> rhs = detail::alternating_sum_f(pair.lie, full, lambda_dom, t) / den;
        row.lhs = lhs;
        row.rhs = rhs;
        row.abs_diff = std::abs(lhs - rhs);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace charid
