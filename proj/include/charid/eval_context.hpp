#pragma once

#include <optional>

#include "charid/cyclotomic.hpp"
#include "charid/real_form.hpp"
#include "charid/torus.hpp"

namespace charid {

/// Per-(root system, torus point) workspace. Character and index evaluations
/// at one point share two expensive inversions: the Weyl denominator of the
/// dominant chamber and the product over positive roots of (1 - e^{-alpha}).
/// Denominators for every other chamber are exact monomial transports of
/// these, so each verification performs O(1) polynomial inversions.
///
/// Contexts are cheap to construct and not thread-safe; use one per task.
class EvalContext {
public:
    EvalContext(const LieData& lie, TorusPoint g) : lie_(lie), g_(std::move(g)) {}

    const RootSystem& R() const { return *lie_.R; }
    const WeylGroup& W() const { return *lie_.W; }
    const TorusPoint& point() const { return g_; }

    Cyclotomic eval(const Weight& mu) const { return evaluate_weight(R(), mu, g_); }

    /// D = sum_w sign(w) e^{w rho}(g); vanishes exactly at singular g.
    const Cyclotomic& weyl_denominator() {
        if (!weyl_den_) {
            Cyclotomic acc;
            const Weight rho = R().rho();
            for (int w = 0; w < W().order(); ++w) {
                Cyclotomic term = eval(W().act(w, rho));
                acc += W().sign(w) > 0 ? term : -term;
            }
            weyl_den_ = std::move(acc);
        }
        return *weyl_den_;
    }

    const Cyclotomic& inv_weyl_denominator() {
        if (!inv_weyl_den_) {
            const Cyclotomic& d = weyl_denominator();
            if (d.is_zero()) throw SingularPoint("Weyl denominator vanishes at " + g_.str());
            inv_weyl_den_ = d.inverse();
        }
        return *inv_weyl_den_;
    }

    /// B = prod_{alpha > 0} (1 - e^{-alpha}(g)).
    const Cyclotomic& chamber_product_base() {
        if (!chamber_base_) {
            Cyclotomic acc(Rational(1));
            for (int i = 0; i < R().positive_count(); ++i) {
                Cyclotomic e = eval(-R().weight_of_root(i));
                acc *= Cyclotomic(Rational(1)) - e;
            }
            chamber_base_ = std::move(acc);
        }
        return *chamber_base_;
    }

    const Cyclotomic& inv_chamber_product_base() {
        if (!inv_chamber_base_) {
            const Cyclotomic& b = chamber_product_base();
            if (b.is_zero()) throw SingularPoint("fixed-point denominator vanishes at " + g_.str());
            inv_chamber_base_ = b.inverse();
        }
        return *inv_chamber_base_;
    }

    /// 1 / prod_{alpha in u R+} (1 - e^{-alpha}(g)). Flipping a root alpha to
    /// -alpha multiplies its factor by -e^{alpha}, so the transported inverse
    /// is (-1)^{l(u)} e^{-S}(g) / B with S the sum of the flipped roots.
    Cyclotomic inv_chamber_product(int u) {
        if (u == W().identity()) return inv_chamber_product_base();
        Weight flipped_sum = R().zero_weight();
        int flips = 0;
        for (int i = 0; i < R().positive_count(); ++i) {
            int j = W().act_root(u, i);
            if (!R().is_positive_root(j)) {
                flipped_sum = flipped_sum + R().weight_of_root(R().negative_of(j));
                ++flips;
            }
        }
        Cyclotomic out = eval(-flipped_sum) * inv_chamber_product_base();
        return flips % 2 == 0 ? out : -out;
    }

private:
    LieData lie_;
    TorusPoint g_;
    std::optional<Cyclotomic> weyl_den_;
    std::optional<Cyclotomic> inv_weyl_den_;
    std::optional<Cyclotomic> chamber_base_;
    std::optional<Cyclotomic> inv_chamber_base_;
};

}  // namespace charid
