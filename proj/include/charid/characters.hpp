#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "charid/eval_context.hpp"

namespace charid {

/// A discrete-series parameter: a regular weight lambda with lambda - rho
/// integral, together with its chamber data. Two parameters name the same
/// representation of a real form exactly when they lie in one W_K-orbit.
struct HarishChandraParameter {
    Weight lambda;
    Weight rho_chamber;

    static HarishChandraParameter make(const RootSystem& R, Weight lambda) {
        if (!R.is_regular(lambda)) throw SingularWeight("parameter " + lambda.str() + " is singular");
        if (!R.is_integral(lambda))
            throw NonIntegralWeight("parameter " + lambda.str() + " is not rho-shifted integral");
        Weight rc = R.rho_of_chamber(lambda);
        return HarishChandraParameter{std::move(lambda), std::move(rc)};
    }
};

inline bool same_wk_orbit(const WeylGroup& W, const std::vector<int>& wk, const Weight& a, const Weight& b) {
    return std::any_of(wk.begin(), wk.end(), [&](int k) { return W.act(k, a) == b; });
}

namespace detail {

inline void check_character_args(const RootSystem& R, const Weight& lambda, const TorusPoint& g) {
    if (!is_regular(R, g)) throw SingularPoint("torus point " + g.str() + " is singular");
    if (!R.is_regular(lambda)) throw SingularWeight("parameter " + lambda.str() + " is singular");
    if (!R.is_integral(lambda))
        throw NonIntegralWeight("parameter " + lambda.str() + " is not rho-shifted integral");
}

/// sum over the listed elements of sign(w) e^{w lambda}(g).
inline Cyclotomic alternating_sum(EvalContext& ctx, const std::vector<int>& subset, const Weight& lambda) {
    Cyclotomic acc;
    for (int w : subset) {
        Cyclotomic term = ctx.eval(ctx.W().act(w, lambda));
        acc += ctx.W().sign(w) > 0 ? term : -term;
    }
    return acc;
}

}  // namespace detail

/// Character of the irreducible representation of the compact form with
/// infinitesimal character lambda (highest weight lambda - rho), as the
/// quotient of alternating sums over the full Weyl group. Independent of the
/// chamber of lambda.
inline Cyclotomic weyl_character(const LieData& lie, const Weight& lambda, const TorusPoint& g,
                                 EvalContext* shared_ctx = nullptr) {
    detail::check_character_args(*lie.R, lambda, g);
    EvalContext local(lie, g);
    EvalContext& ctx = shared_ctx ? *shared_ctx : local;
    Cyclotomic num;
    const WeylGroup& W = ctx.W();
    for (int w = 0; w < W.order(); ++w) {
        Cyclotomic term = ctx.eval(W.act(w, lambda));
        num += W.sign(w) > 0 ? term : -term;
    }
    int u = W.dominant_chamber_element(lambda);
    Cyclotomic value = num * ctx.inv_weyl_denominator();
    return W.sign(u) > 0 ? value : -value;
}

/// Discrete-series character of the form described by (W_K, q) on the
/// regular part of the compact torus:
///   Theta_lambda(g) = (-1)^q  sum_{k in W_K} sign(k) e^{k lambda}(g)
///                     / sum_{w in W_G} sign(w) e^{w rho_lambda}(g).
/// W_K-invariant in lambda; reduces to weyl_character on the compact member.
inline Cyclotomic ds_character_impl(const LieData& lie, const std::vector<int>& wk, int q,
                                    const Weight& lambda, const TorusPoint& g,
                                    EvalContext* shared_ctx = nullptr) {
    detail::check_character_args(*lie.R, lambda, g);
    EvalContext local(lie, g);
    EvalContext& ctx = shared_ctx ? *shared_ctx : local;
    Cyclotomic num = detail::alternating_sum(ctx, wk, lambda);
    // The denominator for the chamber of lambda is sign(u) times the dominant
    // one, where u moves lambda to the dominant chamber.
    int u = ctx.W().dominant_chamber_element(lambda);
    Cyclotomic value = num * ctx.inv_weyl_denominator();
    int sign = (q % 2 == 0 ? 1 : -1) * ctx.W().sign(u);
    return sign > 0 ? value : -value;
}

inline Cyclotomic ds_character(const RealFormSpec& spec, const Weight& lambda, const TorusPoint& g,
                               EvalContext* shared_ctx = nullptr) {
    return ds_character_impl(spec.lie, weyl_subgroup_K(spec), q_and_dim(spec).q, lambda, g, shared_ctx);
}

/// Weight multiplicities of the irreducible with a given dominant integral
/// highest weight, via the Freudenthal recursion. Serves as an oracle for
/// the quotient character formulas; shares nothing with them.
struct WeightSystem {
    Weight highest;
    std::vector<std::pair<Weight, Integer>> dominant_weights;
    std::vector<std::pair<Weight, Integer>> all_weights;
    Integer dimension = 0;
};

inline WeightSystem weight_system(const LieData& lie, const Weight& highest) {
    const RootSystem& R = *lie.R;
    const WeylGroup& W = *lie.W;
    if (!R.is_integral(highest) || !R.is_dominant(highest))
        throw Error("Internal", "highest weight must be dominant integral: " + highest.str());

    const int r = R.rank();
    const Weight rho = R.rho();

    // Dominant weights below the highest one: mu = highest - sum n_i alpha_i
    // with n in the box bounded by C^{-1} f(highest) (the inverse Cartan
    // matrix has non-negative entries in finite type).
    std::vector<long long> maxn(r);
    {
        std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r + 1));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) a[i][j] = Rational(R.cartan()[i][j]);
            a[i][r] = highest.fc[i];
        }
        for (int k = 0; k < r; ++k) {
            int pivot = k;
            while (a[pivot][k] == 0) ++pivot;
            std::swap(a[k], a[pivot]);
            for (int i = 0; i < r; ++i) {
                if (i == k) continue;
                Rational f = a[i][k] / a[k][k];
                if (f == 0) continue;
                for (int j = k; j <= r; ++j) a[i][j] -= f * a[k][j];
            }
        }
        for (int k = 0; k < r; ++k) {
            Rational v = a[k][r] / a[k][k];
            Integer fl = numer(v) / denom(v);  // v >= 0 here
            maxn[k] = to_ll(fl);
        }
    }

    struct Candidate {
        std::vector<long long> n;
        Weight mu;
        long long height;
    };
    std::vector<Candidate> cands;
    std::vector<long long> n(r, 0);
    for (;;) {
        Weight mu = highest;
        bool dominant = true;
        for (int i = 0; i < r && dominant; ++i) {
            Rational x = highest.fc[i];
            for (int j = 0; j < r; ++j) x -= Rational(R.cartan()[i][j] * n[j]);
            mu.fc[i] = x;
            if (x < 0) dominant = false;
        }
        if (dominant) {
            long long h = 0;
            for (long long v : n) h += v;
            cands.push_back({n, mu, h});
        }
        int j = r - 1;
        while (j >= 0 && ++n[j] > maxn[j]) n[j--] = 0;
        if (j < 0) break;
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return a.height != b.height ? a.height < b.height : a.n < b.n;
    });

    auto dominant_rep = [&](Weight mu) {
        for (;;) {
            int neg = -1;
            for (int i = 0; i < r; ++i)
                if (mu.fc[i] < 0) {
                    neg = i;
                    break;
                }
            if (neg < 0) return mu;
            mu = R.reflect(mu, R.simple_root_index(neg));
        }
    };

    std::map<Weight, Integer> mult;
    const Rational top_norm = R.inner(highest + rho, highest + rho);
    for (const Candidate& cand : cands) {
        if (cand.height == 0) {
            mult[cand.mu] = 1;
            continue;
        }
        Rational acc(0);
        for (int a = 0; a < R.positive_count(); ++a) {
            const Weight alpha = R.weight_of_root(a);
            for (long long k = 1;; ++k) {
                bool inside = true;
                for (int j = 0; j < r && inside; ++j)
                    if (cand.n[j] - k * R.root_coords(a)[j] < 0) inside = false;
                if (!inside) break;
                Weight nu = cand.mu + Rational(k) * alpha;
                auto it = mult.find(dominant_rep(nu));
                if (it == mult.end()) continue;
                acc += Rational(it->second) * R.inner(nu, alpha);
            }
        }
        Rational denom_term = top_norm - R.inner(cand.mu + rho, cand.mu + rho);
        Rational m = Rational(2) * acc / denom_term;
        if (!is_integer(m) || m < 0) throw Error("Internal", "non-integral multiplicity for " + cand.mu.str());
        mult[cand.mu] = numer(m);
    }

    WeightSystem sys;
    sys.highest = highest;
    for (const Candidate& cand : cands) {
        Integer m = mult.at(cand.mu);
        if (m == 0) continue;
        sys.dominant_weights.emplace_back(cand.mu, m);
        std::set<Weight> orbit;
        for (int w = 0; w < W.order(); ++w) orbit.insert(W.act(w, cand.mu));
        for (const Weight& nu : orbit) sys.all_weights.emplace_back(nu, m);
        sys.dimension += m * Integer(orbit.size());
    }
    return sys;
}

inline Cyclotomic freudenthal_value(const WeightSystem& sys, const RootSystem& R, const TorusPoint& g) {
    // One pass: collect the rational exponents, lift to the common order and
    // canonicalize once. Term-by-term cyclotomic addition would re-embed the
    // accumulator for every one of the (possibly thousands of) weights.
    std::vector<std::pair<Rational, Integer>> exponents;
    exponents.reserve(sys.all_weights.size());
    long long order = 1;
    for (const auto& [nu, m] : sys.all_weights) {
        Rational x(0);
        for (int j = 0; j < R.rank(); ++j) {
            if (!is_half_integer(nu.fc[j]))
                throw NonIntegralWeight("weight " + nu.str() + " has a non-half-integral simple pairing");
            x += nu.fc[j] * g.c[j];
        }
        order = checked_lcm(order, to_ll(denom(x)), Cyclotomic::kMaxOrder);
        exponents.emplace_back(std::move(x), m);
    }
    std::map<long long, Rational> terms;
    for (const auto& [x, m] : exponents) {
        long long k = to_ll(numer(x) * (order / to_ll(denom(x))) % order);
        if (k < 0) k += order;
        terms[k] += Rational(m);
    }
    return Cyclotomic::from_terms(order, std::move(terms));
}

/// Character value sum_mu mult(mu) e^mu(g) over the full weight system.
/// Defined at every torus point, including singular ones.
inline Cyclotomic freudenthal_character(const LieData& lie, const Weight& highest, const TorusPoint& g) {
    return freudenthal_value(weight_system(lie, highest), *lie.R, g);
}

}  // namespace charid
