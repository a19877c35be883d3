#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "charid/cyclotomic.hpp"
#include "charid/root_system.hpp"
#include "charid/weyl_group.hpp"

namespace charid {

/// A finite-order point of the compact torus, as rational coordinates over
/// the simple-coroot basis: g = exp(2 pi i sum_j c_j H_j). The evaluation
/// exponent of a weight mu at g is <mu, g> = sum_j <mu, alpha_j_vee> c_j.
struct TorusPoint {
    std::vector<Rational> c;

    TorusPoint() = default;
    explicit TorusPoint(std::vector<Rational> coords) : c(std::move(coords)) {}

    static TorusPoint parse(const std::string& text) { return TorusPoint(parse_rational_list(text)); }

    TorusPoint operator-() const {
        TorusPoint out = *this;
        for (auto& x : out.c) x = -x;
        return out;
    }

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.c == b.c; }
    friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.c < b.c; }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        return os.str();
    }
};

/// e^mu(g) as an exact root of unity. Requires all simple pairings of mu to
/// be half-integral; the cyclotomic order is the reduced exponent
/// denominator.
inline Cyclotomic evaluate_weight(const RootSystem& R, const Weight& mu, const TorusPoint& g) {
    if (static_cast<int>(mu.fc.size()) != R.rank() || static_cast<int>(g.c.size()) != R.rank())
        throw Error("Internal", "rank mismatch in evaluate_weight");
    Rational x(0);
    for (int j = 0; j < R.rank(); ++j) {
        if (!is_half_integer(mu.fc[j]))
            throw NonIntegralWeight("weight " + mu.str() + " has a non-half-integral simple pairing");
        x += mu.fc[j] * g.c[j];
    }
    long long q = to_ll(denom(x));
    long long p = to_ll(numer(x) % denom(x));
    return Cyclotomic::root_of_unity(q, p);
}

/// g is regular iff e^alpha(g) != 1 for every root alpha.
inline bool is_regular(const RootSystem& R, const TorusPoint& g) {
    for (int i = 0; i < R.positive_count(); ++i) {
        Rational x(0);
        for (int j = 0; j < R.rank(); ++j) x += Rational(R.root_fund(i)[j]) * g.c[j];
        if (is_integer(x)) return false;
    }
    return true;
}

/// Weyl action on torus points, defined so that
/// evaluate_weight(w(mu), g) == evaluate_weight(mu, w^{-1}(g)).
inline TorusPoint weyl_act_point(const WeylGroup& W, int w, const TorusPoint& g) {
    const int r = W.roots().rank();
    const auto& m = W[W.inverse(w)].mat;  // transpose of the inverse matrix
    std::vector<Rational> out(r, Rational(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (m[j][i] != 0) out[i] += Rational(m[j][i]) * g.c[j];
    return TorusPoint(std::move(out));
}

/// Deterministic (seeded) sample of distinct regular points whose coordinate
/// denominators stay within the bound. Falls back to an exhaustive scan of
/// the finite grid before reporting exhaustion.
inline std::vector<TorusPoint> sample_regular_points(const RootSystem& R, int count,
                                                     long long denominator_bound, std::uint64_t seed) {
    if (count < 1) throw ConfigError("sample count must be >= 1");
    if (denominator_bound < 1) throw ConfigError("denominator bound must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&rng](long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    std::set<TorusPoint> seen;
    std::vector<TorusPoint> out;
    const int r = R.rank();
    long long misses = 0;
    const long long miss_limit = 50000 + 200LL * count;
    while (static_cast<int>(out.size()) < count && misses < miss_limit) {
        std::vector<Rational> c(r);
        for (int j = 0; j < r; ++j) {
            long long q = draw(1, denominator_bound);
            long long p = draw(0, q - 1);
            c[j] = Rational(p, q);
        }
        TorusPoint g(std::move(c));
        if (!is_regular(R, g) || !seen.insert(g).second) {
            ++misses;
            continue;
        }
        misses = 0;
        out.push_back(std::move(g));
    }
    if (static_cast<int>(out.size()) < count) {
        // Exhaustive sweep over the full grid, lexicographic order.
        std::set<Rational> values;
        for (long long q = 1; q <= denominator_bound; ++q)
            for (long long p = 0; p < q; ++p) values.insert(Rational(p, q));
        std::vector<Rational> vals(values.begin(), values.end());
        std::vector<std::size_t> odo(r, 0);
        for (;;) {
            std::vector<Rational> c(r);
            for (int j = 0; j < r; ++j) c[j] = vals[odo[j]];
            TorusPoint g(std::move(c));
            if (is_regular(R, g) && seen.insert(g).second) {
                out.push_back(std::move(g));
                if (static_cast<int>(out.size()) == count) break;
            }
            int j = r - 1;
            while (j >= 0 && ++odo[j] == vals.size()) odo[j--] = 0;
            if (j < 0) break;
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw ExhaustedSearch("only " + std::to_string(out.size()) + " regular points with denominators <= " +
                              std::to_string(denominator_bound) + ", requested " + std::to_string(count));
    return out;
}

}  // namespace charid
