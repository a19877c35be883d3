#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charid/errors.hpp"
#include "charid/numeric.hpp"

namespace charid {

namespace detail {

// Exact division of integer polynomials (ascending coefficients, divisor
// monic up to sign). Remainder must vanish.
inline std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    if (den.empty() || (den.back() != 1 && den.back() != -1))
        throw Error("Internal", "divisor must be monic up to sign");
    if (num.size() < den.size()) throw Error("Internal", "degree underflow in exact division");
    const Integer lead = den.back();
    std::vector<Integer> quot(num.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer c = num[k + den.size() - 1] / lead;
        quot[k] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const Integer& r : num)
        if (r != 0) throw Error("Internal", "nonzero remainder in exact division");
    return quot;
}

/// Coefficients of the N-th cyclotomic polynomial, ascending, monic.
/// Computed by dividing x^N - 1 by the lower-order factors; cached.
inline const std::vector<Integer>& cyclotomic_polynomial(long long n) {
    static std::map<long long, std::vector<Integer>> cache;
    static std::mutex mtx;
    std::scoped_lock lock(mtx);

    std::function<const std::vector<Integer>&(long long)> get =
        [&](long long k) -> const std::vector<Integer>& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        std::vector<Integer> poly;
        if (k == 1) {
            poly = {Integer(-1), Integer(1)};  // x - 1
        } else {
            poly.assign(static_cast<std::size_t>(k) + 1, Integer(0));
            poly.front() = -1;
            poly.back() = 1;  // x^k - 1
            for (long long d = 1; d <= k / 2; ++d)
                if (k % d == 0) poly = poly_div_exact(std::move(poly), get(d));
        }
        return cache.emplace(k, std::move(poly)).first->second;
    };
    return get(n);
}

}  // namespace detail

/// An exact element of the cyclotomic field Q(zeta_N), stored as a polynomial
/// in zeta_N reduced modulo the N-th cyclotomic polynomial. The basis
/// {zeta^k : 0 <= k < phi(N)} makes the representation unique for a fixed N,
/// so equality is decidable; values of different orders are compared after
/// embedding into Q(zeta_lcm).
///
/// Values are immutable after construction and safe to share across threads.
class Cyclotomic {
public:
    static constexpr long long kMaxOrder = 1'000'000;

    /// Zero, represented in Q(zeta_1).
    Cyclotomic() : order_(1) {}

    Cyclotomic(const Rational& r) : order_(1) {
        if (r != 0) c_[0] = r;
    }
    Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}

    /// zeta_order^exponent (exponent taken mod order).
    static Cyclotomic root_of_unity(long long order, long long exponent) {
        if (order < 1) throw Error("Internal", "root_of_unity needs a positive order");
        if (order > kMaxOrder) throw OverflowError("cyclotomic order too large");
        long long k = exponent % order;
        if (k < 0) k += order;
        std::map<long long, Rational> terms;
        terms[k] = Rational(1);
        return from_terms(order, std::move(terms));
    }

    /// Builds sum_k c_k zeta_order^k and reduces to canonical form.
    static Cyclotomic from_terms(long long order, std::map<long long, Rational> terms) {
        if (order < 1) throw Error("Internal", "order must be positive");
        if (order > kMaxOrder) throw OverflowError("cyclotomic order too large");
        Cyclotomic out;
        out.order_ = order;
        out.c_ = std::move(terms);
        out.reduce();
        return out;
    }

    long long order() const { return order_; }
    const std::map<long long, Rational>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }

    bool is_rational() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
    }

    Rational rational_value() const {
        if (c_.empty()) return Rational(0);
        if (!is_rational()) throw Error("Internal", "value is not rational: " + str());
        return c_.begin()->second;
    }

    /// Embedding into Q(zeta_target); requires order | target.
    Cyclotomic embedded(long long target) const {
        if (target % order_ != 0) throw Error("Internal", "embedding needs order | target");
        if (target == order_) return *this;
        const long long scale = target / order_;
        std::map<long long, Rational> terms;
        for (const auto& [k, q] : c_) terms[k * scale] = q;
        return from_terms(target, std::move(terms));
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conjugate() const {
        std::map<long long, Rational> terms;
        for (const auto& [k, q] : c_) {
            long long j = (order_ - k) % order_;
            terms[j] += q;
        }
        return from_terms(order_, std::move(terms));
    }

    Cyclotomic operator-() const {
        Cyclotomic out(*this);
        for (auto& [k, q] : out.c_) q = -q;
        return out;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        long long target = checked_lcm(a.order_, b.order_, kMaxOrder);
        Cyclotomic ea = a.embedded(target), eb = b.embedded(target);
        std::map<long long, Rational> terms = ea.c_;
        for (const auto& [k, q] : eb.c_) {
            Rational& slot = terms[k];
            slot += q;
            if (slot == 0) terms.erase(k);
        }
        Cyclotomic out;
        out.order_ = target;
        out.c_ = std::move(terms);  // canonical exponents stay canonical under addition
        return out;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        long long target = checked_lcm(a.order_, b.order_, kMaxOrder);
        Cyclotomic ea = a.embedded(target), eb = b.embedded(target);
        std::map<long long, Rational> terms;
        for (const auto& [k1, q1] : ea.c_)
            for (const auto& [k2, q2] : eb.c_) {
                long long k = (k1 + k2) % target;
                Rational& slot = terms[k];
                slot += q1 * q2;
                if (slot == 0) terms.erase(k);
            }
        return from_terms(target, std::move(terms));
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        long long target = checked_lcm(a.order_, b.order_, kMaxOrder);
        return a.embedded(target).c_ == b.embedded(target).c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Exact multiplicative inverse. Monomials and differences of two
    /// monomials have closed forms; the general case runs the extended
    /// Euclidean algorithm against the cyclotomic polynomial.
    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
        if (c_.size() == 1) {
            const auto& [k, q] = *c_.begin();
            return Cyclotomic(Rational(1) / q) * root_of_unity(order_, order_ - k);
        }
        if (c_.size() == 2) {
            auto it = c_.begin();
            const auto [k1, q1] = *it;
            ++it;
            const auto [k2, q2] = *it;
            if (q2 == -q1) {
                // q1 zeta^{k1} (1 - zeta^{k2-k1})
                long long c = k2 - k1;  // k2 > k1, both < phi(order) < order
                long long m = order_ / std::gcd(order_, c);
                std::map<long long, Rational> inv_binom;
                for (long long j = 1; j < m; ++j)
                    inv_binom[(c * j) % order_] += Rational(-j, m);
                return Cyclotomic(Rational(1) / q1) * root_of_unity(order_, order_ - k1) *
                       from_terms(order_, std::move(inv_binom));
            }
        }
        return general_inverse();
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    std::complex<double> to_complex() const {
        std::complex<double> acc(0.0, 0.0);
        const double step = 2.0 * M_PI / static_cast<double>(order_);
        for (const auto& [k, q] : c_)
            acc += to_double(q) * std::polar(1.0, step * static_cast<double>(k));
        return acc;
    }

    /// Human-readable form, e.g. "1/2 - 1/2*z8^2". "zN" is a primitive N-th
    /// root of unity.
    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, q] : c_) {
            Rational mag = q < 0 ? Rational(-q) : q;
            if (first) {
                if (q < 0) os << "-";
                first = false;
            } else {
                os << (q < 0 ? " - " : " + ");
            }
            if (k == 0) {
                os << mag;
            } else {
                if (mag != 1) os << mag << "*";
                os << "z" << order_;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    long long order_;
    std::map<long long, Rational> c_;

    // Reduce exponents mod order, then take the remainder modulo the
    // cyclotomic polynomial so exponents end below phi(order).
    void reduce() {
        const long long n = order_;
        const auto& phi_poly = detail::cyclotomic_polynomial(n);
        const long long deg = static_cast<long long>(phi_poly.size()) - 1;

        std::map<long long, Rational> folded;
        bool needs_poly_reduction = false;
        for (auto& [k, q] : c_) {
            if (q == 0) continue;
            long long e = k % n;
            if (e < 0) e += n;
            if (e >= deg) needs_poly_reduction = true;
            Rational& slot = folded[e];
            slot += q;
            if (slot == 0) folded.erase(e);
        }
        if (!needs_poly_reduction) {
            c_ = std::move(folded);
            return;
        }
        std::vector<Rational> dense(static_cast<std::size_t>(n), Rational(0));
        for (const auto& [k, q] : folded) dense[static_cast<std::size_t>(k)] = q;
        for (long long k = n - 1; k >= deg; --k) {
            if (dense[static_cast<std::size_t>(k)] == 0) continue;
            Rational q = dense[static_cast<std::size_t>(k)];
            dense[static_cast<std::size_t>(k)] = 0;
            for (long long j = 0; j < deg; ++j)
                dense[static_cast<std::size_t>(k - deg + j)] -= q * Rational(phi_poly[static_cast<std::size_t>(j)]);
        }
        c_.clear();
        for (long long k = 0; k < deg; ++k)
            if (dense[static_cast<std::size_t>(k)] != 0) c_[k] = dense[static_cast<std::size_t>(k)];
    }

    // Extended Euclid in Q[x] modulo the cyclotomic polynomial. The modulus
    // is irreducible over Q, so the gcd with any nonzero reduced element is a
    // nonzero constant.
    Cyclotomic general_inverse() const {
        using Poly = std::vector<Rational>;
        auto trim = [](Poly& p) {
            while (!p.empty() && p.back() == 0) p.pop_back();
        };
        auto divmod = [&](const Poly& a, const Poly& b) {
            Poly rem = a, quot(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
            const Rational lead = b.back();
            while (rem.size() >= b.size()) {
                Rational c = rem.back() / lead;
                std::size_t shift = rem.size() - b.size();
                quot[shift] = c;
                for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
                trim(rem);
                if (rem.empty()) break;
            }
            return std::pair<Poly, Poly>(std::move(quot), std::move(rem));
        };

        const auto& phi_int = detail::cyclotomic_polynomial(order_);
        Poly r0(phi_int.size());
        for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
        Poly r1(static_cast<std::size_t>(c_.rbegin()->first) + 1, Rational(0));
        for (const auto& [k, q] : c_) r1[static_cast<std::size_t>(k)] = q;
        Poly t0 = {}, t1 = {Rational(1)};

        while (!r1.empty() && r1.size() > 1) {
            auto [q, rem] = divmod(r0, r1);
            // t_next = t0 - q * t1
            Poly qt;
            if (!t1.empty() && !q.empty()) {
                qt.assign(q.size() + t1.size() - 1, Rational(0));
                for (std::size_t i = 0; i < q.size(); ++i)
                    if (q[i] != 0)
                        for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
            }
            Poly tn(std::max(t0.size(), qt.size()), Rational(0));
            for (std::size_t i = 0; i < t0.size(); ++i) tn[i] += t0[i];
            for (std::size_t i = 0; i < qt.size(); ++i) tn[i] -= qt[i];
            trim(tn);
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(tn);
        }
        if (r1.empty())
            throw DivisionByZero("element shares a factor with the modulus");  // cannot happen for canonical input
        const Rational unit = r1[0];
        std::map<long long, Rational> terms;
        for (std::size_t i = 0; i < t1.size(); ++i)
            if (t1[i] != 0) terms[static_cast<long long>(i)] = t1[i] / unit;
        return from_terms(order_, std::move(terms));
    }
};

inline Cyclotomic inv(const Cyclotomic& a) { return a.inverse(); }

}  // namespace charid
