#pragma once

#include <array>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "charid/cyclotomic.hpp"

namespace charid {

/// An element of the real Weil group C^x u j C^x with j^2 = -1 and
/// j z = conj(z) j. Nonzero complex numbers are kept in exact polar form:
/// a positive rational modulus and an angle that is a rational number of
/// full turns.
struct WeilElement {
    bool twisted = false;  // true: j * z, false: z
    Rational modulus = 1;
    Rational angle = 0;  // in [0, 1) turns

    static Rational normalize_angle(Rational a) {
        Integer whole = numer(a) / denom(a);
        a -= Rational(whole);
        if (a < 0) a += 1;
        return a;
    }

    static WeilElement complex_number(const Rational& modulus, const Rational& angle_turns) {
        if (modulus <= 0) throw ConfigError("Weil element modulus must be positive");
        return WeilElement{false, modulus, normalize_angle(angle_turns)};
    }

    static WeilElement j() { return WeilElement{true, Rational(1), Rational(0)}; }

    static WeilElement one() { return complex_number(1, 0); }

    WeilElement conj_z() const { return WeilElement{twisted, modulus, normalize_angle(-angle)}; }

    friend bool operator==(const WeilElement& a, const WeilElement& b) {
        return a.twisted == b.twisted && a.modulus == b.modulus && a.angle == b.angle;
    }

    std::string str() const {
        std::string body = rational_str(modulus) + "*e(" + rational_str(angle) + ")";
        return twisted ? "j*" + body : body;
    }
};

/// Group law in normal form (every element is z or j z):
///   z1 * z2   = z1 z2            z1 * (j z2) = j (conj(z1) z2)
///   (j z1) * z2 = j (z1 z2)      (j z1)(j z2) = -conj(z1) z2.
inline WeilElement weil_multiply(const WeilElement& a, const WeilElement& b) {
    WeilElement out;
    out.modulus = a.modulus * b.modulus;
    if (!a.twisted && !b.twisted) {
        out.twisted = false;
        out.angle = WeilElement::normalize_angle(a.angle + b.angle);
    } else if (a.twisted && !b.twisted) {
        out.twisted = true;
        out.angle = WeilElement::normalize_angle(a.angle + b.angle);
    } else if (!a.twisted && b.twisted) {
        out.twisted = true;
        out.angle = WeilElement::normalize_angle(b.angle - a.angle);
    } else {
        out.twisted = false;
        out.angle = WeilElement::normalize_angle(b.angle - a.angle + Rational(1, 2));
    }
    return out;
}

inline WeilElement weil_inverse(const WeilElement& a) {
    if (!a.twisted) return WeilElement{false, Rational(1) / a.modulus, WeilElement::normalize_angle(-a.angle)};
    // (j z)^{-1} = j * (-conj(z)^{-1})
    return WeilElement{true, Rational(1) / a.modulus, WeilElement::normalize_angle(a.angle + Rational(1, 2))};
}

/// r e^{2 pi i a} as an exact cyclotomic number.
inline Cyclotomic cyc_from_polar(const Rational& modulus, const Rational& angle_turns) {
    Rational a = WeilElement::normalize_angle(angle_turns);
    return Cyclotomic(modulus) * Cyclotomic::root_of_unity(to_ll(denom(a)), to_ll(numer(a)));
}

/// A 2x2 matrix over the cyclotomics modulo nonzero scalars, together with a
/// Galois component. The Galois factor acts trivially on the matrices (the
/// rank-one split inner class has no outer diagram action), so the matrix
/// parts multiply plainly and the components multiply in Z/2. Conjugation by
/// the antidiagonal image of j is what swaps the diagonal characters.
struct ProjectivePair {
    std::array<std::array<Cyclotomic, 2>, 2> m;
    bool galois = false;  // true = the nontrivial element sigma

    static ProjectivePair identity() {
        ProjectivePair p;
        p.m[0][0] = Cyclotomic(Rational(1));
        p.m[1][1] = Cyclotomic(Rational(1));
        return p;
    }
};

inline ProjectivePair pp_multiply(const ProjectivePair& a, const ProjectivePair& b) {
    ProjectivePair out;
    out.galois = a.galois != b.galois;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Cyclotomic acc;
            for (int k = 0; k < 2; ++k) acc += a.m[i][k] * b.m[k][j];
            out.m[i][j] = std::move(acc);
        }
    return out;
}

/// Equality in PGL(2): the matrices must agree up to one nonzero scalar.
inline bool pp_equal(const ProjectivePair& a, const ProjectivePair& b) {
    if (a.galois != b.galois) return false;
    int pi = -1, pj = -1;
    for (int i = 0; i < 2 && pi < 0; ++i)
        for (int j = 0; j < 2 && pi < 0; ++j)
            if (!a.m[i][j].is_zero()) {
                pi = i;
                pj = j;
            }
    if (pi < 0) return false;  // zero matrix is not a group element
    if (b.m[pi][pj].is_zero()) return false;
    Cyclotomic scale = b.m[pi][pj] / a.m[pi][pj];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (b.m[i][j] != scale * a.m[i][j]) return false;
    return true;
}

/// The parameter family phi_n into PGL(2, C) x Gal(C/R):
///   phi_n(j) = ([0, (-1)^n; 1, 0], sigma),
///   phi_n(z) = (diag(chi_n(z), chi_{-n}(z)), e),  chi_n(r e^{i theta}) = r e^{i n theta}.
inline ProjectivePair phi_n(int n, const WeilElement& x) {
    auto chi = [&](int m) { return cyc_from_polar(x.modulus, Rational(m) * x.angle); };
    ProjectivePair plain;
    plain.m[0][0] = chi(n);
    plain.m[1][1] = chi(-n);
    if (!x.twisted) return plain;
    ProjectivePair pj;
    pj.galois = true;
    pj.m[0][1] = Cyclotomic(Rational(n % 2 == 0 ? 1 : -1));
    pj.m[1][0] = Cyclotomic(Rational(1));
    return pp_multiply(pj, plain);
}

struct HomomorphismCheck {
    bool ok = true;
    std::size_t failing_index = 0;
};

/// phi_n(a b) == phi_n(a) phi_n(b) on every sampled pair, projectively exact.
inline HomomorphismCheck check_homomorphism(int n,
                                            const std::vector<std::pair<WeilElement, WeilElement>>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& [a, b] = samples[i];
        if (!pp_equal(phi_n(n, weil_multiply(a, b)), pp_multiply(phi_n(n, a), phi_n(n, b))))
            return HomomorphismCheck{false, i};
    }
    return HomomorphismCheck{true, 0};
}

/// A small exhaustive sample: the relation witnesses (j, j) and (j, z) plus
/// all pairs from a fixed list of plain and twisted elements.
inline std::vector<std::pair<WeilElement, WeilElement>> standard_weil_samples() {
    std::vector<WeilElement> base;
    const Rational moduli[] = {Rational(1), Rational(2), Rational(1, 3)};
    const Rational angles[] = {Rational(0), Rational(1, 8), Rational(1, 3), Rational(1, 2), Rational(5, 8)};
    for (const auto& r : moduli)
        for (const auto& a : angles) {
            base.push_back(WeilElement::complex_number(r, a));
            base.push_back(weil_multiply(WeilElement::j(), WeilElement::complex_number(r, a)));
        }
    std::vector<std::pair<WeilElement, WeilElement>> out;
    out.emplace_back(WeilElement::j(), WeilElement::j());
    out.emplace_back(WeilElement::j(), WeilElement::complex_number(2, Rational(1, 8)));
    for (const auto& a : base)
        for (const auto& b : base) out.emplace_back(a, b);
    return out;
}

}  // namespace charid
