#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "charid/weil.hpp"

using namespace charid;

namespace {

WeilElement z(const Rational& r, const Rational& turns) { return WeilElement::complex_number(r, turns); }

WeilElement random_element(std::mt19937_64& rng) {
    Rational mod(1 + static_cast<long long>(rng() % 5), 1 + static_cast<long long>(rng() % 3));
    Rational ang(static_cast<long long>(rng() % 24), 1 + static_cast<long long>(rng() % 12));
    WeilElement e = WeilElement::complex_number(mod, ang);
    if (rng() % 2) e = weil_multiply(WeilElement::j(), e);
    return e;
}

}  // namespace

TEST_CASE("weil group relations") {
    // j^2 = -1
    WeilElement j2 = weil_multiply(WeilElement::j(), WeilElement::j());
    CHECK(j2 == z(1, Rational(1, 2)));

    // j z = conj(z) j: both sides in normal form j * conj(z)
    WeilElement zz = z(2, Rational(1, 8));
    WeilElement lhs = weil_multiply(WeilElement::j(), zz);
    WeilElement rhs = weil_multiply(zz.conj_z(), WeilElement::j());
    CHECK(lhs == rhs);
    CHECK(lhs.twisted);
    CHECK(lhs.angle == Rational(1, 8));

    // z z^{-1} = 1 and (yz)(yz)^{-1} = 1
    CHECK(weil_multiply(zz, weil_inverse(zz)) == WeilElement::one());
    WeilElement jz = weil_multiply(WeilElement::j(), zz);
    CHECK(weil_multiply(jz, weil_inverse(jz)) == WeilElement::one());
}

TEST_CASE("weil multiplication is associative on random triples") {
    std::mt19937_64 rng(0xFEED);
    for (int iter = 0; iter < 200; ++iter) {
        WeilElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
        REQUIRE(weil_multiply(weil_multiply(a, b), c) == weil_multiply(a, weil_multiply(b, c)));
    }
}

TEST_CASE("phi_n displayed values") {
    // phi_1(j) = ([0, -1; 1, 0], sigma)
    ProjectivePair pj = phi_n(1, WeilElement::j());
    CHECK(pj.galois);
    CHECK(pj.m[0][0].is_zero());
    CHECK(pj.m[0][1] == Cyclotomic(Rational(-1)));
    CHECK(pj.m[1][0] == Cyclotomic(Rational(1)));
    CHECK(pj.m[1][1].is_zero());

    // even n flips the corner sign
    CHECK(phi_n(2, WeilElement::j()).m[0][1] == Cyclotomic(Rational(1)));

    // phi_2 on z = e^{2 pi i / 8}: diag(zeta_8^2, zeta_8^{-2})
    ProjectivePair pz = phi_n(2, z(1, Rational(1, 8)));
    CHECK_FALSE(pz.galois);
    CHECK(pz.m[0][0] == Cyclotomic::root_of_unity(8, 2));
    CHECK(pz.m[1][1] == Cyclotomic::root_of_unity(8, 6));
    CHECK(pz.m[0][1].is_zero());

    // modulus enters the diagonal: chi_n(r e^{i theta}) = r e^{i n theta}
    ProjectivePair pr = phi_n(1, z(Rational(3, 2), Rational(1, 4)));
    CHECK(pr.m[0][0] == Cyclotomic(Rational(3, 2)) * Cyclotomic::root_of_unity(4, 1));

    // identity goes to the identity pair
    CHECK(pp_equal(phi_n(5, WeilElement::one()), ProjectivePair::identity()));
}

TEST_CASE("projective equality ignores scalars") {
    ProjectivePair a = phi_n(3, z(2, Rational(1, 6)));
    ProjectivePair b = a;
    Cyclotomic scale = Cyclotomic(Rational(-7, 3)) * Cyclotomic::root_of_unity(12, 5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) b.m[i][j] = b.m[i][j] * scale;
    CHECK(pp_equal(a, b));
    b.galois = !b.galois;
    CHECK_FALSE(pp_equal(a, b));

    // different diagonal ratios are genuinely different points of PGL(2)
    ProjectivePair c = phi_n(1, z(1, Rational(1, 8)));
    ProjectivePair d = phi_n(3, z(1, Rational(1, 8)));
    CHECK_FALSE(pp_equal(c, d));
}

TEST_CASE("relation witnesses map through phi_n") {
    for (int n = 1; n <= 10; ++n) {
        // phi(j)^2 = phi(-1): both scalar modulo the centre
        ProjectivePair jj = pp_multiply(phi_n(n, WeilElement::j()), phi_n(n, WeilElement::j()));
        ProjectivePair minus1 = phi_n(n, z(1, Rational(1, 2)));
        REQUIRE(pp_equal(jj, minus1));
        REQUIRE(pp_equal(jj, ProjectivePair::identity()));

        // phi(j) phi(z) phi(j)^{-1} = phi(conj z)
        WeilElement zz = z(Rational(5, 4), Rational(3, 8));
        ProjectivePair lhs = pp_multiply(
            pp_multiply(phi_n(n, WeilElement::j()), phi_n(n, zz)),
            phi_n(n, weil_inverse(WeilElement::j())));
        REQUIRE(pp_equal(lhs, phi_n(n, zz.conj_z())));
    }
}

TEST_CASE("homomorphism check over the standard sample") {
    auto samples = standard_weil_samples();
    REQUIRE(samples.size() > 100);
    for (int n = 1; n <= 10; ++n) {
        auto res = check_homomorphism(n, samples);
        INFO("n = " << n);
        REQUIRE(res.ok);
    }
    // (1, anything) is a trivial witness
    auto res = check_homomorphism(3, {{WeilElement::one(), z(2, Rational(1, 3))}});
    CHECK(res.ok);
}
