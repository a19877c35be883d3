#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "charid/root_system.hpp"
#include "charid/weyl_group.hpp"

using namespace charid;

namespace {

Weight w(std::vector<long long> coords) {
    std::vector<Rational> fc(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) fc[i] = Rational(coords[i]);
    return Weight(std::move(fc));
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("root counts for the classical types") {
    CHECK(RootSystem::from_spec("A1").root_count() == 2);
    CHECK(RootSystem::from_spec("A2").root_count() == 6);
    CHECK(RootSystem::from_spec("A2").positive_count() == 3);
    CHECK(RootSystem::from_spec("B2").root_count() == 8);
    CHECK(RootSystem::from_spec("C3").root_count() == 18);
    CHECK(RootSystem::from_spec("D4").root_count() == 24);
    // closed-form counts: A_r r(r+1), B/C_r 2r^2, D_r 2r(r-1)
    for (int r = 1; r <= 4; ++r) CHECK(RootSystem::from_spec("A" + std::to_string(r)).root_count() == r * (r + 1));
    for (int r = 2; r <= 4; ++r) {
        CHECK(RootSystem::from_spec("B" + std::to_string(r)).root_count() == 2 * r * r);
        CHECK(RootSystem::from_spec("C" + std::to_string(r)).root_count() == 2 * r * r);
        CHECK(RootSystem::from_spec("D" + std::to_string(r)).root_count() == 2 * r * (r - 1));
    }
}

TEST_CASE("D2 decomposes as A1 x A1") {
    RootSystem d2 = RootSystem::from_spec("D2");
    RootSystem a1a1 = RootSystem::from_spec("A1xA1");
    CHECK(d2.root_count() == 4);
    CHECK(d2.cartan() == a1a1.cartan());
    // no root is the sum of two roots: exhaustive over pairs
    for (int i = 0; i < d2.root_count(); ++i)
        for (int j = 0; j < d2.root_count(); ++j) CHECK(d2.root_sum(i, j) == -1);
}

TEST_CASE("reflection closure is exhaustive up to rank 4") {
    std::vector<std::string> types;
    for (int r = 1; r <= 4; ++r) types.push_back("A" + std::to_string(r));
    for (int r = 2; r <= 4; ++r) {
        types.push_back("B" + std::to_string(r));
        types.push_back("C" + std::to_string(r));
        types.push_back("D" + std::to_string(r));
    }
    types.push_back("A1xA2");
    for (const auto& t : types) {
        RootSystem R = RootSystem::from_spec(t);
        for (int i = 0; i < R.rank(); ++i) {
            auto perm = R.reflection_permutation(R.simple_root_index(i));
            std::set<int> image(perm.begin(), perm.end());
            REQUIRE(static_cast<int>(image.size()) == R.root_count());
        }
        // every root pairs to 2 with its own coroot, and -root exists
        for (int i = 0; i < R.root_count(); ++i) {
            REQUIRE(R.pairing(R.weight_of_root(i), i) == 2);
            REQUIRE(R.root_coords(R.negative_of(i)) != R.root_coords(i));
        }
    }
}

TEST_CASE("rho pairs to one with every simple coroot") {
    for (const auto& t : {"A1", "A2", "B2", "C3", "D4", "A1xA1"}) {
        RootSystem R = RootSystem::from_spec(t);
        Weight rho = R.rho();
        for (int i = 0; i < R.rank(); ++i) CHECK(R.pairing(rho, R.simple_root_index(i)) == 1);
        // rho equals half the sum of the positive roots
        Weight half_sum = R.zero_weight();
        for (int i = 0; i < R.positive_count(); ++i) half_sum = half_sum + R.weight_of_root(i);
        half_sum = Rational(1, 2) * half_sum;
        CHECK(half_sum == rho);
    }
}

TEST_CASE("invalid Cartan data is rejected") {
    CHECK_THROWS_AS(RootSystem::from_spec("E8"), InvalidCartanData);
    CHECK_THROWS_AS(RootSystem::from_spec("A0"), InvalidCartanData);
    CHECK_THROWS_AS(RootSystem::from_spec("B1"), InvalidCartanData);
    CHECK_THROWS_AS(RootSystem::from_spec("A1x"), InvalidCartanData);
    // not symmetrizable-positive-definite: affine A1
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -2}, {-2, 2}}), InvalidCartanData);
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -1}, {0, 2}}), InvalidCartanData);
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, 1}, {1, 2}}), InvalidCartanData);
    CHECK_THROWS_AS(RootSystem::from_cartan({{1, 0}, {0, 1}}), InvalidCartanData);
    // rank bound is configuration
    CHECK_THROWS_AS(RootSystem::from_spec("A7"), InvalidCartanData);
    RootSystem::Options wide;
    wide.max_rank = 7;
    CHECK(RootSystem::from_spec("A7", wide).rank() == 7);
    // explicit Cartan matrix input matches the named type
    RootSystem b2 = RootSystem::from_cartan({{2, -1}, {-2, 2}});
    CHECK(b2.root_count() == 8);
    CHECK(RootSystem::from_spec("cartan:2,-1;-2,2").root_count() == 8);
}

TEST_CASE("Weyl group orders match the type formulas up to rank 4") {
    auto order_of = [](const std::string& t) {
        auto lie = make_lie(t);
        return static_cast<long long>(lie.W->order());
    };
    for (int r = 1; r <= 4; ++r) CHECK(order_of("A" + std::to_string(r)) == factorial(r + 1));
    for (int r = 2; r <= 4; ++r) {
        CHECK(order_of("B" + std::to_string(r)) == (1LL << r) * factorial(r));
        CHECK(order_of("C" + std::to_string(r)) == (1LL << r) * factorial(r));
        CHECK(order_of("D" + std::to_string(r)) == (1LL << (r - 1)) * factorial(r));
    }
    CHECK(order_of("A1") == 2);
    CHECK(order_of("A2") == 6);
    CHECK(order_of("B2") == 8);
    CHECK(order_of("A1xA1") == 4);
}

TEST_CASE("weyl action on weights") {
    auto lie = make_lie("A2");
    const WeylGroup& W = *lie.W;
    Weight mu = w({1, 1});
    CHECK(W.act(W.identity(), mu) == mu);
    // s1(omega1 + omega2) = -omega1 + 2 omega2
    CHECK(W.act(W.simple(0), mu) == w({-1, 2}));

    auto a1 = make_lie("A1");
    CHECK(a1.W->act(a1.W->simple(0), w({1})) == w({-1}));
}

TEST_CASE("sign is a homomorphism and the longest element flips positives") {
    for (const auto& t : {"A2", "B2", "A3"}) {
        auto lie = make_lie(t);
        const WeylGroup& W = *lie.W;
        std::mt19937_64 rng(7);
        for (int iter = 0; iter < 60; ++iter) {
            int a = static_cast<int>(rng() % static_cast<unsigned>(W.order()));
            int b = static_cast<int>(rng() % static_cast<unsigned>(W.order()));
            REQUIRE(W.sign(W.compose(a, b)) == W.sign(a) * W.sign(b));
        }
        int w0 = W.longest();
        for (int i = 0; i < lie.R->positive_count(); ++i)
            REQUIRE_FALSE(lie.R->is_positive_root(W.act_root(w0, i)));
        // composition against inverse gives the identity
        for (int a = 0; a < W.order(); ++a) REQUIRE(W.compose(a, W.inverse(a)) == W.identity());
    }
}

TEST_CASE("coset representatives") {
    auto lie = make_lie("A2");
    const WeylGroup& W = *lie.W;

    std::vector<int> all(W.order());
    for (int i = 0; i < W.order(); ++i) all[i] = i;
    CHECK(W.coset_representatives(all) == std::vector<int>{0});

    auto a1 = make_lie("A1");
    std::vector<int> trivial = {a1.W->identity()};
    CHECK(a1.W->coset_representatives(trivial).size() == 2);

    // W_K = {e, s1} inside W(A2): three representatives of minimal length
    std::vector<int> wk = {W.identity(), W.simple(0)};
    auto reps = W.coset_representatives(wk);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == W.identity());
    // representatives partition the group: all products rep*k distinct
    std::set<int> covered;
    for (int rep : reps)
        for (int k : wk) REQUIRE(covered.insert(W.compose(rep, k)).second);
    CHECK(static_cast<int>(covered.size()) == W.order());
    // each representative is shortlex-minimal in its coset
    for (int rep : reps)
        for (int k : wk) REQUIRE(W.length(rep) <= W.length(W.compose(rep, k)));

    CHECK_THROWS_AS(W.coset_representatives({W.simple(0)}), NotASubgroup);  // misses identity
    CHECK_THROWS_AS(W.coset_representatives({0, W.simple(0), W.simple(1)}), NotASubgroup);  // not closed
}

TEST_CASE("rho_of_chamber equivariance") {
    for (const auto& t : {"A2", "B2"}) {
        auto lie = make_lie(t);
        const RootSystem& R = *lie.R;
        const WeylGroup& W = *lie.W;
        Weight rho = R.rho();
        Weight nu = w({2, 1});
        CHECK(R.rho_of_chamber(nu) == rho);    // dominant chamber
        CHECK(R.rho_of_chamber(-nu) == -rho);  // opposite chamber
        for (int u = 0; u < W.order(); ++u) REQUIRE(R.rho_of_chamber(W.act(u, nu)) == W.act(u, rho));
        CHECK_THROWS_AS(R.rho_of_chamber(R.zero_weight()), SingularWeight);
    }
    // A2: nu = s1 lambda for dominant lambda gives s1 rho
    auto lie = make_lie("A2");
    Weight lambda = w({3, 1});
    CHECK(lie.R->rho_of_chamber(lie.W->act(lie.W->simple(0), lambda)) ==
          lie.W->act(lie.W->simple(0), lie.R->rho()));
}

TEST_CASE("weyl action matrices preserve pairing with permuted roots") {
    auto lie = make_lie("B2");
    const RootSystem& R = *lie.R;
    const WeylGroup& W = *lie.W;
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 40; ++iter) {
        int u = static_cast<int>(rng() % static_cast<unsigned>(W.order()));
        Weight mu = w({static_cast<long long>(rng() % 7) - 3, static_cast<long long>(rng() % 7) - 3});
        for (int i = 0; i < R.root_count(); ++i)
            REQUIRE(R.pairing(W.act(u, mu), W.act_root(u, i)) == R.pairing(mu, i));
    }
}
