#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "charid/catalog.hpp"
#include "charid/packet.hpp"
#include "charid/plot.hpp"
#include "charid/report.hpp"

using namespace charid;

namespace {

Weight w(std::vector<long long> coords) {
    std::vector<Rational> fc(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) fc[i] = Rational(coords[i]);
    return Weight(std::move(fc));
}

}  // namespace

TEST_CASE("rank one packets are the two parameter signs") {
    InnerFormPair pair = find_pair("sl2R/su2");
    for (long long n = 1; n <= 4; ++n) {
        LPacket packet = build_packet(pair, Rational(n) * pair.lie.R->rho());
        REQUIRE(packet.size() == 2);
        std::set<Weight> members;
        for (const auto& m : packet.members) members.insert(m.lambda);
        CHECK(members.count(Rational(n) * pair.lie.R->rho()) == 1);
        CHECK(members.count(Rational(-n) * pair.lie.R->rho()) == 1);
    }
}

TEST_CASE("packet structure across the catalog") {
    for (const auto& p : catalog()) {
        INFO(p.name);
        LPacket packet = build_packet(p, p.lie.R->rho());
        REQUIRE(packet.size() == p.packet_size());
        REQUIRE(packet.size() * static_cast<int>(p.wk.size()) == p.lie.W->order());
        // no two members are W_K-equivalent; all share the W_G-orbit of lambda
        for (int i = 0; i < packet.size(); ++i) {
            bool in_orbit = false;
            for (int u = 0; u < p.lie.W->order(); ++u)
                in_orbit = in_orbit || p.lie.W->act(u, packet.members[i].lambda) == packet.lambda_dominant;
            REQUIRE(in_orbit);
            for (int j = i + 1; j < packet.size(); ++j)
                REQUIRE_FALSE(
                    same_wk_orbit(*p.lie.W, p.wk, packet.members[i].lambda, packet.members[j].lambda));
        }
    }

    // compact member: singleton packet
    LieData lie = make_lie("A2");
    std::vector<int> all(lie.R->root_count());
    for (int i = 0; i < lie.R->root_count(); ++i) all[i] = i;
    InnerFormPair self = make_pair(lie, "su3/su3", "su3", "su3", all);
    CHECK(build_packet(self, lie.R->rho()).size() == 1);

    InnerFormPair su21 = find_pair("su21/su3");
    CHECK(build_packet(su21, w({1, 2})).size() == 3);

    CHECK_THROWS_AS(build_packet(su21, w({0, 1})), SingularWeight);
    CHECK_THROWS_AS(build_packet(su21, Weight(std::vector<Rational>{Rational(1, 2), Rational(1)})),
                    NonIntegralWeight);
}

TEST_CASE("the identity holds at the quarter point with the paper values") {
    InnerFormPair pair = find_pair("sl2R/su2");
    Weight l3 = Rational(3) * pair.lie.R->rho();
    TorusPoint quarter = TorusPoint::parse("1/4");
    PacketReport report = verify_identity(pair, l3, quarter, Route::both);
    CHECK(report.equal);
    CHECK(report.lhs == Cyclotomic(Rational(-1)));
    CHECK(report.rhs == Cyclotomic(Rational(-1)));
    CHECK(report.packet_size == 2);
    CHECK(report.q == 1);
}

TEST_CASE("identity verification across catalog pairs and routes") {
    for (const auto& name : {"sl2R/su2", "su21/su3", "so22/so4"}) {
        InnerFormPair pair = find_pair(name);
        std::vector<Weight> lambdas = {pair.lie.R->rho(), Rational(2) * pair.lie.R->rho()};
        for (const auto& g : sample_regular_points(*pair.lie.R, 4, 8, 83)) {
            for (const auto& lambda : lambdas) {
                PacketReport both = verify_identity(pair, lambda, g, Route::both);
                REQUIRE(both.equal);
                PacketReport chars = verify_identity(pair, lambda, g, Route::characters);
                PacketReport fixed = verify_identity(pair, lambda, g, Route::fixed_point);
                REQUIRE(chars.lhs == both.lhs);
                REQUIRE(fixed.lhs == both.lhs);
                REQUIRE(chars.rhs == both.rhs);
                REQUIRE(fixed.rhs == both.rhs);
            }
        }
    }
}

TEST_CASE("lhs does not depend on the orbit representative") {
    InnerFormPair pair = find_pair("su21/su3");
    Weight lambda = w({2, 1});
    TorusPoint g = sample_regular_points(*pair.lie.R, 1, 8, 89).front();
    PacketReport base = verify_identity(pair, lambda, g, Route::characters);
    for (int u = 0; u < pair.lie.W->order(); ++u) {
        PacketReport moved = verify_identity(pair, pair.lie.W->act(u, lambda), g, Route::characters);
        REQUIRE(moved.lhs == base.lhs);
        REQUIRE(moved.rhs == base.rhs);
    }
}

TEST_CASE("verification errors") {
    InnerFormPair pair = find_pair("sl2R/su2");
    CHECK_THROWS_AS(verify_identity(pair, pair.lie.R->rho(), TorusPoint::parse("1/2"), Route::both),
                    SingularPoint);
    CHECK_THROWS_AS(verify_identity(pair, pair.lie.R->zero_weight(), TorusPoint::parse("1/4"), Route::both),
                    SingularWeight);
}

TEST_CASE("sweeps are deterministic and aggregate errors per point") {
    InnerFormPair pair = find_pair("sl2R/su2");
    SweepConfig cfg;
    cfg.lambdas = {pair.lie.R->rho(), Rational(2) * pair.lie.R->rho(), Rational(3) * pair.lie.R->rho()};
    cfg.point_count = 8;
    cfg.denominator_bound = 16;
    cfg.seed = 99;
    cfg.route = Route::both;

    SweepSummary s1, s2;
    auto r1 = sweep(pair, cfg, &s1);
    cfg.jobs = 4;
    auto r2 = sweep(pair, cfg, &s2);
    REQUIRE(r1.size() == 24);
    CHECK(s1.total == 24);
    CHECK(s1.equal == 24);
    CHECK(s1.unequal == 0);
    CHECK(s1.errors == 0);
    // parallel run produces the identical report stream
    REQUIRE(r2.size() == r1.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        REQUIRE(r1[i].lambda == r2[i].lambda);
        REQUIRE(r1[i].point == r2[i].point);
        REQUIRE(r1[i].lhs == r2[i].lhs);
        REQUIRE(report_to_json(r1[i]).dump() == report_to_json(r2[i]).dump());
    }

    // empty lambda range: empty report list
    SweepConfig empty = cfg;
    empty.lambdas.clear();
    SweepSummary se;
    CHECK(sweep(pair, empty, &se).empty());
    CHECK(se.total == 0);

    // a singular lambda is recorded as a row error, not an abort
    SweepConfig witherr = cfg;
    witherr.lambdas = {pair.lie.R->rho(), pair.lie.R->zero_weight()};
    SweepSummary swe;
    auto rows = sweep(pair, witherr, &swe);
    CHECK(swe.errors == 8);
    CHECK(swe.equal == 8);
    bool saw_error = false;
    for (const auto& r : rows) saw_error = saw_error || (r.error && r.error->find("SingularWeight") == 0);
    CHECK(saw_error);
}

TEST_CASE("lambda box enumerates the expected parameters") {
    auto lie = make_lie("A2");
    auto box = lambda_box(*lie.R, 3);
    REQUIRE(box.size() == 16);
    for (const auto& lambda : box) {
        REQUIRE(lie.R->is_dominant(lambda));
        REQUIRE(lie.R->is_regular(lambda));
        REQUIRE(lie.R->is_integral(lambda - lie.R->rho()));
    }
}

TEST_CASE("report serialization carries the exact payload") {
    InnerFormPair pair = find_pair("sl2R/su2");
    PacketReport report =
        verify_identity(pair, Rational(3) * pair.lie.R->rho(), TorusPoint::parse("1/4"), Route::both);
    json j = report_to_json(report);
    CHECK(j["pair"] == "sl2R/su2");
    CHECK(j["equal"] == true);
    CHECK(j["route"] == "both");
    CHECK(j["lhs"]["terms"].size() == 1);
    CHECK(j["lhs"]["terms"][0][0] == 0);
    CHECK(j["lhs"]["terms"][0][1] == "-1");
    CHECK(j["lhs"]["terms"][0][2] == "1");
    CHECK(j.contains("order"));
    // csv row has the documented shape
    std::string row = report_to_csv_row(report);
    CHECK(row.find("\"sl2R/su2\"") == 0);
    CHECK(report_csv_header().rfind("pair,", 0) == 0);
}

TEST_CASE("plot rows shadow the exact identity") {
    InnerFormPair pair = find_pair("sl2R/su2");
    Weight l3 = Rational(3) * pair.lie.R->rho();

    // the quarter-turn point in isolation: lhs = rhs = -1.0
    auto rows = emit_plot_data(pair, l3, {M_PI / 2});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].valid);
    CHECK(std::abs(rows[0].lhs - std::complex<double>(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(rows[0].rhs - std::complex<double>(-1.0, 0.0)) < 1e-12);

    // an empty grid produces an empty stream
    CHECK(emit_plot_data(pair, l3, {}).empty());

    // grid points at singular t come back as NaN markers, not failures
    auto singular_rows = emit_plot_data(pair, l3, {0.0, M_PI / 2});
    REQUIRE(singular_rows.size() == 2);
    CHECK_FALSE(singular_rows[0].valid);
    CHECK(std::isnan(singular_rows[0].abs_diff));
    CHECK(singular_rows[1].valid);

    // the generated grid respects the exclusion margin
    auto grid = plot_grid(pair, 0.0, M_PI, 200, 1e-2);
    for (double t : grid) {
        CHECK(t > 1e-2);
        CHECK(t < M_PI - 1e-2);
    }

    // higher-rank pairs are rejected for the one-parameter sweep
    CHECK_THROWS_AS(plot_grid(find_pair("su21/su3"), 0.0, M_PI, 10, 1e-3), ConfigError);
}

TEST_CASE("identity holds on the rank-three and D4 pairs") {
    // small sampled sets; the exhaustive grids live in the acceptance suite
    for (const auto& name : {"su31/su4", "su22/su4"}) {
        InnerFormPair pair = find_pair(name);
        std::vector<Weight> lambdas = {pair.lie.R->rho()};
        Weight bumped = pair.lie.R->rho();
        bumped.fc[1] += 2;
        lambdas.push_back(bumped);
        for (const auto& g : sample_regular_points(*pair.lie.R, 2, 6, 101)) {
            for (const auto& lambda : lambdas) {
                PacketReport rep = verify_identity(pair, lambda, g, Route::both);
                REQUIRE(rep.equal);
                REQUIRE(rep.packet_size == pair.packet_size());
            }
        }
    }
    for (const auto& name : {"so26/so8", "so44/so8"}) {
        InnerFormPair pair = find_pair(name);
        Weight lambda = pair.lie.R->rho();
        for (const auto& g : sample_regular_points(*pair.lie.R, 2, 5, 103)) {
            PacketReport rep = verify_identity(pair, lambda, g, Route::both);
            REQUIRE(rep.equal);
        }
    }
}

TEST_CASE("identity holds for every parity grading of small types") {
    // Valid compact-root subsets are exactly the kernels of parity maps on
    // simple-root coordinates, so enumerate them all and run both routes.
    for (const auto& type : {"A2", "B2", "C2", "D2", "A3"}) {
        LieData lie = make_lie(type);
        const RootSystem& R = *lie.R;
        const int r = R.rank();
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> compact;
            for (int i = 0; i < R.root_count(); ++i) {
                long long parity = 0;
                for (int j = 0; j < r; ++j)
                    if (mask & (1 << j)) parity += R.root_coords(i)[j];
                if (parity % 2 == 0) compact.push_back(i);
            }
            INFO(std::string(type) + " mask=" + std::to_string(mask));
            InnerFormPair pair =
                make_pair(lie, std::string(type) + "#" + std::to_string(mask), "nc", "c", compact);
            REQUIRE(validate_real_form(pair.noncompact).empty());
            std::vector<Weight> lambdas = {R.rho()};
            Weight bumped = R.rho();
            bumped.fc[0] += 1;
            lambdas.push_back(bumped);
            for (const auto& g : sample_regular_points(R, 2, 6, 107)) {
                for (const auto& lambda : lambdas) {
                    PacketReport rep = verify_identity(pair, lambda, g, Route::both);
                    REQUIRE(rep.equal);
                }
            }
        }
    }
}
