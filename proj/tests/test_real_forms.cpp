#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "charid/catalog.hpp"
#include "charid/real_form.hpp"

using namespace charid;

namespace {

std::vector<int> all_roots(const RootSystem& R) {
    std::vector<int> out(R.root_count());
    for (int i = 0; i < R.root_count(); ++i) out[i] = i;
    return out;
}

// index of the root with the given simple-root coordinates
int root_at(const RootSystem& R, std::vector<long long> coords) {
    int idx = R.find_root(coords);
    REQUIRE(idx >= 0);
    return idx;
}

}  // namespace

TEST_CASE("rank one forms validate") {
    auto lie = make_lie("A1");
    RealFormSpec compact{lie, "su2", all_roots(*lie.R)};
    CHECK(validate_real_form(compact).empty());

    RealFormSpec split{lie, "sl2R", {}};
    CHECK(validate_real_form(split).empty());

    CHECK(q_and_dim(split).q == 1);
    CHECK(q_and_dim(split).dim_gk == 2);
    CHECK(q_and_dim(compact).q == 0);
    CHECK(q_and_dim(compact).dim_gk == 0);

    CHECK(weyl_subgroup_K(split) == std::vector<int>{lie.W->identity()});
    CHECK(static_cast<int>(weyl_subgroup_K(compact).size()) == lie.W->order());
}

TEST_CASE("grading closure rejects the two-simple-pair subset of A2") {
    auto lie = make_lie("A2");
    const RootSystem& R = *lie.R;
    int a1 = root_at(R, {1, 0});
    int a2 = root_at(R, {0, 1});
    RealFormSpec bad{lie, "bad", {a1, a2, R.negative_of(a1), R.negative_of(a2)}};
    std::sort(bad.compact_roots.begin(), bad.compact_roots.end());
    auto violations = validate_real_form(bad);
    REQUIRE_FALSE(violations.empty());
    // the sum alpha1 + alpha2 must be compact and is reported as such
    int sum = root_at(R, {1, 1});
    bool found = false;
    for (const auto& v : violations) found = found || (v.sum == sum || v.sum == R.negative_of(sum));
    CHECK(found);
}

TEST_CASE("su(2,1) data") {
    auto lie = make_lie("A2");
    const RootSystem& R = *lie.R;
    int a1 = root_at(R, {1, 0});
    RealFormSpec su21{lie, "su21", {a1, R.negative_of(a1)}};
    std::sort(su21.compact_roots.begin(), su21.compact_roots.end());
    CHECK(validate_real_form(su21).empty());
    CHECK(q_and_dim(su21).q == 2);
    CHECK(q_and_dim(su21).dim_gk == 4);
    CHECK(weyl_subgroup_K(su21).size() == 2);
}

TEST_CASE("asymmetric compact sets are flagged") {
    auto lie = make_lie("A1");
    RealFormSpec lopsided{lie, "broken", {0}};  // alpha without -alpha
    auto violations = validate_real_form(lopsided);
    REQUIRE_FALSE(violations.empty());
}

TEST_CASE("catalog entries are present and valid") {
    auto pairs = catalog();
    REQUIRE(pairs.size() >= 4);
    std::set<std::string> names;
    for (const auto& p : pairs) names.insert(p.name);
    CHECK(names.count("sl2R/su2"));
    CHECK(names.count("su21/su3"));
    CHECK(names.count("su31/su4"));
    CHECK(names.count("su22/su4"));
    CHECK(names.count("so22/so4"));
    CHECK(names.count("so26/so8"));
    CHECK(names.count("so44/so8"));

    for (const auto& p : pairs) {
        INFO(p.name);
        CHECK(validate_real_form(p.noncompact).empty());
        CHECK(validate_real_form(p.compact).empty());
        // compact member: all roots compact, W_K = W_G, q = 0
        CHECK(static_cast<int>(p.compact.compact_roots.size()) == p.lie.R->root_count());
        CHECK(q_and_dim(p.compact).q == 0);
        CHECK(static_cast<int>(weyl_subgroup_K(p.compact).size()) == p.lie.W->order());
        // dim G/K is even, |W_K| divides |W_G|, packet * |W_K| = |W_G|
        CHECK(p.dim_gk % 2 == 0);
        CHECK(p.lie.W->order() % static_cast<int>(p.wk.size()) == 0);
        CHECK(p.packet_size() * static_cast<int>(p.wk.size()) == p.lie.W->order());
    }
}

TEST_CASE("specific catalog structure") {
    InnerFormPair sl2r = find_pair("sl2R/su2");
    CHECK(sl2r.lie.R->spec_string() == "A1");
    CHECK(sl2r.noncompact.compact_roots.empty());
    CHECK(sl2r.q == 1);
    CHECK(sl2r.packet_size() == 2);

    InnerFormPair su21 = find_pair("su21/su3");
    CHECK(su21.packet_size() == 3);
    CHECK(su21.q == 2);
    CHECK(su21.wk.size() == 2);

    InnerFormPair so22 = find_pair("so22/so4");
    CHECK(so22.lie.R->spec_string() == "D2");
    CHECK(so22.noncompact.compact_roots.empty());  // maximal compact is a torus
    CHECK(so22.wk == std::vector<int>{so22.lie.W->identity()});
    CHECK(so22.packet_size() == 4);
    CHECK(so22.dim_gk == 4);
    CHECK(so22.q == 2);

    InnerFormPair su22 = find_pair("su22/su4");
    CHECK(su22.packet_size() == 6);
    CHECK(su22.q == 4);
    InnerFormPair su31 = find_pair("su31/su4");
    CHECK(su31.packet_size() == 4);
    CHECK(su31.q == 3);
    InnerFormPair so26 = find_pair("so26/so8");
    CHECK(so26.packet_size() == 8);
    CHECK(so26.q == 6);
    InnerFormPair so44 = find_pair("so44/so8");
    CHECK(so44.packet_size() == 12);
    CHECK(so44.q == 8);
}

TEST_CASE("grading closure holds exhaustively for every catalog entry") {
    for (const auto& p : catalog()) {
        INFO(p.name);
        const RootSystem& R = *p.lie.R;
        for (int i = 0; i < R.root_count(); ++i)
            for (int j = 0; j < R.root_count(); ++j) {
                int s = R.root_sum(i, j);
                if (s < 0) continue;
                bool ci = p.noncompact.is_compact_root(i);
                bool cj = p.noncompact.is_compact_root(j);
                REQUIRE(p.noncompact.is_compact_root(s) == (ci == cj));
            }
    }
}

TEST_CASE("catalog records round-trip through JSON") {
    auto records = builtin_catalog_records();
    auto round = records_from_json(nlohmann::json::parse(records_to_json(records).dump()));
    REQUIRE(round.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(round[i].name == records[i].name);
        CHECK(round[i].cartan == records[i].cartan);
        CHECK(round[i].compact_roots == records[i].compact_roots);
    }
    CHECK_THROWS_AS(find_pair("does/not-exist"), CatalogError);
    CHECK_THROWS_AS(records_from_json(nlohmann::json::parse("{\"no\":1}")), CatalogError);
}
