#include <algorithm>

#include "doctest.h"

#include "tightmaps/classify.hpp"

using namespace tightmaps;

TEST_CASE("identity maps are tight with a nonempty trace") {
    Verdict v = classify(MapDescriptor::identity(parse_algebra("su(2,3)")));
    CHECK(v.status == Status::Tight);
    CHECK(!v.trace.empty());
    CHECK(v.trace[0].rule == "R2");
}

TEST_CASE("singleton compositions and products preserve the factor verdict") {
    MapDescriptor f = MapDescriptor::tensor(4, 2, "su"); // NotTight, value 11
    Verdict base = classify(f);
    CHECK(base.status == Status::NotTight);
    CHECK(classify(MapDescriptor::composition({f})).status == base.status);
    CHECK(classify(MapDescriptor::product({f})).status == base.status);
    // a non-tight factor poisons the whole product
    MapDescriptor id = MapDescriptor::identity(parse_algebra("e7"));
    CHECK(classify(MapDescriptor::product({id, f, id})).status == Status::NotTight);
    CHECK(classify(MapDescriptor::composition({id, id})).status == Status::Tight);
}

TEST_CASE("regular inclusions reproduce the curvature certificate") {
    AlgebraId sp8 = parse_algebra("sp(8)");
    RootSystem rs = build(sp8);
    CatalogInstance tight = instantiate(sp8, "sp1", {{"l", 2}});
    Verdict vt = classify(MapDescriptor::regular(sp8, tight.delta));
    CHECK(vt.status == Status::Tight);
    REQUIRE(!vt.trace.empty());
    CHECK(vt.trace[0].rule == "R5");

    CatalogInstance loose = instantiate(sp8, "sp1", {{"l", 1}});
    CHECK(classify(MapDescriptor::regular(sp8, loose.delta)).status == Status::NotTight);

    // every catalog instance agrees with the direct certificate
    for (const CatalogInstance& ci : maximal_entries(sp8)) {
        TightnessCertificate cert = regular_verdict(rs, identify(rs, ci.delta));
        Verdict v = classify(MapDescriptor::regular(sp8, ci.delta));
        CHECK((v.status == Status::Tight) == cert.tight);
    }

    // invalid Pi-systems are rejected as user errors
    CHECK_THROWS_AS(
        classify(MapDescriptor::regular(
            sp8, {simple_root(rs, 1), Root{1, 1, 0, 0}})), // alpha_2 is their difference
        std::invalid_argument);
}

TEST_CASE("disc inclusions: iota_1 tight, iota_2 tight iff p even") {
    for (int p = 2; p <= 6; ++p)
        CHECK(classify(MapDescriptor::disc_inclusion(1, p)).status == Status::Tight);
    for (int p = 3; p <= 9; ++p) {
        Verdict v = classify(MapDescriptor::disc_inclusion(2, p));
        CHECK((v.status == Status::Tight) == (p % 2 == 0));
        if (p % 2 == 1) {
            REQUIRE(!v.trace.empty());
            CHECK(v.trace[0].rule == "R6"); // decided by the exact matrix computation
            CHECK(v.trace[0].values.find(std::to_string(2 * p)) != std::string::npos);
        }
    }
    CHECK_THROWS_AS(MapDescriptor::disc_inclusion(3, 4), std::invalid_argument);
}

TEST_CASE("tensor representations by target") {
    Verdict su = classify(MapDescriptor::tensor(4, 2, "su"));
    CHECK(su.status == Status::NotTight);
    CHECK(su.trace[0].values.find("11") != std::string::npos);
    CHECK(classify(MapDescriptor::tensor(4, 1, "su")).status == Status::Tight);
    CHECK(classify(MapDescriptor::tensor(4, 4, "su")).status == Status::Tight);

    CHECK(classify(MapDescriptor::tensor(3, 2, "so*")).status == Status::Tight);
    CHECK(classify(MapDescriptor::tensor(7, 4, "so*")).status == Status::NotTight);
    // p = 1 mod 4: p' is even, so the so* route goes through the factorization
    Verdict v5 = classify(MapDescriptor::tensor(5, 3, "so*"));
    CHECK(v5.status == Status::NotTight);
    CHECK(v5.trace.size() == 3);

    Verdict sp = classify(MapDescriptor::tensor(5, 3, "sp"));
    CHECK(sp.status == Status::NotTight);
    CHECK(sp.trace.size() == 3);
    CHECK(sp.trace.back().rule == "R2");

    CHECK_THROWS_AS(classify(MapDescriptor::tensor(4, 2, "so*")), std::invalid_argument);
    CHECK_THROWS_AS(classify(MapDescriptor::tensor(4, 2, "e6")), std::invalid_argument);
}

TEST_CASE("spin representations") {
    CHECK(classify(MapDescriptor::spin(6, "su")).status == Status::Tight);
    SpinInfo s6 = spin_descriptor(6);
    CHECK(s6.p_prime == 4);
    CHECK(s6.representations == 2);
    CHECK(std::find(s6.targets.begin(), s6.targets.end(), "su(4,4)") != s6.targets.end());
    CHECK(std::find(s6.targets.begin(), s6.targets.end(), "so*(8)") != s6.targets.end());
    SpinInfo s5 = spin_descriptor(5);
    CHECK(s5.p_prime == 4);
    CHECK(s5.representations == 1);
    CHECK(std::find(s5.targets.begin(), s5.targets.end(), "so*(8)") != s5.targets.end());
    SpinInfo s9 = spin_descriptor(9);
    CHECK(s9.p_prime == 16);
    CHECK(std::find(s9.targets.begin(), s9.targets.end(), "sp(32)") != s9.targets.end());
    CHECK_THROWS_AS(spin_descriptor(4), std::out_of_range);
}

TEST_CASE("verdict JSON shape") {
    Verdict v = classify(MapDescriptor::tensor(3, 2, "su"));
    std::string j = verdict_json(v);
    CHECK(j.find("\"status\":\"NotTight\"") != std::string::npos);
    CHECK(j.find("\"rule\":\"R8\"") != std::string::npos);
    CHECK(j.find("\"citation\"") != std::string::npos);
}
