#include "doctest.h"

#include "tightmaps/rootsys.hpp"

using namespace tightmaps;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 2) * Rational(2, 3)) == Rational(1));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(-4, 2).is_integer());
}

TEST_CASE("algebra grammar round-trips") {
    CHECK(format_algebra(parse_algebra("su(2,3)")) == "su(2,3)");
    CHECK(format_algebra(parse_algebra("sp(8)")) == "sp(8)");
    CHECK(format_algebra(parse_algebra("so*(10)")) == "so*(10)");
    CHECK(format_algebra(parse_algebra("so(9,2)")) == "so(9,2)");
    CHECK(format_algebra(parse_algebra("e7")) == "e7");
    CHECK(parse_algebra("so(8,2)").family == Family::SO2_EVEN);
    CHECK(parse_algebra("so(9,2)").family == Family::SO2_ODD);
    CHECK_THROWS_AS(parse_algebra("su(2;3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("sp(7)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("g2"), std::invalid_argument);
}

TEST_CASE("parameter restrictions are enforced") {
    CHECK_THROWS_AS(build({Family::SOSTAR, 4, 0}), std::out_of_range);
    CHECK_THROWS_AS(build({Family::SP, 1, 0}), std::out_of_range);
    CHECK_THROWS_AS(build({Family::SO2_ODD, 3, 0}), std::out_of_range);
    CHECK_THROWS_AS(build({Family::SU, 0, 3}), std::out_of_range);
}

TEST_CASE("su(2,3): A4 with 20 roots and gamma = (1,1,1,1)") {
    RootSystem rs = build(parse_algebra("su(2,3)"));
    CHECK(rs.rank == 4);
    CHECK(rs.roots.size() == 20);
    CHECK(rs.highest == Root{1, 1, 1, 1});
    CHECK(cartan_type(rs.algebra) == "A4");
    for (const Root& a : rs.roots) CHECK(rs.inner(a, a) == Rational(1));
    // alpha_1 is the noncompact node; -alpha_q is compact
    CHECK(rs.is_noncompact(simple_root(rs, 1)));
    Root neg_aq(rs.rank, 0);
    neg_aq[3 - 1] = -1; // alpha_3 = alpha_q, q=3
    CHECK(!rs.is_noncompact(neg_aq));
}

TEST_CASE("sp(2p): C_p with long alpha_1 and gamma = (1,2,...,2)") {
    RootSystem rs = build(parse_algebra("sp(8)"));
    CHECK(rs.roots.size() == 32);
    CHECK(rs.highest == Root{1, 2, 2, 2});
    CHECK(rs.inner(rs.highest, rs.highest) == Rational(2));
    CHECK(rs.inner(simple_root(rs, 2), simple_root(rs, 2)) == Rational(1));
    CHECK(rs.is_noncompact(simple_root(rs, 1)));
}

TEST_CASE("so*(2p): alpha_p hangs off alpha_2 and carries the noncompact mark") {
    RootSystem rs = build(parse_algebra("so*(10)"));
    CHECK(rs.roots.size() == 40);
    CHECK(rs.highest == Root{1, 2, 2, 1, 1});
    CHECK(rs.noncompact_index == 4);
    CHECK(rs.inner(simple_root(rs, 2), simple_root(rs, 5)) != Rational(0));
    CHECK(rs.inner(simple_root(rs, 4), simple_root(rs, 5)) == Rational(0));
}

TEST_CASE("so(p,2): D_k for even p, B_k with short alpha_k for odd p") {
    RootSystem even = build(parse_algebra("so(6,2)"));
    CHECK(even.roots.size() == 24);
    CHECK(even.highest == Root{1, 2, 1, 1});
    CHECK(even.is_noncompact(even.highest)); // soj1 uses {alpha_1} u {gamma}

    RootSystem odd = build(parse_algebra("so(5,2)"));
    CHECK(odd.roots.size() == 18);
    CHECK(odd.highest == Root{1, 2, 2});
    CHECK(odd.inner(odd.highest, odd.highest) == Rational(2));
    CHECK(odd.inner(simple_root(odd, 3), simple_root(odd, 3)) == Rational(1));
}

TEST_CASE("exceptional root systems") {
    RootSystem e6 = build(parse_algebra("e6"));
    CHECK(e6.roots.size() == 72);
    CHECK(e6.highest == Root{1, 2, 3, 2, 1, 2});
    RootSystem e7 = build(parse_algebra("e7"));
    CHECK(e7.roots.size() == 126);
    CHECK(e7.highest == Root{1, 2, 3, 4, 3, 2, 2});
}

TEST_CASE("root sets are negation-closed with bounded noncompact coefficient") {
    for (const char* name : {"su(2,3)", "sp(6)", "so*(12)", "so(8,2)", "so(7,2)", "e6", "e7"}) {
        RootSystem rs = build(parse_algebra(name));
        for (const Root& a : rs.roots) {
            Root neg(a);
            for (int& x : neg) x = -x;
            CHECK(rs.contains(neg));
            int c = a[rs.noncompact_index];
            CHECK(c >= -1);
            CHECK(c <= 1);
        }
    }
}

TEST_CASE("root literal parsing") {
    CHECK(parse_root("[1,2,2,1,1]", 5) == Root{1, 2, 2, 1, 1});
    CHECK(parse_root(" [ 0, -1 ] ", 2) == Root{0, -1});
    CHECK_THROWS_AS(parse_root("[1,2]", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_root("1,2", 2), std::invalid_argument);
}

TEST_CASE("inner rejects dimension mismatch") {
    RootSystem rs = build(parse_algebra("su(2,2)"));
    CHECK_THROWS_AS(rs.inner(Root{1, 0}, Root{1, 0, 0}), std::invalid_argument);
}
