#include "doctest.h"

#include "tightmaps/extrep.hpp"

using namespace tightmaps;

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(30, 15) == 155117520);
}

TEST_CASE("extended signature of the wedge representation") {
    TensorRepDescriptor s42 = signature(4, 2);
    CHECK(s42.p_prime == 6);
    CHECK(s42.q_prime == 4);
    TensorRepDescriptor s53 = signature(5, 3);
    CHECK(s53.p_prime == 10);
    CHECK(s53.q_prime == 10);
    CHECK_THROWS_AS(signature(4, 0), std::out_of_range);
    CHECK_THROWS_AS(signature(4, 5), std::out_of_range);
    CHECK_THROWS_AS(signature(1, 1), std::out_of_range);
}

TEST_CASE("eigenvalue multiplicities of the disc image") {
    EigenvalueMultiplicities ev = disc_image_eigenvalues(4, 2);
    CHECK(ev.plus == 3);
    CHECK(ev.minus == 3);
    CHECK(ev.zero == 4);
    // conservation: multiplicities fill the full C(p+1,m)-dimensional space
    for (int p = 2; p <= 9; ++p)
        for (int m = 1; m <= p; ++m) {
            EigenvalueMultiplicities e = disc_image_eigenvalues(p, m);
            CHECK(e.plus + e.minus + e.zero == binomial(p + 1, m));
            CHECK(e.plus == e.minus);
        }
}

TEST_CASE("su-target pairing: frozen values and zero set") {
    CHECK(su_target_pairing(4, 2) == 11);
    CHECK(su_target_pairing(3, 2) == 7);
    for (int p = 2; p <= 12; ++p)
        for (int m = 1; m <= p; ++m) {
            CAPTURE(p);
            CAPTURE(m);
            CHECK((su_target_pairing(p, m) == 0) == (m == 1 || m == p));
        }
    // duality of the extended signature: q'(p, p+1-m) = p'(p, m)
    for (int p = 2; p <= 9; ++p)
        for (int m = 1; m <= p; ++m)
            CHECK(signature(p, p + 1 - m).q_prime == signature(p, m).p_prime);
}

TEST_CASE("so*-target pairing for p = 3 mod 4") {
    CHECK(sostar_target_pairing(3) == 0);
    CHECK(sostar_target_pairing(7) == -952);
    CHECK(sostar_target_pairing(11) == -192698);
    CHECK_THROWS_AS(sostar_target_pairing(5), std::domain_error);
    CHECK_THROWS_AS(sostar_target_pairing(4), std::domain_error);
}

TEST_CASE("sp-target verdict for p = 1 mod 4") {
    SpTargetVerdict v = sp_target_verdict(5);
    CHECK(!v.tight);
    REQUIRE(v.trace.size() == 3);
    CHECK(v.trace[1].find(std::to_string(su_target_pairing(5, 3))) != std::string::npos);
    CHECK_THROWS_AS(sp_target_verdict(3), std::domain_error);
}

TEST_CASE("brute-force wedge-basis oracle agrees with the closed form") {
    for (int p = 2; p <= 7; ++p)
        for (int m = 1; m <= p; ++m) {
            CAPTURE(p);
            CAPTURE(m);
            CHECK(brute_force_pairing(p, m) == su_target_pairing(p, m));
        }
    CHECK_THROWS_AS(brute_force_pairing(9, 2), std::out_of_range);
}
