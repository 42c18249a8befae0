#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "franel/certificates.hpp"

using franel::certificate;
using franel::CertificateReport;
using franel::franel_integral;
using franel::gcd_product;
using franel::Int;
using franel::IntegralSpec;
using franel::multiplier;
using franel::Rational;
using franel::sharpness_check;
using franel::TheoremKind;

TEST_CASE("gcd products over index subsets") {
    CHECK(gcd_product(1, {2, 3, 4}) == 24);
    CHECK(gcd_product(2, {2, 4, 6}) == 8);
    CHECK(gcd_product(4, {6, 6, 6, 6}) == 6);
    CHECK(gcd_product(2, {4, 6, 10}) == 2 * 2 * 2);
    CHECK(gcd_product(3, {4, 6, 10}) == 2);
    CHECK_THROWS_AS(gcd_product(0, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(gcd_product(3, {2, 3}), std::invalid_argument);
}

TEST_CASE("gcd product is permutation invariant", "[property]") {
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t len = 2 + rng() % 4;
        std::vector<long long> tuple(len);
        for (auto& a : tuple) {
            a = 1 + static_cast<long long>(rng() % 12);
        }
        unsigned m = 1 + static_cast<unsigned>(rng() % len);
        Int reference = gcd_product(m, tuple);
        std::shuffle(tuple.begin(), tuple.end(), rng);
        CHECK(gcd_product(m, tuple) == reference);
    }
}

TEST_CASE("multipliers for the three theorems") {
    CHECK(multiplier(TheoremKind::mcintosh4(), {1, 1, 1, 1}) == Rational(240));
    CHECK(multiplier(TheoremKind::general_even(1), {2, 4}) == Rational(24));
    CHECK(multiplier(TheoremKind::general_even(2), {1, 1, 1, 1}) == Rational(240));
    CHECK(multiplier(TheoremKind::higher(1, 1), {1, 1}) == Rational(15120));
    CHECK_THROWS_AS(multiplier(TheoremKind::mcintosh4(), {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(multiplier(TheoremKind::general_even(2), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(multiplier(TheoremKind::higher(1, 2), {1, 1}), std::invalid_argument);
}

TEST_CASE("general_even(2) multiplier coincides with the 4-factor conjecture") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<long long> tuple(4);
        for (auto& a : tuple) {
            a = 1 + static_cast<long long>(rng() % 6);
        }
        CHECK(multiplier(TheoremKind::general_even(2), tuple) ==
              multiplier(TheoremKind::mcintosh4(), tuple));
    }
}

TEST_CASE("certificates for pinned instances") {
    // I(3,1,1,1) = 43/6480 and the multiplier is 240 * 27, so f = 43
    CertificateReport r1 = certificate(TheoremKind::mcintosh4(), {3, 1, 1, 1});
    CHECK(r1.product == Rational(43));
    CHECK(r1.is_integer);
    CHECK(r1.integral == Rational(43, 6480));
    CHECK(r1.constant_part == 240);

    CertificateReport r2 = certificate(TheoremKind::mcintosh4(), {1, 1, 1, 1});
    CHECK(r2.product == Rational(3));
    CHECK(r2.is_integer);
    CHECK(r2.integral == Rational(1, 80));

    CertificateReport r3 = certificate(TheoremKind::higher(1, 1), {1, 1});
    CHECK(r3.product == Rational(18));
    CHECK(r3.is_integer);
    CHECK(r3.multiplier == Rational(15120));
    CHECK(r3.spec.index == 3);
}

TEST_CASE("pair certificates reproduce Franel exactly") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        long long a = 1 + static_cast<long long>(rng() % 20);
        long long b = 1 + static_cast<long long>(rng() % 20);
        CertificateReport r = certificate(TheoremKind::general_even(1), {a, b});
        CHECK(r.product == Rational(1));
        CHECK(r.is_integer);
    }
}

TEST_CASE("report invariants: product = multiplier * integral, parts multiply back") {
    std::mt19937_64 rng(4321);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<long long> tuple(4);
        for (auto& a : tuple) {
            a = 1 + static_cast<long long>(rng() % 8);
        }
        CertificateReport r = certificate(TheoremKind::mcintosh4(), tuple);
        CHECK(r.product == r.multiplier * r.integral);
        CHECK(r.is_integer == r.product.is_integer());
        CHECK(r.multiplier ==
              Rational(r.constant_part) * Rational(r.gcd_part_num, r.gcd_part_den));
    }
}

TEST_CASE("verdicts are invariant under whole-tuple scaling for odd index") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<long long> tuple(2);
        for (auto& a : tuple) {
            a = 1 + static_cast<long long>(rng() % 5);
        }
        for (long long r = 1; r <= 3; ++r) {
            std::vector<long long> scaled{tuple[0] * r, tuple[1] * r};
            CHECK(certificate(TheoremKind::higher(1, 1), scaled).is_integer);
        }
    }
    // sawtooth 4-tuples: verdict stays true under scaling as well
    for (long long r = 1; r <= 3; ++r) {
        CHECK(certificate(TheoremKind::mcintosh4(), {2 * r, 1 * r, 1 * r, 3 * r}).is_integer);
    }
}

TEST_CASE("sharpness check compares reduced denominators") {
    CHECK(sharpness_check(Rational(13, 6480), Int(6480)));
    CHECK_FALSE(sharpness_check(Rational(1, 80), Int(240)));
    CHECK(sharpness_check(Rational(43, 174960), Int(240) * 9 * 9 * 9));
    // the a = 9 member of the family attains the full 240 a^3 denominator
    CHECK(franel_integral(IntegralSpec(1, {9, 1, 1, 1})) == Rational(403, 174960));
    CHECK(sharpness_check(Rational(403, 174960), Int(240) * 9 * 9 * 9));
}

TEST_CASE("small integrality sweeps") {
    // 4-factor conjecture, entries <= 4
    for (long long a = 1; a <= 4; ++a) {
        for (long long b = a; b <= 4; ++b) {
            for (long long c = b; c <= 4; ++c) {
                for (long long e = c; e <= 4; ++e) {
                    REQUIRE(certificate(TheoremKind::mcintosh4(), {a, b, c, e}).is_integer);
                }
            }
        }
    }
    // 6-factor even theorem, entries <= 2
    for (long long a = 1; a <= 2; ++a) {
        for (long long b = a; b <= 2; ++b) {
            for (long long c = b; c <= 2; ++c) {
                for (long long d = c; d <= 2; ++d) {
                    for (long long e = d; e <= 2; ++e) {
                        for (long long f = e; f <= 2; ++f) {
                            REQUIRE(certificate(TheoremKind::general_even(3),
                                                {a, b, c, d, e, f})
                                        .is_integer);
                        }
                    }
                }
            }
        }
    }
}
