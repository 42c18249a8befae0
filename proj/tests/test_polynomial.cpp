#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "franel/polynomial.hpp"
#include "support/oracles.hpp"

using franel::Rational;
using franel::RationalPolynomial;

namespace {

RationalPolynomial make(std::initializer_list<Rational> ascending) {
    return RationalPolynomial(std::vector<Rational>(ascending));
}

}  // namespace

TEST_CASE("canonical zero is the empty coefficient list") {
    CHECK(RationalPolynomial().is_zero());
    CHECK(make({Rational(0), Rational(0)}).is_zero());
    CHECK(make({Rational(0), Rational(0)}).degree() == -1);
    CHECK(make({Rational(1), Rational(0)}).degree() == 0);
}

TEST_CASE("substitute_linear expands p(cx - d)") {
    // x^2 with c = 2, d = 1 -> 4x^2 - 4x + 1
    RationalPolynomial p = make({Rational(0), Rational(0), Rational(1)});
    CHECK(p.substitute_linear(Rational(2), Rational(1)) ==
          make({Rational(1), Rational(-4), Rational(4)}));

    // x - 1/2 with c = 3, d = 2 -> 3x - 5/2
    RationalPolynomial q = make({Rational(-1, 2), Rational(1)});
    CHECK(q.substitute_linear(Rational(3), Rational(2)) ==
          make({Rational(-5, 2), Rational(3)}));
}

TEST_CASE("substitute_linear identity and degree preservation", "[property]") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 200; ++iter) {
        RationalPolynomial p = franel::testing::random_polynomial(rng);
        CHECK(p.substitute_linear(Rational(1), Rational(0)) == p);
        Rational c = franel::testing::random_rational(rng);
        if (c.is_zero()) {
            c = Rational(1);
        }
        Rational d = franel::testing::random_rational(rng);
        CHECK(p.substitute_linear(c, d).degree() == p.degree());
    }
}

TEST_CASE("multiplication matches hand values") {
    RationalPolynomial xp1 = make({Rational(1), Rational(1)});
    RationalPolynomial xm1 = make({Rational(-1), Rational(1)});
    CHECK(xp1 * xm1 == make({Rational(-1), Rational(0), Rational(1)}));
    CHECK((xp1 * RationalPolynomial()).is_zero());

    RationalPolynomial h = make({Rational(-1, 2), Rational(1)});
    CHECK(h * h == make({Rational(1, 4), Rational(-1), Rational(1)}));
}

TEST_CASE("antiderivative fixes q(0) = 0") {
    // x^3 -> x^4/4
    CHECK(make({Rational(0), Rational(0), Rational(0), Rational(1)}).antiderivative() ==
          make({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1, 4)}));
    CHECK(make({Rational(1)}).antiderivative() == make({Rational(0), Rational(1)}));
    CHECK(RationalPolynomial().antiderivative().is_zero());
}

TEST_CASE("eval by Horner") {
    RationalPolynomial p = make({Rational(1, 4), Rational(-1), Rational(1)});
    CHECK(p.eval(Rational(1, 2)) == Rational(0));
    RationalPolynomial q = make({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1, 4)});
    CHECK(q.eval(Rational(1, 3)) == Rational(1, 324));
    CHECK(RationalPolynomial().eval(Rational(17, 3)) == Rational(0));
}

TEST_CASE("antiderivative difference equals the termwise integral", "[property]") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        RationalPolynomial p = franel::testing::random_polynomial(rng);
        Rational a = franel::testing::random_rational(rng);
        Rational b = franel::testing::random_rational(rng);
        RationalPolynomial anti = p.antiderivative();
        CHECK(anti.eval(b) - anti.eval(a) == franel::testing::termwise_integral(p, a, b));
    }
}

TEST_CASE("denominator is the minimal integer clearing all coefficients") {
    CHECK(RationalPolynomial().denominator() == 1);
    RationalPolynomial p = make({Rational(1, 6), Rational(3), Rational(-5, 4)});
    CHECK(p.denominator() == 12);

    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 200; ++iter) {
        RationalPolynomial q = franel::testing::random_polynomial(rng);
        franel::Int n = q.denominator();
        // n * q is integral
        for (const Rational& c : q.coefficients()) {
            CHECK((Rational(n) * c).is_integer());
        }
        // no proper divisor of n clears every coefficient (including 1)
        for (franel::Int d = 1; d * d <= n; ++d) {
            if (n % d != 0) {
                continue;
            }
            for (franel::Int m : {franel::Int(n / d), franel::Int(d)}) {
                if (m == n) {
                    continue;
                }
                bool all_integral = true;
                for (const Rational& c : q.coefficients()) {
                    if (!(Rational(m) * c).is_integer()) {
                        all_integral = false;
                        break;
                    }
                }
                CHECK_FALSE(all_integral);
            }
        }
    }
}
