#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hmc/error.hpp"
#include "hmc/matrix.hpp"
#include "hmc/poly.hpp"
#include "hmc/series.hpp"
#include "support.hpp"

using namespace hmc;
using namespace hmc::vars;
using hmc::test::Gen;

namespace {

Poly P(const char* text) { return Poly::parse(text); }
Poly X(VarId v, int e = 1) { return Poly(v, e); }

} // namespace

TEST_CASE("variables: grade, invertibility, star") {
    CHECK(a(3).grade() == 3);
    CHECK(bbar(2).grade() == 2);
    CHECK(z.grade() == 0);
    CHECK(wbar.grade() == 0);

    CHECK(a(0).invertible());
    CHECK(b(0).invertible());
    CHECK_FALSE(a(1).invertible());
    CHECK_FALSE(bbar(4).invertible());
    for (VarId var : {z, zeta, u, v, wbar}) CHECK(var.invertible());

    CHECK(a(1).star() == abar(1));
    CHECK(abar(1).star() == a(1));
    CHECK(b(2).star() == bbar(2));
    CHECK(u.star() == v);
    CHECK(v.star() == u);
    CHECK(z.star() == z);
    CHECK(zeta.star() == zeta);
    CHECK(wbar.star() == wbar);
    CHECK(abar(0) == a(0));
    CHECK(a(0).star() == a(0));
}

TEST_CASE("variables: names round-trip") {
    for (VarId var : {a(0), a(12), abar(3), b(0), bbar(7), z, zeta, u, v, wbar}) {
        auto back = VarId::parse(var.name());
        REQUIRE(back);
        CHECK(*back == var);
    }
    CHECK_FALSE(VarId::parse("a01"));
    CHECK_FALSE(VarId::parse("c1"));
    CHECK_FALSE(VarId::parse("abar"));
}

TEST_CASE("monomials reject negative powers of non-units") {
    CHECK_THROWS_AS(Monomial(a(1), -1), Error);
    CHECK_NOTHROW(Monomial(a(0), -2));
    CHECK_NOTHROW(Monomial(z, -5));
}

TEST_CASE("ring examples") {
    const Poly p = (X(a(0)) * X(z) + X(a(1)) * X(z, 2)) * (X(a(0)) * X(z) - X(a(1)) * X(z, 2));
    CHECK(p == X(a(0), 2) * X(z, 2) - X(a(1), 2) * X(z, 4));
    CHECK(X(z) * X(z, -1) == Poly(1L));
    const Poly tail = X(a(1)) * X(b(1)) * X(a(0), -1) * X(b(0), -1);
    CHECK((Poly(1L) - tail) + tail == Poly(1L));
    CHECK((X(a(1)) - X(a(1))).is_zero());
    CHECK(Poly(Rational(0)).is_zero());
}

TEST_CASE("canonical text") {
    CHECK(Poly().to_string() == "0");
    CHECK(P("1 - a0*b0*u^-1*v^-1").to_string() == "1 - a0*b0*u^-1*v^-1");
    CHECK(P("-a1*b1*a0^-1*b0^-1 + 1").to_string() == "1 - a0^-1*b0^-1*a1*b1");
    CHECK(P("2*a0^3 - 8*a0*a1*abar1").to_string() == "2*a0^3 - 8*a0*a1*abar1");
    CHECK(P("3*a0*a1*abar2 + a0^2*abar1").to_string() == "a0^2*abar1 + 3*a0*a1*abar2");
    CHECK(P("-1/2*z^2").to_string() == "-1/2*z^2");
    CHECK(P("4/6").to_string() == "2/3");
    CHECK(P("a1*a1").to_string() == "a1^2");
    CHECK(P("z*z^-1").to_string() == "1");
    CHECK(P(" - 3 * wbar ^ -2 ").to_string() == "-3*wbar^-2");
}

TEST_CASE("parse errors") {
    for (const char* bad : {"", "a1 +", "q1", "1/0", "a1^", "a1^-1", "2**a0", "a0 a1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Poly::parse(bad), Error);
    }
}

TEST_CASE("project, star, derive, coefficient_of, substitute") {
    CHECK(project(P("a0^2*abar1 + 3*a0*a1*abar2"), 1) == P("a0^2*abar1"));
    const Poly mu0 = P("a0^2 + 2*a1*abar1 + 3*a2*abar2");
    CHECK(project(mu0, 5) == mu0);
    CHECK(star(X(a(1))) == X(abar(1)));
    CHECK(star(mu0) == mu0);
    CHECK(star(X(u) * X(b(2))) == X(v) * X(bbar(2)));

    CHECK(derive(P("a0*a1^2"), a(1)) == P("2*a0*a1"));
    CHECK(derive(mu0, a(1)) == P("2*abar1"));
    CHECK(derive(P("a0^-2*a1"), a(0)) == P("-2*a0^-3*a1"));

    CHECK(coefficient_of(X(z) * X(a(0)) * (X(a(0)) * X(z, -1)), z, 0) == P("a0^2"));
    CHECK(coefficient_of(P("a0^2*abar1 + 3*a0*a1*abar2"), abar(2), 1) == P("3*a0*a1"));
    CHECK(coefficient_of(mu0, z, 2).is_zero());
    CHECK(coefficient_of(mu0, z, 0) == mu0);

    CHECK(substitute(P("a1*b1"), {{b(1), X(abar(1))}}) == P("a1*abar1"));
    CHECK(substitute(P("z*z^-1"), {{z, X(a(0)) * X(z)}}) == Poly(1L));
    CHECK(substitute(P("z^-1"), {{z, X(a(0)) * X(z)}}) == P("a0^-1*z^-1"));
    CHECK_THROWS_AS(substitute(P("z^-1"), {{z, X(a(0)) + X(z)}}), Error);
}

TEST_CASE("exact division") {
    const Poly d = P("a0 + a1*z");
    const Poly q = P("a0^-1*z^-1 - a1 + 3*abar2*z^3");
    auto back = (d * q).exact_quotient(d);
    REQUIRE(back);
    CHECK(*back == q);
    CHECK_FALSE(P("1 + z").exact_quotient(P("1 + a1")));
    CHECK(P("a0^2 - a1^2").exact_quotient(P("a0 - a1")) == P("a0 + a1"));
    CHECK_THROWS_AS((void)P("1").exact_quotient(Poly()), Error);
}

TEST_CASE("property: ring axioms on random polynomials") {
    Gen g(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly x = g.poly(), y = g.poly(), w = g.poly();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + w == x + (y + w));
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * (y + w) == x * y + x * w);
        CHECK((x - x).is_zero());
        CHECK(x * Poly(1L) == x);
    }
}

TEST_CASE("property: involution, homomorphisms, Leibniz") {
    Gen g(12);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly x = g.poly(), y = g.poly();
        CHECK(star(star(x)) == x);
        CHECK(star(x * y) == star(x) * star(y));
        const int n = g.integer(0, 3);
        CHECK(project(x * y, n) == project(x, n) * project(y, n));
        CHECK(project(x + y, n) == project(x, n) + project(y, n));
        const VarId var = g.variable(3);
        CHECK(derive(x * y, var) == derive(x, var) * y + x * derive(y, var));
        CHECK(derive(derive(x, a(0)), a(1)) == derive(derive(x, a(1)), a(0)));
    }
}

TEST_CASE("property: text round-trip") {
    Gen g(13);
    for (int trial = 0; trial < 500; ++trial) {
        const Poly x = g.poly(4, 8);
        CHECK(Poly::parse(x.to_string()) == x);
    }
}

TEST_CASE("property: exact quotient inverts multiplication") {
    Gen g(14);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly x = g.poly(2, 4);
        const Poly d = g.poly(2, 3);
        if (d.is_zero()) continue;
        auto q = (x * d).exact_quotient(d);
        REQUIRE(q);
        CHECK(*q == x);
    }
}

TEST_CASE("property: windows and substitution") {
    Gen g(15);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly x = g.poly(), y = g.poly();
        const int lo = g.integer(-4, 2), hi = lo + g.integer(0, 4);
        CHECK(mul_window(x, y, z, lo, hi) == window(x * y, z, lo, hi));
        Poly joined;
        for (const auto& [e, c] : split_by(x, z)) joined += c * Poly(z, e);
        CHECK(joined == x);
        const std::map<VarId, Poly> bind{{a(1), g.poly(1, 2)}, {u, Poly(z, g.integer(-2, 2))}};
        CHECK(substitute(x * y, bind) == substitute(x, bind) * substitute(y, bind));
    }
}

TEST_CASE("series and its reflections") {
    const auto f0 = CoefficientVector::symbolic(0);
    CHECK(series_star(f0) == P("a0*z^-1"));
    const auto f1 = CoefficientVector::symbolic(1);
    CHECK(series_star(f1) == P("a0*z^-1 + abar1*z^-2"));
    CHECK(series_derivative(f1) == P("a0 + 2*a1*z"));
    for (int n = 0; n <= 4; ++n) {
        const auto f = CoefficientVector::symbolic(n);
        CHECK(reflect_z(star(series_star(f))) == series(f));
    }
}

TEST_CASE("laurent powers") {
    const auto f0 = CoefficientVector::symbolic(0);
    CHECK(laurent_power(f0, -1, -1, -1).value == P("a0^-1*z^-1"));
    const auto f1 = CoefficientVector::symbolic(1);
    CHECK(laurent_power(f1, -1, -1, 1).value == P("a0^-1*z^-1 - a0^-2*a1 + a0^-3*a1^2*z"));
    CHECK(laurent_power(f1, 2, 2, 4).value == P("a0^2*z^2 + 2*a0*a1*z^3 + a1^2*z^4"));
    const auto below = laurent_power(f1, 3, -2, 2);
    CHECK(below.below_leading_term);
    CHECK(below.value.is_zero());
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 3) == 0);
}

TEST_CASE("property: f^k f^-k = 1 on the window") {
    for (int n = 0; n <= 3; ++n) {
        const auto f = CoefficientVector::symbolic(n);
        for (int k = 1; k <= 3; ++k) {
            const int hi = 3;
            const Poly pos = laurent_power(f, k, k, hi + 2 * k + n * k).value;
            const Poly neg = laurent_power(f, -k, -k, hi).value;
            CHECK(mul_window(pos, neg, z, 0, hi) == Poly(1L));
            // the star version is the reflection of the conjugate curve
            const Poly neg_star = laurent_power_star(f, -k, -hi, k).value;
            CHECK(neg_star == reflect_z(star(neg)));
        }
    }
}

TEST_CASE("exact-point coefficient vectors") {
    const auto f = CoefficientVector::exact({Poly(Rational(2)), Poly(Rational(1, 3))}, {Poly(Rational(2)), Poly(Rational(-1))});
    CHECK(series_star(f) == P("2*z^-1 - z^-2"));
    CHECK_THROWS_AS(CoefficientVector::exact({Poly(Rational(2))}, {Poly(Rational(3))}), Error);
    CHECK_THROWS_AS(CoefficientVector::exact({Poly()}, {Poly()}), Error);
    CHECK_THROWS_AS(CoefficientVector::numeric({{1.0, 0.5}}), Error);
    CHECK_THROWS_AS(CoefficientVector::numeric({{-1.0, 0.0}}), Error);
}

TEST_CASE("determinants") {
    PolyMatrix m(2, 2);
    m(0, 0) = X(a(0));
    m(0, 1) = Rational(2) * X(abar(1));
    m(1, 0) = Rational(2) * X(a(1));
    m(1, 1) = X(a(0));
    CHECK(determinant(m) == P("a0^2 - 4*a1*abar1"));
    CHECK(determinant(m, DeterminantMethod::Cofactor) == P("a0^2 - 4*a1*abar1"));

    PolyMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = Poly(1L);
    CHECK(determinant(id) == Poly(1L));
    CHECK(determinant(PolyMatrix(0, 0)) == Poly(1L));
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), Error);

    Gen g(16);
    PolyMatrix dup(3, 3);
    for (int j = 0; j < 3; ++j) {
        dup(0, j) = g.poly(2, 3);
        dup(1, j) = g.poly(2, 3);
        dup(2, j) = dup(0, j);
    }
    CHECK(determinant(dup).is_zero());
}

TEST_CASE("property: Bareiss agrees with cofactor expansion") {
    Gen g(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int size = g.integer(1, 5);
        PolyMatrix m(size, size);
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) m(i, j) = g.integer(0, 3) == 0 ? Poly() : g.poly(2, 2);
        }
        const Poly bareiss = determinant(m, DeterminantMethod::Bareiss);
        CHECK(bareiss == determinant(m, DeterminantMethod::Cofactor));
        CHECK(determinant(m.reversed_rows().reversed_rows()) == bareiss);
    }
}
