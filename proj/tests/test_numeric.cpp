#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "hmc/error.hpp"
#include "hmc/moments.hpp"
#include "hmc/numeric.hpp"
#include "support.hpp"

using namespace hmc;
using namespace hmc::vars;
using hmc::test::cd;
using hmc::test::Gen;

namespace {

Poly P(const char* text) { return Poly::parse(text); }
CoefficientVector N(std::vector<cd> a) { return CoefficientVector::numeric(std::move(a)); }

cd eval_at(const Poly& p, const CoefficientVector& f) { return eval(p, assignment_of(f)); }

} // namespace

TEST_CASE("evaluation") {
    CHECK(std::abs(eval_at(P("a0^2 + 2*a1*abar1"), N({1.0, 0.3})) - 1.18) < 1e-15);
    CHECK(std::abs(eval_at(P("a0^2*abar1"), N({1.0, 0.1})) - 0.1) < 1e-15);
    Assignment z_only;
    z_only.values[z] = cd(0.3, -2.0);
    CHECK(eval(P("z*z^-1"), z_only) == cd(1.0));
    CHECK(eval(P("1/3"), z_only) == cd(1.0 / 3));
    CHECK_THROWS_AS(eval(P("a1"), z_only), Error);

    Assignment pairs;
    pairs.set_pair(a(2), cd(0.5, 0.25));
    CHECK(pairs.values.at(abar(2)) == cd(0.5, -0.25));
    CHECK(eval(P("a2*abar2"), pairs) == cd(0.3125));
}

TEST_CASE("extended precision accumulation") {
    const Poly p = P("a0^2 + 2*a1*abar1 + 3*a2*abar2");
    const auto f = N({1.3, {0.1, 0.2}, {-0.05, 0.01}});
    const cd plain = eval_at(p, f);
    setenv("HMC_PRECISION_BITS", "64", 1);
    const cd wide = eval_at(p, f);
    unsetenv("HMC_PRECISION_BITS");
    CHECK(std::abs(plain - wide) < 1e-15);
}

TEST_CASE("univalence guard") {
    CHECK(univalence_guard(N({1.0, 0.1})));
    CHECK_FALSE(univalence_guard(N({1.0, 1.0})));
    CHECK(univalence_guard(N({1.0, 0.5})));
    CHECK_FALSE(univalence_guard(N({1.0, 2.0})));
    CHECK(univalence_guard(N({1.0, 0.1, 0.05})));
    CHECK_FALSE(univalence_guard(N({0.1, 0.0, 1.0})));
    // zero just inside the disk: 1 + 1.001 z
    CHECK_FALSE(univalence_guard(N({1.0, 1.001})));
}

TEST_CASE("quadrature examples") {
    const auto disk = quadrature_moment(N({1.0}), 0, {64, 1e-12});
    CHECK(std::abs(disk.value - 1.0) < 1e-14);
    const auto m = quadrature_moment(N({1.0, 0.1}), -1, {256, 1e-12});
    CHECK(std::abs(m.value - 0.099) < 1e-12);
    const auto f = N({1.0, 0.1, 0.05});
    const auto q = quadrature_moment(f, 1, {256, 1e-12});
    CHECK(std::abs(q.value - eval_at(moment_richardson_exact(CoefficientVector::symbolic(2), 1), f)) < 1e-10);
}

TEST_CASE("quadrature preconditions") {
    CHECK_THROWS_AS(quadrature_moment(N({1.0, 0.1}), 0, {8, 1e-10}), Error);
    CHECK_THROWS_AS(quadrature_moment(N({1.0, 0.1, 0.1}), 5, {16, 1e-10}), Error);
    CHECK_THROWS_AS(quadrature_moment(N({1.0, 1.0}), -1, {256, 1e-10}), Error);
    try {
        quadrature_moment(N({1.0, 0.9}), -3, {16, 1e-14});
        FAIL("expected NonConvergent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonConvergent);
    }
}

TEST_CASE("property: quadrature matches symbolic moments") {
    Gen g(31);
    for (int n = 0; n <= 3; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto f = g.univalent(n);
            REQUIRE(univalence_guard(f));
            for (int k = -3; k <= n + 1; ++k) {
                const cd sym = eval_at(moment_ct_exact(CoefficientVector::symbolic(n), k), f);
                const cd quad = quadrature_moment(f, k, {256, 1e-10}).value;
                CAPTURE(n);
                CAPTURE(k);
                CHECK(std::abs(sym - quad) <= 1e-10);
            }
        }
    }
}

TEST_CASE("property: quadrature error decays geometrically") {
    const auto f = N({1.0, 0.4, {0.1, 0.1}});
    for (int k = -2; k <= 2; ++k) {
        double prev = -1.0;
        for (int m = 32; m <= 128; m *= 2) {
            const double coarse = std::abs(quadrature_moment(f, k, {m, 1.0}).value -
                                           quadrature_moment(f, k, {2 * m, 1.0}).value);
            if (prev > 0 && prev < 1e-2 && prev > 1e-13) CHECK(coarse < 1e-3 * prev + 1e-15);
            prev = coarse;
        }
    }
}

TEST_CASE("finite differences of the moment map") {
    const auto f = N({1.0, 0.1});
    const auto d0 = fd_directional(f, PhiFamily::Complete, {1.0, 0.0}, 1e-5);
    CHECK(std::abs(d0[1] - 2.0) < 1e-6);
    // h_1 = 1 also moves abar1, so phi_1 picks up the a0^2 from column j = -1
    // even though its j = 1 entry vanishes.
    const auto d1 = fd_directional(f, PhiFamily::Complete, {0.0, 1.0}, 1e-5);
    CHECK(std::abs(d1[2] - 1.0) < 1e-6);
    const auto phi = dphi_matrix(CoefficientVector::symbolic(1), PhiFamily::Complete);
    CHECK(phi(2, 2).is_zero());
    const auto disk = fd_directional(N({1.0}), PhiFamily::Complete, {1.0}, 1e-5);
    CHECK(std::abs(disk[0] - 2.0) < 1e-8);

    CHECK_THROWS_AS(fd_directional(f, PhiFamily::Complete, {{1.0, 0.1}, 0.0}, 1e-5), Error);
    CHECK_THROWS_AS(fd_directional(f, PhiFamily::Complete, {1.0, 0.0}, 1e-2), Error);
    CHECK_THROWS_AS(fd_directional(f, PhiFamily::Complete, {1.0}, 1e-5), Error);
}

TEST_CASE("property: finite differences match the symbolic Jacobian") {
    Gen g(32);
    for (int n = 0; n <= 3; ++n) {
        for (auto family : {PhiFamily::Complete, PhiFamily::Conjugate}) {
            const auto f = g.univalent(n);
            std::vector<cd> h(static_cast<std::size_t>(n) + 1);
            h[0] = g.real(-1, 1);
            for (int k = 1; k <= n; ++k) h[static_cast<std::size_t>(k)] = cd(g.real(-1, 1), g.real(-1, 1));
            const double step = 1e-5;
            const auto fd = fd_directional(f, family, h, step);
            const auto phi = dphi_matrix(CoefficientVector::symbolic(n), family);
            const auto ext = extend_direction(h);
            for (int r = 0; r <= 2 * n; ++r) {
                cd predicted = 0;
                for (int c = 0; c <= 2 * n; ++c) predicted += eval_at(phi(r, c), f) * ext[static_cast<std::size_t>(c)];
                CAPTURE(n);
                CAPTURE(r);
                CHECK(std::abs(predicted - fd[static_cast<std::size_t>(r)]) <= std::max(1e-5, 10 * step * step));
            }
        }
    }
}

TEST_CASE("generalized quadrature agrees with the exact generalized moment") {
    const auto f = N({1.2, {0.1, -0.05}, {0.02, 0.03}});
    for (int k = -2; k <= 2; ++k) {
        const auto phi = phi_family(PhiFamily::Conjugate, k);
        const cd exact = eval_at(generalized_moment_exact(CoefficientVector::symbolic(2), phi), f);
        CHECK(std::abs(quadrature_generalized(f, phi).value - exact) < 1e-10);
        CHECK(std::abs(std::get<cd>(generalized_moment(f, phi)) - exact) < 1e-14);
    }
}

TEST_CASE("parallel quadrature is deterministic") {
    const auto f = N({1.0, 0.1, 0.05});
    const cd serial = quadrature_moment(f, -2).value;
    setenv("HMC_THREADS", "4", 1);
    const cd threaded = quadrature_moment(f, -2).value;
    unsetenv("HMC_THREADS");
    CHECK(serial == threaded);
}
