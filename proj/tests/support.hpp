// Hand-rolled generators and independent oracles shared by the test binaries.
#ifndef HMC_TESTS_SUPPORT_HPP
#define HMC_TESTS_SUPPORT_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hmc/matrix.hpp"
#include "hmc/moment_map.hpp"
#include "hmc/poly.hpp"
#include "hmc/series.hpp"

namespace hmc::test {

using cd = std::complex<double>;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    Rational rational() {
        Rational r(integer(-12, 12), integer(1, 6));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational() {
        Rational r;
        do r = rational();
        while (r == 0);
        return r;
    }

    VarId variable(int max_grade) {
        switch (integer(0, 7)) {
            case 0: return vars::a(integer(0, max_grade));
            case 1: return vars::abar(integer(1, max_grade));
            case 2: return vars::b(integer(0, max_grade));
            case 3: return vars::bbar(integer(1, max_grade));
            case 4: return vars::z;
            case 5: return vars::u;
            case 6: return vars::v;
            default: return vars::wbar;
        }
    }

    Monomial monomial(int max_grade, int max_factors = 3) {
        Monomial m;
        for (int i = integer(0, max_factors); i > 0; --i) {
            const VarId var = variable(max_grade);
            const int e = var.invertible() ? integer(-3, 3) : integer(1, 3);
            if (e != 0) m = m * Monomial(var, e);
        }
        return m;
    }

    Poly poly(int max_grade = 3, int max_terms = 5) {
        std::vector<Poly::Term> terms;
        for (int i = integer(0, max_terms); i > 0; --i) terms.push_back({monomial(max_grade), rational()});
        return Poly::from_terms(std::move(terms));
    }

    /// Numeric coefficients with sum_{k>=1} (k+1)|a_k| < a_0, so f is univalent.
    CoefficientVector univalent(int n) {
        std::vector<cd> a(static_cast<std::size_t>(n) + 1);
        a[0] = real(0.5, 2.0);
        double budget = 0.9 * a[0].real();
        for (int k = 1; k <= n; ++k) {
            const double r = real(0.0, budget / (k + 1)) * 0.8;
            a[static_cast<std::size_t>(k)] = std::polar(r, real(0.0, 6.283185307179586));
            budget -= (k + 1) * r;
        }
        return CoefficientVector::numeric(std::move(a));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Roots of a complex polynomial given lowest coefficient first (Durand-Kerner).
inline std::vector<cd> roots(std::vector<cd> c) {
    while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
    const std::size_t deg = c.size() - 1;
    for (auto& x : c) x /= c[deg];
    std::vector<cd> z(deg);
    for (std::size_t i = 0; i < deg; ++i) z[i] = std::pow(cd(0.4, 0.9), static_cast<double>(i));
    for (int iter = 0; iter < 500; ++iter) {
        for (std::size_t i = 0; i < deg; ++i) {
            cd p = 0;
            for (std::size_t k = deg + 1; k-- > 0;) p = p * z[i] + c[k];
            cd q = 1;
            for (std::size_t j = 0; j < deg; ++j) {
                if (j != i) q *= z[i] - z[j];
            }
            z[i] -= p / q;
        }
    }
    return z;
}

inline cd horner(const std::vector<cd>& c, cd x) {
    cd r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

/// Res(sum b_k z^{-k}, sum a_k z^k) as prod over zeros w of sum b_k w^{n-k}
/// of (sum a_k w^k) / a_0: the second function evaluated on the divisor.
inline cd resultant_by_roots(const std::vector<cd>& b, const std::vector<cd>& a) {
    const std::size_t n = b.size() - 1;
    std::vector<cd> btilde(n + 1);
    for (std::size_t k = 0; k <= n; ++k) btilde[n - k] = b[k];
    cd r = 1;
    if (n == 0) return r;
    for (cd w : roots(btilde)) r *= horner(a, w) / a[0];
    return r;
}

/// d phi_k / d a_j by differentiating the exact generalized moments, with
/// a_{-j} standing for abar_j. Independent of the residue/U factorization.
inline PolyMatrix jacobian_by_derivation(int n, PhiFamily family) {
    const auto f = CoefficientVector::symbolic(n);
    PolyMatrix m(2 * n + 1, 2 * n + 1);
    for (int k = -n; k <= n; ++k) {
        const Poly phi = generalized_moment_exact(f, phi_family(family, k));
        for (int j = -n; j <= n; ++j) {
            const VarId x = j < 0 ? vars::abar(-j) : vars::a(j);
            m(k + n, j + n) = derive(phi, x);
        }
    }
    return m;
}

} // namespace hmc::test

#endif
