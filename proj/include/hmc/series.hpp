#ifndef HMC_SERIES_HPP
#define HMC_SERIES_HPP

#include <complex>
#include <vector>

#include "hmc/poly.hpp"

namespace hmc {

enum class CoefficientMode { Symbolic, Numeric };

/// Truncated map f_n(z) = sum_{k=0}^n a_k z^{k+1}.
///
/// Symbolic mode stores exact coefficients as polynomials: the variables
/// a_k / abar_k for a generic curve, or rational constants for an exact
/// evaluation point (then a_k and abar_k are independent numbers). Numeric
/// mode stores complex doubles with a_0 real and positive.
class CoefficientVector {
public:
    static CoefficientVector symbolic(int n);
    /// Exact coefficients; a[0] == abar[0] is required and must be a unit.
    static CoefficientVector exact(std::vector<Poly> a, std::vector<Poly> abar);
    static CoefficientVector numeric(std::vector<std::complex<double>> a);

    int n() const { return n_; }
    CoefficientMode mode() const { return mode_; }
    bool is_symbolic() const { return mode_ == CoefficientMode::Symbolic; }

    const Poly& a(int k) const;
    const Poly& abar(int k) const;
    const std::vector<std::complex<double>>& values() const;

    /// Same curve with the roles of a and abar exchanged (f -> conj(f)).
    CoefficientVector conjugated() const;
    /// Drops the top coefficients (numeric or exact).
    CoefficientVector truncated(int m) const;

private:
    int n_ = 0;
    CoefficientMode mode_ = CoefficientMode::Symbolic;
    std::vector<Poly> a_;
    std::vector<Poly> abar_;
    std::vector<std::complex<double>> values_;
};

/// f(z) as a polynomial in z.
Poly series(const CoefficientVector& f);
/// f*(z) = sum_k abar_k z^{-k-1}.
Poly series_star(const CoefficientVector& f);
/// f'(z) = sum_k (k+1) a_k z^k.
Poly series_derivative(const CoefficientVector& f);

/// z -> 1/z.
Poly reflect_z(const Poly& p);

struct LaurentWindow {
    Poly value;
    /// Set when the requested window lies entirely below the leading term z^k.
    bool below_leading_term = false;
};

/// f^k in z, exact on every exponent in [lo, hi]. For k < 0 the binomial
/// series of (1 + sum_{i>=1} a_i z^i / a_0)^k is carried to order hi - k,
/// with a_0 inverted.
LaurentWindow laurent_power(const CoefficientVector& f, int k, int lo, int hi);

/// (f*)^k in z, exact on every exponent in [lo, hi].
LaurentWindow laurent_power_star(const CoefficientVector& f, int k, int lo, int hi);

/// Constant term in z of p * q without forming the full product.
Poly constant_term_of_product(const Poly& p, const Poly& q);

/// Generalized binomial coefficient k(k-1)...(k-j+1)/j!.
Rational binomial(int k, int j);

} // namespace hmc

#endif
