#ifndef HMC_MOMENTS_HPP
#define HMC_MOMENTS_HPP

#include <complex>
#include <map>
#include <string_view>
#include <variant>

#include "hmc/poly.hpp"
#include "hmc/series.hpp"

namespace hmc {

enum class MomentMethod { ConstantTerm, Richardson, ExpTransform, Quadrature };

std::string_view to_string(MomentMethod method);

using MomentValue = std::variant<Poly, std::complex<double>>;

struct MomentTable {
    int n = 0;
    MomentMethod method = MomentMethod::ConstantTerm;
    std::map<int, MomentValue> entries;
};

/// mu_k(f_n) = CT_z(z f' f* f^k). Numeric coefficients require the
/// univalence guard and are evaluated from the exact grade-n moment.
MomentValue moment_ct(const CoefficientVector& f, int k);
Poly moment_ct_exact(const CoefficientVector& f, int k);

/// Richardson's sum over (s_0..s_k) in [0,n]^{k+1} of
/// (s_0+1) a_{s_0}...a_{s_k} abar_{s_0+...+s_k+k}, with abar_m = 0 for m > n.
MomentValue moment_richardson(const CoefficientVector& f, int k);
Poly moment_richardson_exact(const CoefficientVector& f, int k);

/// Smallest e >= 0 such that a0^e mu_k(f_n) has no negative power of a0.
int min_clearing_exponent(const CoefficientVector& f, int k);

/// S(f_n, zeta) = sum_k mu_k zeta^{-k-1}, stored for zeta exponents
/// -n-1 .. depth (so moments -depth-1 <= k <= n).
struct SchwarzSeries {
    int n = 0;
    int depth = 0;
    std::map<int, Poly> coefficients;  // zeta exponent -> coefficient

    Poly as_poly() const;
};

SchwarzSeries schwarz_series(const CoefficientVector& f, int depth);

struct SchwarzCheck {
    bool passed = false;
    std::map<int, Poly> residuals;  // z exponent -> residual
};

/// For each m in [lo, hi], sum_{k=-m-1}^{n} mu_k [z^m] f^{-k-1} against [z^m] f*.
SchwarzCheck schwarz_identity_check(const CoefficientVector& f, int lo, int hi);

/// Reads mu_0..mu_n off the 1/wbar coefficient of the elimination function
/// with b = star(a), u = z, v = wbar.
MomentTable exp_transform_moments(const CoefficientVector& f);

struct ExpTransformExpansion {
    Poly constant;        // wbar^0 coefficient, expected 1
    Poly first_order;     // wbar^-1 coefficient, expected -sum mu_k z^{-k-1}
};
ExpTransformExpansion exp_transform_expansion(const CoefficientVector& f);

} // namespace hmc

#endif
