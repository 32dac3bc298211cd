#ifndef HMC_NUMERIC_HPP
#define HMC_NUMERIC_HPP

#include <complex>
#include <map>
#include <vector>

#include "hmc/moment_map.hpp"
#include "hmc/poly.hpp"
#include "hmc/series.hpp"

namespace hmc {

struct Assignment {
    std::map<VarId, std::complex<double>> values;

    /// Sets var and its conjugate partner (A/ABar, B/BBar).
    void set_pair(VarId var, std::complex<double> value);
};

/// a_k -> values[k], abar_k -> conj(values[k]).
Assignment assignment_of(const CoefficientVector& f);

/// Compensated sum over the terms of p. HMC_PRECISION_BITS above 53
/// switches the accumulation to long double.
std::complex<double> eval(const Poly& p, const Assignment& a);

struct QuadratureConfig {
    int nodes = 256;
    double tolerance = 1e-10;
};

struct QuadratureResult {
    std::complex<double> value;
    /// |S_M - S_2M|
    double discrepancy = 0.0;
    int nodes = 0;
};

/// Trapezoid rule on |z| = 1 for CT_z(z f' Phi(f, f*)), with f* = conj(f)
/// on the circle. Uses M and 2M nodes and returns the 2M value.
QuadratureResult quadrature_generalized(const CoefficientVector& f, const PhiSpec& phi,
                                        const QuadratureConfig& cfg = {});
QuadratureResult quadrature_moment(const CoefficientVector& f, int k, const QuadratureConfig& cfg = {});

/// Central differences of phi_k(f + t z h), k = -n..n, with abar moving as
/// conj(a). h has length n+1 and real h_0.
std::vector<std::complex<double>> fd_directional(const CoefficientVector& f, PhiFamily family,
                                                 const std::vector<std::complex<double>>& h, double step,
                                                 const QuadratureConfig& cfg = {});

/// The extended direction (h_{-n}, ..., h_n) with h_{-j} = conj(h_j).
std::vector<std::complex<double>> extend_direction(const std::vector<std::complex<double>>& h);

/// Winding number of f(z)/z around |z| = 1 is zero and min |f(z)/z| > 1e-9.
bool univalence_guard(const CoefficientVector& f);

} // namespace hmc

#endif
