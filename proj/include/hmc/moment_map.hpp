#ifndef HMC_MOMENT_MAP_HPP
#define HMC_MOMENT_MAP_HPP

#include <string_view>
#include <vector>

#include "hmc/matrix.hpp"
#include "hmc/moments.hpp"
#include "hmc/series.hpp"

namespace hmc {

/// c * zeta^p * zetabar^q
struct PhiTerm {
    int p = 0;
    int q = 0;
    Rational c;
};

/// Finite Laurent-monomial kernel Phi(zeta, zetabar). No term may have both
/// exponents negative.
struct PhiSpec {
    std::vector<PhiTerm> terms;

    void validate() const;
};

enum class PhiFamily { Complete, Conjugate };
enum class ResidueVariant { Derivative, Literal };
enum class Ordering { Display, Natural };

std::string_view to_string(PhiFamily family);
std::string_view to_string(Ordering ordering);

PhiSpec phi_family(PhiFamily family, int k);
/// d/dzetabar, term by term.
PhiSpec derivative_zbar(const PhiSpec& phi);

/// Phi(f, f*) as a Laurent polynomial in z, exact on exponents [lo, hi].
Poly phi_on_window(const CoefficientVector& f, const PhiSpec& phi, int lo, int hi);

/// CT_z(z f' Phi(f, f*)).
Poly generalized_moment_exact(const CoefficientVector& f, const PhiSpec& phi);
MomentValue generalized_moment(const CoefficientVector& f, const PhiSpec& phi);

/// b_m = (m+1) a_m and b_{-m} = (m+1) abar_m for 0 <= m <= n.
struct DerivedCoefficients {
    std::vector<Poly> b;
    std::vector<Poly> bbar;

    /// b_m for -n <= m <= n, zero outside.
    Poly at(int m) const;
};
DerivedCoefficients derived_coefficients(const CoefficientVector& f);

/// v_kj for k, j in [-n, n], stored at (k+n, j+n).
PolyMatrix residue_matrix(const CoefficientVector& f, PhiFamily family,
                          ResidueVariant variant = ResidueVariant::Derivative);

/// phi_kj with d phi_k(zh) = sum_j phi_kj h_j, where h_{-j} = conj(h_j).
PolyMatrix dphi_matrix(const CoefficientVector& f, PhiFamily family);

/// u_ij = CT_z[(f' h*_j + f'* h_j) z^i]. Natural rows run i = -n..n; the
/// display ordering reverses them (top-left b_0, centre 2 b_0).
PolyMatrix u_matrix(const CoefficientVector& f, Ordering ordering = Ordering::Display);

struct ColumnRelation {
    bool passed = false;
    std::vector<Poly> residual;
};

/// b_0 U_0 + sum_i b_{-i} U_{-i} - sum_i b_i U_i = 2 b_0 Z on the display matrix.
ColumnRelation column_relation_check(const CoefficientVector& f);

/// Res(f'*, f') over the derived coefficients.
Poly self_resultant(const CoefficientVector& f);

struct JacobianReport {
    int n = 0;
    PhiFamily family = PhiFamily::Complete;
    Ordering ordering = Ordering::Display;
    PolyMatrix v;
    PolyMatrix u_mat;
    PolyMatrix phi_mat;
    Poly det_phi;
    Poly det_v;
    Poly det_u;
    Poly res_factor;
    /// 2 a0^{2n+1} det(v) Res(f', f'*)
    Poly predicted;
    int sign = 1;
    Poly residual;
    bool passed = false;

    /// det v against 1 (complete) or a0^{n^2+n} (conjugate), and
    /// det phi against the matching closed-form factor times Res.
    bool corollary_passed = false;
    /// det v of the literal residue matrix, kept for comparison.
    Poly det_v_literal;
};

JacobianReport jacobian_identity_report(const CoefficientVector& f, PhiFamily family,
                                        Ordering ordering = Ordering::Display);
JacobianReport jacobian_identity_report(int n, PhiFamily family, Ordering ordering = Ordering::Display);

struct CorollaryRatio {
    bool passed = false;
    /// det phi(conjugate) / det phi(complete), if exact.
    Poly ratio;
};

/// Checks det phi(conjugate) = a0^{n^2+n} det phi(complete).
CorollaryRatio corollary_ratio_check(const CoefficientVector& f);

} // namespace hmc

#endif
