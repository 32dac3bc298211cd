#include "hmc/moment_map.hpp"

#include <climits>

#include "hmc/error.hpp"
#include "hmc/numeric.hpp"
#include "hmc/parallel.hpp"
#include "hmc/resultants.hpp"

namespace hmc {

using vars::z;

std::string_view to_string(PhiFamily family) {
    return family == PhiFamily::Complete ? "complete" : "conjugate";
}

std::string_view to_string(Ordering ordering) {
    return ordering == Ordering::Display ? "display" : "natural";
}

void PhiSpec::validate() const {
    for (const auto& t : terms) {
        if (t.p < 0 && t.q < 0) {
            throw Error(ErrorCode::MixedNegativePowers, "term with negative powers of both zeta and zetabar");
        }
    }
}

PhiSpec phi_family(PhiFamily family, int k) {
    if (family == PhiFamily::Conjugate && k < 0) {
        Rational c(1, 1 - k);
        c.canonicalize();
        return {{{0, 1 - k, c}}};
    }
    return {{{k, 1, Rational(1)}}};
}

PhiSpec derivative_zbar(const PhiSpec& phi) {
    PhiSpec out;
    for (const auto& t : phi.terms) {
        if (t.q != 0) out.terms.push_back({t.p, t.q - 1, t.c * t.q});
    }
    return out;
}

namespace {

constexpr int unbounded = INT_MAX / 4;

} // namespace

Poly phi_on_window(const CoefficientVector& f, const PhiSpec& phi, int lo, int hi) {
    phi.validate();
    if (lo > hi) return {};
    const int deg = f.n() + 1;
    Poly out;
    for (const auto& t : phi.terms) {
        // f^p lives on [p, p*deg] (upward unbounded if p < 0);
        // f*^q on [-q*deg, -q] (downward unbounded if q < 0).
        const int f_lo = t.p;
        const int f_hi = t.p >= 0 ? t.p * deg : unbounded;
        const int g_lo = t.q >= 0 ? -t.q * deg : -unbounded;
        const int g_hi = -t.q;
        const int need_f_lo = std::max(f_lo, lo - g_hi);
        const int need_f_hi = t.p >= 0 ? f_hi : hi - g_lo;
        const int need_g_hi = std::min(g_hi, hi - f_lo);
        const int need_g_lo = t.q >= 0 ? g_lo : lo - f_hi;
        if (need_f_lo > need_f_hi || need_g_lo > need_g_hi) continue;
        const auto fp = laurent_power(f, t.p, need_f_lo, need_f_hi);
        const auto gq = laurent_power_star(f, t.q, need_g_lo, need_g_hi);
        out += t.c * mul_window(fp.value, gq.value, z, lo, hi);
    }
    return out;
}

Poly generalized_moment_exact(const CoefficientVector& f, const PhiSpec& phi) {
    // z f' spans z^1 .. z^{n+1}
    const Poly zfp = Poly(z) * series_derivative(f);
    return constant_term_of_product(zfp, phi_on_window(f, phi, -f.n() - 1, -1));
}

MomentValue generalized_moment(const CoefficientVector& f, const PhiSpec& phi) {
    if (f.is_symbolic()) return generalized_moment_exact(f, phi);
    phi.validate();
    if (!univalence_guard(f)) throw Error(ErrorCode::GuardFailed, "f(z)/z vanishes in the closed unit disk");
    return eval(generalized_moment_exact(CoefficientVector::symbolic(f.n()), phi), assignment_of(f));
}

Poly DerivedCoefficients::at(int m) const {
    const auto n = static_cast<int>(b.size()) - 1;
    if (m > n || m < -n) return {};
    return m >= 0 ? b[static_cast<std::size_t>(m)] : bbar[static_cast<std::size_t>(-m)];
}

DerivedCoefficients derived_coefficients(const CoefficientVector& f) {
    DerivedCoefficients d;
    for (int k = 0; k <= f.n(); ++k) {
        d.b.push_back(Rational(k + 1) * f.a(k));
        d.bbar.push_back(Rational(k + 1) * f.abar(k));
    }
    return d;
}

namespace {

/// Rows k = -n..n of the residue matrix, each as a window [-n, n] in z.
std::vector<Poly> residue_rows(const CoefficientVector& f, PhiFamily family, ResidueVariant variant) {
    const int n = f.n();
    std::vector<Poly> rows(static_cast<std::size_t>(2 * n + 1));
    parallel_for(rows.size(), [&](std::size_t r) {
        const int k = static_cast<int>(r) - n;
        PhiSpec phi = phi_family(family, k);
        if (variant == ResidueVariant::Derivative) phi = derivative_zbar(phi);
        rows[r] = phi_on_window(f, phi, -n, n);
    });
    return rows;
}

PolyMatrix to_matrix(const std::vector<Poly>& rows, int n) {
    PolyMatrix m(2 * n + 1, 2 * n + 1);
    for (int r = 0; r <= 2 * n; ++r) {
        for (auto& [e, c] : split_by(rows[static_cast<std::size_t>(r)], z)) {
            if (e >= -n && e <= n) m(r, e + n) = c;
        }
    }
    return m;
}

/// f' h*_j + f'* h_j for the j-th basis perturbation.
Poly basis_variation(const CoefficientVector& f, int j) {
    const Poly fp = series_derivative(f);
    if (j < 0) return fp * Poly(z, j);
    const Poly fps = reflect_z(series_derivative(f.conjugated()));
    if (j > 0) return fps * Poly(z, j);
    return fp + fps;
}

} // namespace

PolyMatrix residue_matrix(const CoefficientVector& f, PhiFamily family, ResidueVariant variant) {
    return to_matrix(residue_rows(f, family, variant), f.n());
}

PolyMatrix u_matrix(const CoefficientVector& f, Ordering ordering) {
    const int n = f.n();
    PolyMatrix m(2 * n + 1, 2 * n + 1);
    for (int j = -n; j <= n; ++j) {
        const Poly g = basis_variation(f, j);
        for (int i = -n; i <= n; ++i) m(i + n, j + n) = coefficient_of(g, z, -i);
    }
    return ordering == Ordering::Display ? m.reversed_rows() : m;
}

PolyMatrix dphi_matrix(const CoefficientVector& f, PhiFamily family) {
    const int n = f.n();
    const auto rows = residue_rows(f, family, ResidueVariant::Derivative);
    PolyMatrix m(2 * n + 1, 2 * n + 1);
    for (int j = -n; j <= n; ++j) {
        const Poly g = basis_variation(f, j);
        for (int k = -n; k <= n; ++k) {
            m(k + n, j + n) = constant_term_of_product(g, rows[static_cast<std::size_t>(k + n)]);
        }
    }
    return m;
}

ColumnRelation column_relation_check(const CoefficientVector& f) {
    const int n = f.n();
    const auto d = derived_coefficients(f);
    const PolyMatrix u = u_matrix(f, Ordering::Display);
    ColumnRelation rel;
    rel.passed = true;
    for (int r = 0; r <= 2 * n; ++r) {
        Poly lhs = d.at(0) * u(r, n);
        for (int i = 1; i <= n; ++i) {
            lhs += d.at(-i) * u(r, n - i);
            lhs -= d.at(i) * u(r, n + i);
        }
        // Z = (b_{-n}, ..., b_{-1}, b_0, 0, ..., 0)
        const Poly zr = r <= n ? d.at(r - n) : Poly{};
        Poly res = lhs - Rational(2) * d.at(0) * zr;
        if (!res.is_zero()) rel.passed = false;
        rel.residual.push_back(std::move(res));
    }
    return rel;
}

Poly self_resultant(const CoefficientVector& f) {
    const auto d = derived_coefficients(f);
    return meromorphic_resultant(d.bbar, d.b);
}

namespace {

Poly a0_power(const CoefficientVector& f, int e) { return f.a(0).pow(e); }

} // namespace

JacobianReport jacobian_identity_report(const CoefficientVector& f, PhiFamily family, Ordering ordering) {
    const int n = f.n();
    JacobianReport r;
    r.n = n;
    r.family = family;
    r.ordering = ordering;

    PolyMatrix v = residue_matrix(f, family);
    PolyMatrix phi = dphi_matrix(f, family);
    PolyMatrix u = u_matrix(f, Ordering::Natural);
    if (ordering == Ordering::Display) {
        v = v.reversed_rows().reversed_cols();
        phi = phi.reversed_rows();
        u = u.reversed_rows();
    }
    r.v = std::move(v);
    r.phi_mat = std::move(phi);
    r.u_mat = std::move(u);

    r.det_phi = determinant(r.phi_mat);
    r.det_v = determinant(r.v);
    r.det_u = determinant(r.u_mat);
    r.res_factor = self_resultant(f);
    r.predicted = Rational(2) * a0_power(f, 2 * n + 1) * r.det_v * r.res_factor;

    if (r.det_phi == r.predicted) {
        r.sign = 1;
    } else if (r.det_phi == -r.predicted) {
        r.sign = -1;
    }
    r.residual = r.det_phi - Rational(r.sign) * r.predicted;
    r.passed = r.residual.is_zero();

    const int v_exp = family == PhiFamily::Complete ? 0 : n * n + n;
    const int factor_exp = family == PhiFamily::Complete ? 2 * n + 1 : n * n + 3 * n + 1;
    const Poly closed = Rational(2) * a0_power(f, factor_exp) * r.res_factor;
    r.corollary_passed = r.det_v == a0_power(f, v_exp) &&
                         (r.det_phi == closed || r.det_phi == -closed);

    r.det_v_literal = determinant(residue_matrix(f, family, ResidueVariant::Literal));
    return r;
}

JacobianReport jacobian_identity_report(int n, PhiFamily family, Ordering ordering) {
    return jacobian_identity_report(CoefficientVector::symbolic(n), family, ordering);
}

CorollaryRatio corollary_ratio_check(const CoefficientVector& f) {
    const Poly complete = determinant(dphi_matrix(f, PhiFamily::Complete));
    const Poly conjugate = determinant(dphi_matrix(f, PhiFamily::Conjugate));
    CorollaryRatio out;
    if (auto q = conjugate.exact_quotient(complete)) {
        out.ratio = *q;
        out.passed = out.ratio == a0_power(f, f.n() * f.n() + f.n());
    }
    return out;
}

} // namespace hmc
