#include "hmc/moments.hpp"

#include <functional>

#include "hmc/error.hpp"
#include "hmc/numeric.hpp"
#include "hmc/resultants.hpp"

namespace hmc {

using vars::z;

std::string_view to_string(MomentMethod method) {
    switch (method) {
        case MomentMethod::ConstantTerm: return "ct";
        case MomentMethod::Richardson: return "richardson";
        case MomentMethod::ExpTransform: return "exptransform";
        case MomentMethod::Quadrature: return "quadrature";
    }
    return "?";
}

namespace {

MomentValue evaluate_numeric(const CoefficientVector& f, const Poly& exact) {
    return eval(exact, assignment_of(f));
}

void require_guard(const CoefficientVector& f) {
    if (!univalence_guard(f)) {
        throw Error(ErrorCode::GuardFailed, "f(z)/z vanishes in the closed unit disk");
    }
}

} // namespace

Poly moment_ct_exact(const CoefficientVector& f, int k) {
    const int n = f.n();
    // z f' f* spans z^{-n} .. z^{n}
    const Poly core = Poly(z) * series_derivative(f) * series_star(f);
    const auto power = laurent_power(f, k, -n, n);
    if (power.below_leading_term) return {};
    return constant_term_of_product(core, power.value);
}

MomentValue moment_ct(const CoefficientVector& f, int k) {
    if (f.is_symbolic()) return moment_ct_exact(f, k);
    require_guard(f);
    return evaluate_numeric(f, moment_ct_exact(CoefficientVector::symbolic(f.n()), k));
}

Poly moment_richardson_exact(const CoefficientVector& f, int k) {
    if (k < 0) throw Error(ErrorCode::NegativeIndex, "Richardson's formula needs k >= 0");
    const int n = f.n();
    Poly sum;
    std::vector<int> s(static_cast<std::size_t>(k) + 1);
    // Depth-first over multi-indices, pruning once s_0+...+s_j+k exceeds n.
    std::function<void(int, int, const Poly&)> walk = [&](int j, int partial, const Poly& product) {
        if (j > k) {
            sum += Rational(s[0] + 1) * product * f.abar(partial + k);
            return;
        }
        for (int sj = 0; sj <= n && partial + sj + k <= n; ++sj) {
            s[static_cast<std::size_t>(j)] = sj;
            walk(j + 1, partial + sj, product * f.a(sj));
        }
    };
    walk(0, 0, Poly(1L));
    return sum;
}

MomentValue moment_richardson(const CoefficientVector& f, int k) {
    if (f.is_symbolic()) return moment_richardson_exact(f, k);
    return evaluate_numeric(f, moment_richardson_exact(CoefficientVector::symbolic(f.n()), k));
}

int min_clearing_exponent(const CoefficientVector& f, int k) {
    if (!f.is_symbolic()) throw Error(ErrorCode::InvalidArgument, "symbolic coefficients required");
    const auto [lo, hi] = exponent_range(moment_ct_exact(f, k), vars::a(0));
    return lo < 0 ? -lo : 0;
}

Poly SchwarzSeries::as_poly() const {
    Poly out;
    for (const auto& [e, c] : coefficients) out += c * Poly(vars::zeta, e);
    return out;
}

SchwarzSeries schwarz_series(const CoefficientVector& f, int depth) {
    if (depth < 0) throw Error(ErrorCode::InvalidArgument, "negative depth");
    SchwarzSeries s;
    s.n = f.n();
    s.depth = depth;
    for (int k = -depth - 1; k <= f.n(); ++k) {
        Poly mu = moment_ct_exact(f, k);
        if (!mu.is_zero()) s.coefficients.emplace(-k - 1, std::move(mu));
    }
    return s;
}

SchwarzCheck schwarz_identity_check(const CoefficientVector& f, int lo, int hi) {
    const int n = f.n();
    if (lo < -n - 1 || lo > hi) throw Error(ErrorCode::InvalidArgument, "window must satisfy -n-1 <= lo <= hi");
    std::map<int, Poly> lhs;
    for (int k = -hi - 1; k <= n; ++k) {
        const Poly mu = moment_ct_exact(f, k);
        if (mu.is_zero()) continue;
        const auto power = laurent_power(f, -k - 1, lo, hi);
        for (auto& [m, c] : split_by(power.value, z)) lhs[m] += mu * c;
    }
    SchwarzCheck check;
    check.passed = true;
    for (int m = lo; m <= hi; ++m) {
        const Poly expected = (m >= -n - 1 && m <= -1) ? f.abar(-m - 1) : Poly{};
        Poly residual = lhs[m] - expected;
        if (!residual.is_zero()) check.passed = false;
        check.residuals.emplace(m, std::move(residual));
    }
    return check;
}

ExpTransformExpansion exp_transform_expansion(const CoefficientVector& f) {
    if (!f.is_symbolic()) throw Error(ErrorCode::InvalidArgument, "symbolic coefficients required");
    const int n = f.n();
    const Poly e = elimination_approximant(n).value;
    std::map<VarId, Poly> bindings{{vars::u, Poly(z)}, {vars::v, Poly(vars::wbar)}};
    for (int k = 0; k <= n; ++k) {
        bindings.emplace(vars::a(k), f.a(k));
        bindings.emplace(vars::b(k), f.abar(k));
    }
    const Poly transform = substitute(e, bindings);
    return {coefficient_of(transform, vars::wbar, 0), coefficient_of(transform, vars::wbar, -1)};
}

MomentTable exp_transform_moments(const CoefficientVector& f) {
    const auto expansion = exp_transform_expansion(f);
    MomentTable table;
    table.n = f.n();
    table.method = MomentMethod::ExpTransform;
    for (int k = 0; k <= f.n(); ++k) {
        table.entries.emplace(k, -coefficient_of(expansion.first_order, z, -k - 1));
    }
    return table;
}

} // namespace hmc
