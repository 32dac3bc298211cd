#include "hmc/series.hpp"

#include "hmc/error.hpp"

namespace hmc {

using vars::z;

CoefficientVector CoefficientVector::symbolic(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation grade");
    CoefficientVector f;
    f.n_ = n;
    f.mode_ = CoefficientMode::Symbolic;
    for (int k = 0; k <= n; ++k) {
        f.a_.emplace_back(vars::a(k));
        f.abar_.emplace_back(vars::abar(k));
    }
    return f;
}

CoefficientVector CoefficientVector::exact(std::vector<Poly> a, std::vector<Poly> abar) {
    if (a.empty() || a.size() != abar.size()) {
        throw Error(ErrorCode::InvalidArgument, "coefficient lists must be nonempty and equal length");
    }
    if (!(a[0] == abar[0])) throw Error(ErrorCode::InvalidArgument, "a0 must be real (a0 == abar0)");
    if (!a[0].is_unit()) throw Error(ErrorCode::NonInvertible, "a0 must be invertible");
    CoefficientVector f;
    f.n_ = static_cast<int>(a.size()) - 1;
    f.mode_ = CoefficientMode::Symbolic;
    f.a_ = std::move(a);
    f.abar_ = std::move(abar);
    return f;
}

CoefficientVector CoefficientVector::numeric(std::vector<std::complex<double>> a) {
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
    if (a[0].imag() != 0.0 || !(a[0].real() > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "a0 must be real and positive");
    }
    CoefficientVector f;
    f.n_ = static_cast<int>(a.size()) - 1;
    f.mode_ = CoefficientMode::Numeric;
    f.values_ = std::move(a);
    return f;
}

const Poly& CoefficientVector::a(int k) const {
    if (mode_ != CoefficientMode::Symbolic) throw Error(ErrorCode::InvalidArgument, "numeric coefficients");
    return a_.at(static_cast<std::size_t>(k));
}

const Poly& CoefficientVector::abar(int k) const {
    if (mode_ != CoefficientMode::Symbolic) throw Error(ErrorCode::InvalidArgument, "numeric coefficients");
    return abar_.at(static_cast<std::size_t>(k));
}

const std::vector<std::complex<double>>& CoefficientVector::values() const {
    if (mode_ != CoefficientMode::Numeric) throw Error(ErrorCode::InvalidArgument, "symbolic coefficients");
    return values_;
}

CoefficientVector CoefficientVector::conjugated() const {
    CoefficientVector f = *this;
    std::swap(f.a_, f.abar_);
    for (auto& c : f.values_) c = std::conj(c);
    return f;
}

CoefficientVector CoefficientVector::truncated(int m) const {
    if (m < 0 || m > n_) throw Error(ErrorCode::InvalidArgument, "truncation grade out of range");
    CoefficientVector f = *this;
    f.n_ = m;
    if (!f.a_.empty()) {
        f.a_.resize(static_cast<std::size_t>(m) + 1);
        f.abar_.resize(static_cast<std::size_t>(m) + 1);
    }
    if (!f.values_.empty()) f.values_.resize(static_cast<std::size_t>(m) + 1);
    return f;
}

Poly series(const CoefficientVector& f) {
    Poly out;
    for (int k = 0; k <= f.n(); ++k) out += f.a(k) * Poly(z, k + 1);
    return out;
}

Poly series_star(const CoefficientVector& f) {
    Poly out;
    for (int k = 0; k <= f.n(); ++k) out += f.abar(k) * Poly(z, -k - 1);
    return out;
}

Poly series_derivative(const CoefficientVector& f) {
    Poly out;
    for (int k = 0; k <= f.n(); ++k) out += Rational(k + 1) * f.a(k) * Poly(z, k);
    return out;
}

Poly reflect_z(const Poly& p) {
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        const int e = t.mono.exponent(z);
        Monomial m = t.mono.without(z);
        if (e != 0) m = m * Monomial(z, -e);
        out.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(std::move(out));
}

Rational binomial(int k, int j) {
    Rational r = 1;
    for (int i = 0; i < j; ++i) {
        Rational step(k - i, i + 1);
        step.canonicalize();
        r *= step;
    }
    return r;
}

LaurentWindow laurent_power(const CoefficientVector& f, int k, int lo, int hi) {
    if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty window");
    if (hi < k) return {Poly{}, true};

    const int order = hi - k;
    const Poly a0_inv = f.a(0).unit_inverse();
    Poly t;
    for (int i = 1; i <= f.n() && i <= order; ++i) t += f.a(i) * a0_inv * Poly(z, i);

    // sum_j binom(k, j) t^j, truncated at z^order
    Poly sum(1L);
    Poly t_power(1L);
    const int terms = k >= 0 ? std::min(order, k) : order;
    for (int j = 1; j <= terms; ++j) {
        t_power = mul_window(t_power, t, z, 0, order);
        if (t_power.is_zero()) break;
        sum += binomial(k, j) * t_power;
    }
    Poly value = f.a(0).pow(k) * Poly(z, k) * sum;
    return {window(value, z, lo, hi), false};
}

LaurentWindow laurent_power_star(const CoefficientVector& f, int k, int lo, int hi) {
    if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty window");
    auto reflected = laurent_power(f.conjugated(), k, -hi, -lo);
    return {reflect_z(reflected.value), reflected.below_leading_term};
}

Poly constant_term_of_product(const Poly& p, const Poly& q) {
    return coefficient_of(mul_window(p, q, z, 0, 0), z, 0);
}

} // namespace hmc
