#include "hmc/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "hmc/error.hpp"
#include "hmc/parallel.hpp"

namespace hmc {

void Assignment::set_pair(VarId var, std::complex<double> value) {
    values[var] = value;
    if (var.star() != var) values[var.star()] = std::conj(value);
}

Assignment assignment_of(const CoefficientVector& f) {
    Assignment a;
    const auto& vals = f.values();
    for (int k = 0; k <= f.n(); ++k) a.set_pair(vars::a(k), vals[static_cast<std::size_t>(k)]);
    return a;
}

namespace {

int precision_bits() {
    if (const char* env = std::getenv("HMC_PRECISION_BITS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
        }
    }
    return 53;
}

template <class T>
std::complex<T> ipow(std::complex<T> x, int e) {
    if (e < 0) {
        x = T(1) / x;
        e = -e;
    }
    std::complex<T> r(1);
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

// Neumaier summation, componentwise.
template <class T>
struct Compensated {
    T sum = 0, carry = 0;
    void add(T x) {
        const T t = sum + x;
        carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    T value() const { return sum + carry; }
};

template <class T>
std::complex<double> eval_as(const Poly& p, const Assignment& a) {
    Compensated<T> re, im;
    for (const auto& t : p.terms()) {
        std::complex<T> term(static_cast<T>(t.coeff.get_num().get_d()) /
                             static_cast<T>(t.coeff.get_den().get_d()));
        for (const auto& factor : t.mono.factors()) {
            const VarId var = factor.var();
            auto it = a.values.find(var);
            if (it == a.values.end()) throw Error(ErrorCode::UnassignedVariable, var.name());
            term *= ipow(std::complex<T>(it->second), factor.exp);
        }
        re.add(term.real());
        im.add(term.imag());
    }
    return {static_cast<double>(re.value()), static_cast<double>(im.value())};
}

std::complex<double> pairwise_sum(const std::complex<double>* x, std::size_t count) {
    if (count <= 8) {
        std::complex<double> s = 0;
        for (std::size_t i = 0; i < count; ++i) s += x[i];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, count - half);
}

using cd = std::complex<double>;

cd horner(const std::vector<cd>& c, cd z) {
    cd r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

cd trapezoid(const std::vector<cd>& a, const PhiSpec& phi, int nodes) {
    // f(z)/z and f'(z) coefficient lists
    std::vector<cd> fpc(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) fpc[k] = static_cast<double>(k + 1) * a[k];
    std::vector<cd> samples(static_cast<std::size_t>(nodes));
    parallel_for(samples.size(), [&](std::size_t j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / nodes;
        const cd zj = std::polar(1.0, theta);
        const cd fz = zj * horner(a, zj);
        const cd fs = std::conj(fz);
        cd kernel = 0;
        for (const auto& t : phi.terms) {
            kernel += t.c.get_d() * ipow(fz, t.p) * ipow(fs, t.q);
        }
        samples[j] = zj * horner(fpc, zj) * kernel;
    });
    return pairwise_sum(samples.data(), samples.size()) / static_cast<double>(nodes);
}

} // namespace

std::complex<double> eval(const Poly& p, const Assignment& a) {
    if (precision_bits() > 53) return eval_as<long double>(p, a);
    return eval_as<double>(p, a);
}

QuadratureResult quadrature_generalized(const CoefficientVector& f, const PhiSpec& phi,
                                        const QuadratureConfig& cfg) {
    phi.validate();
    const int n = f.n();
    int reach = 0;
    bool negative = false;
    for (const auto& t : phi.terms) {
        reach = std::max(reach, std::abs(t.p) + std::abs(t.q));
        negative = negative || t.p < 0 || t.q < 0;
    }
    if (cfg.nodes < 16 || cfg.nodes < 2 * (n + 1) + reach * (n + 1) + 2) {
        throw Error(ErrorCode::InvalidArgument, "too few quadrature nodes: " + std::to_string(cfg.nodes));
    }
    if (!(cfg.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    if (negative && !univalence_guard(f)) {
        throw Error(ErrorCode::GuardFailed, "f(z)/z vanishes in the closed unit disk");
    }
    const cd coarse = trapezoid(f.values(), phi, cfg.nodes);
    const cd fine = trapezoid(f.values(), phi, 2 * cfg.nodes);
    QuadratureResult r{fine, std::abs(fine - coarse), 2 * cfg.nodes};
    if (r.discrepancy > cfg.tolerance) {
        throw Error(ErrorCode::NonConvergent,
                    "M/2M discrepancy " + std::to_string(r.discrepancy) + " exceeds tolerance");
    }
    return r;
}

QuadratureResult quadrature_moment(const CoefficientVector& f, int k, const QuadratureConfig& cfg) {
    return quadrature_generalized(f, phi_family(PhiFamily::Complete, k), cfg);
}

std::vector<std::complex<double>> extend_direction(const std::vector<std::complex<double>>& h) {
    const int n = static_cast<int>(h.size()) - 1;
    std::vector<cd> out(static_cast<std::size_t>(2 * n + 1));
    for (int j = -n; j <= n; ++j) {
        const cd hj = h[static_cast<std::size_t>(std::abs(j))];
        out[static_cast<std::size_t>(j + n)] = j < 0 ? std::conj(hj) : hj;
    }
    return out;
}

std::vector<std::complex<double>> fd_directional(const CoefficientVector& f, PhiFamily family,
                                                 const std::vector<std::complex<double>>& h, double step,
                                                 const QuadratureConfig& cfg) {
    const int n = f.n();
    if (static_cast<int>(h.size()) != n + 1) throw Error(ErrorCode::InvalidArgument, "direction length must be n+1");
    if (h[0].imag() != 0.0) throw Error(ErrorCode::InvalidArgument, "h_0 must be real");
    if (!(step >= 1e-7 && step <= 1e-3)) throw Error(ErrorCode::InvalidArgument, "step outside [1e-7, 1e-3]");

    auto shifted = [&](double t) {
        std::vector<cd> a = f.values();
        for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k)] += t * h[static_cast<std::size_t>(k)];
        return CoefficientVector::numeric(std::move(a));
    };
    const auto plus = shifted(step);
    const auto minus = shifted(-step);
    std::vector<cd> out;
    for (int k = -n; k <= n; ++k) {
        const PhiSpec phi = phi_family(family, k);
        const cd up = quadrature_generalized(plus, phi, cfg).value;
        const cd down = quadrature_generalized(minus, phi, cfg).value;
        out.push_back((up - down) / (2.0 * step));
    }
    return out;
}

bool univalence_guard(const CoefficientVector& f) {
    const auto& a = f.values();
    for (int nodes = 256; nodes <= (1 << 20); nodes *= 2) {
        double min_mod = INFINITY;
        double total = 0.0;
        bool coarse = false;
        cd prev = horner(a, 1.0);
        for (int j = 1; j <= nodes; ++j) {
            const cd zj = std::polar(1.0, 2.0 * std::numbers::pi * j / nodes);
            const cd g = horner(a, zj);
            min_mod = std::min(min_mod, std::abs(g));
            const double step = std::arg(g / prev);
            if (std::abs(step) > std::numbers::pi / 2) coarse = true;
            total += step;
            prev = g;
        }
        if (min_mod <= 1e-9) return false;
        if (coarse) continue;
        const long winding = std::lround(total / (2.0 * std::numbers::pi));
        return winding == 0;
    }
    return false;
}

} // namespace hmc
