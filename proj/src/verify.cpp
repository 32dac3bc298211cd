#include "hmc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>

#include "hmc/error.hpp"
#include "hmc/moment_map.hpp"
#include "hmc/moments.hpp"
#include "hmc/resultants.hpp"

namespace hmc {

bool VerifySuiteResult::passed() const { return first_failure() == nullptr; }

const CheckResult* VerifySuiteResult::first_failure() const {
    for (const auto& c : checks) {
        if (!c.passed) return &c;
    }
    return nullptr;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"golden",      "richardson",   "vanishing",
                                                "transfinity", "elimination",  "schwarz",
                                                "exptransform", "jacobian",    "proof"};
    return names;
}

const std::vector<GoldenExpression>& golden_expressions() {
    // res2 and mum1.n2 carry the corrected signs and exponents.
    static const std::vector<GoldenExpression> g{
        {"golden.res1", "1 - a0^-1*b0^-1*a1*b1"},
        {"golden.res2",
         "1 - a0^-1*b0^-1*a1*b1 - 2*a0^-1*b0^-1*a2*b2 + a0^-1*b0^-2*b1^2*a2 + a0^-2*b0^-1*a1^2*b2"
         " - a0^-2*b0^-2*a1*b1*a2*b2 + a0^-2*b0^-2*a2^2*b2^2"},
        {"golden.eliminate0", "1 - a0*b0*u^-1*v^-1"},
        {"golden.mu0.n0", "a0^2"},
        {"golden.mu0.n1", "a0^2 + 2*a1*abar1"},
        {"golden.mu0.n2", "a0^2 + 2*a1*abar1 + 3*a2*abar2"},
        {"golden.mu0.n3", "a0^2 + 2*a1*abar1 + 3*a2*abar2 + 4*a3*abar3"},
        {"golden.mu1.n1", "a0^2*abar1"},
        {"golden.mu1.n2", "a0^2*abar1 + 3*a0*a1*abar2"},
        {"golden.mu1.n3", "a0^2*abar1 + 3*a0*a1*abar2 + 4*a0*a2*abar3 + 2*a1^2*abar3"},
        {"golden.mum1.n1", "a1 - a0^-2*a1^2*abar1"},
        {"golden.mum1.n2",
         "a1 + 2*a0^-1*a2*abar1 - a0^-2*a1^2*abar1 - 3*a0^-2*a1*a2*abar2 + a0^-3*a1^3*abar2"},
        {"golden.jacobian1", "2*a0^3 - 8*a0*a1*abar1"},
    };
    return g;
}

namespace {

Poly golden_value(const std::string& name) {
    auto f = [](int n) { return CoefficientVector::symbolic(n); };
    if (name == "golden.res1") return transfinite_resultant(1);
    if (name == "golden.res2") return transfinite_resultant(2);
    if (name == "golden.eliminate0") return elimination_approximant(0).value;
    if (name == "golden.jacobian1") {
        const auto r = jacobian_identity_report(1, PhiFamily::Complete);
        return Rational(r.sign) * r.det_phi;
    }
    const auto n = name.back() - '0';
    if (name.starts_with("golden.mu0.")) return moment_ct_exact(f(n), 0);
    if (name.starts_with("golden.mu1.")) return moment_ct_exact(f(n), 1);
    if (name.starts_with("golden.mum1.")) return moment_ct_exact(f(n), -1);
    throw Error(ErrorCode::InvalidArgument, "unknown golden check " + name);
}

// Informational text a passing check may leave behind (e.g. the measured sign).
thread_local std::string check_note;

class Runner {
public:
    explicit Runner(VerifySuiteResult& out) : out_(out) {}

    /// fn returns an empty optional on success, else the residual text.
    void check(std::string name, const std::function<std::optional<std::string>()>& fn) {
        CheckResult c;
        c.name = std::move(name);
        const auto start = std::chrono::steady_clock::now();
        check_note.clear();
        try {
            const auto failure = fn();
            c.passed = !failure;
            c.detail = failure ? *failure : check_note;
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out_.checks.push_back(std::move(c));
    }

private:
    VerifySuiteResult& out_;
};

std::optional<std::string> zero_or(const Poly& residual) {
    if (residual.is_zero()) return std::nullopt;
    return residual.to_string();
}

std::optional<std::string> equal_or(const Poly& got, const Poly& want) {
    if (got == want) return std::nullopt;
    return "got " + got.to_string() + ", expected " + want.to_string();
}

std::string tag(int n) { return ".n" + std::to_string(n); }

void golden_suite(Runner& run) {
    for (const auto& g : golden_expressions()) {
        run.check(g.name, [&] { return equal_or(golden_value(g.name), Poly::parse(g.expected)); });
    }
}

void richardson_suite(Runner& run, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        run.check("richardson" + tag(n), [n]() -> std::optional<std::string> {
            const auto f = CoefficientVector::symbolic(n);
            for (int k = 0; k <= n; ++k) {
                if (auto bad = equal_or(moment_richardson_exact(f, k), moment_ct_exact(f, k))) {
                    return "k=" + std::to_string(k) + ": " + *bad;
                }
            }
            return std::nullopt;
        });
    }
}

void vanishing_suite(Runner& run, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        run.check("vanishing" + tag(n), [n]() -> std::optional<std::string> {
            const auto f = CoefficientVector::symbolic(n);
            for (int k = n + 1; k <= n + 3; ++k) {
                if (auto bad = zero_or(moment_ct_exact(f, k))) return "k=" + std::to_string(k) + ": " + *bad;
            }
            return std::nullopt;
        });
    }
}

void transfinity_suite(Runner& run, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        run.check("transfinity.moments" + tag(n), [n]() -> std::optional<std::string> {
            const auto hi = CoefficientVector::symbolic(n);
            const auto lo = CoefficientVector::symbolic(n - 1);
            for (int k = -4; k <= 4; ++k) {
                if (auto bad = equal_or(project(moment_ct_exact(hi, k), n - 1), moment_ct_exact(lo, k))) {
                    return "k=" + std::to_string(k) + ": " + *bad;
                }
            }
            return std::nullopt;
        });
        run.check("transfinity.resultant" + tag(n), [n] {
            return equal_or(project(transfinite_resultant(n), n - 1), transfinite_resultant(n - 1));
        });
        run.check("transfinity.elimination" + tag(n), [n] {
            return equal_or(project(elimination_approximant(n).value, n - 1), elimination_approximant(n - 1).value);
        });
    }
}

void elimination_suite(Runner& run, int n_max) {
    for (int n = 0; n <= std::min(n_max, 3); ++n) {
        run.check("elimination" + tag(n), [n] { return zero_or(elimination_check(n).residual); });
    }
}

void schwarz_suite(Runner& run, int n_max) {
    for (int n = 0; n <= std::min(n_max, 3); ++n) {
        run.check("schwarz" + tag(n), [n]() -> std::optional<std::string> {
            const auto check = schwarz_identity_check(CoefficientVector::symbolic(n), -n - 1, n);
            if (check.passed) return std::nullopt;
            for (const auto& [m, r] : check.residuals) {
                if (!r.is_zero()) return "z^" + std::to_string(m) + ": " + r.to_string();
            }
            return "failed";
        });
    }
}

void exptransform_suite(Runner& run, int n_max) {
    for (int n = 0; n <= std::min(n_max, 3); ++n) {
        run.check("exptransform" + tag(n), [n]() -> std::optional<std::string> {
            const auto f = CoefficientVector::symbolic(n);
            const auto expansion = exp_transform_expansion(f);
            if (auto bad = equal_or(expansion.constant, Poly(1L))) return "constant term: " + *bad;
            const auto table = exp_transform_moments(f);
            for (int k = 0; k <= n; ++k) {
                const Poly& got = std::get<Poly>(table.entries.at(k));
                if (auto bad = equal_or(got, moment_richardson_exact(f, k))) return "k=" + std::to_string(k) + ": " + *bad;
            }
            return std::nullopt;
        });
    }
}

std::optional<std::string> jacobian_at(const CoefficientVector& f, PhiFamily family, int& sign) {
    const auto r = jacobian_identity_report(f, family, Ordering::Display);
    if (!r.passed) return "residual " + r.residual.to_string();
    if (!r.corollary_passed) return "corollary factor mismatch";
    if (sign != 0 && sign != r.sign) return "sign changed between points";
    sign = r.sign;
    check_note = r.sign > 0 ? "epsilon=+1" : "epsilon=-1";
    return std::nullopt;
}

void jacobian_suite(Runner& run, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        for (auto family : {PhiFamily::Complete, PhiFamily::Conjugate}) {
            const std::string name = "jacobian." + std::string(to_string(family)) + tag(n);
            if (n <= 2) {
                run.check(name, [n, family] {
                    int sign = 0;
                    return jacobian_at(CoefficientVector::symbolic(n), family, sign);
                });
            } else {
                run.check(name + ".rational", [n, family]() -> std::optional<std::string> {
                    int sign = 0;
                    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                        if (auto bad = jacobian_at(random_rational_point(n, seed), family, sign)) return bad;
                    }
                    return std::nullopt;
                });
            }
        }
        run.check("jacobian.ratio" + tag(n), [n]() -> std::optional<std::string> {
            const auto f = n <= 2 ? CoefficientVector::symbolic(n) : random_rational_point(n, 7);
            const auto ratio = corollary_ratio_check(f);
            if (ratio.passed) return std::nullopt;
            return "ratio " + ratio.ratio.to_string();
        });
    }
}

void proof_suite(Runner& run, int n_max) {
    for (int n = 0; n <= std::min(n_max, 3); ++n) {
        run.check("proof.det_u" + tag(n), [n]() -> std::optional<std::string> {
            const auto f = CoefficientVector::symbolic(n);
            const Poly display = determinant(u_matrix(f, Ordering::Display));
            const Poly natural = determinant(u_matrix(f, Ordering::Natural));
            const Poly predicted = Rational(2) * f.a(0).pow(2 * n + 1) * self_resultant(f);
            if (auto bad = equal_or(display, predicted)) return "display: " + *bad;
            return equal_or(natural, Rational(n % 2 == 0 ? 1 : -1) * display);
        });
        run.check("proof.columns" + tag(n), [n]() -> std::optional<std::string> {
            const auto rel = column_relation_check(CoefficientVector::symbolic(n));
            if (rel.passed) return std::nullopt;
            for (const auto& r : rel.residual) {
                if (!r.is_zero()) return r.to_string();
            }
            return "failed";
        });
    }
}

} // namespace

CoefficientVector random_rational_point(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    auto draw = [&] {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        return Poly(r);
    };
    std::vector<Poly> a, abar;
    Rational a0(std::uniform_int_distribution<long>(1, 9)(rng), den(rng));
    a0.canonicalize();
    a.emplace_back(a0);
    abar.emplace_back(a0);
    for (int k = 1; k <= n; ++k) {
        a.push_back(draw());
        abar.push_back(draw());
    }
    return CoefficientVector::exact(std::move(a), std::move(abar));
}

VerifySuiteResult run_verify(int n_max, const std::set<std::string>& suites) {
    if (n_max < 0 || n_max > 4) throw Error(ErrorCode::InvalidArgument, "n-max must lie in [0, 4]");
    for (const auto& s : suites) {
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
            throw Error(ErrorCode::InvalidArgument, "unknown suite " + s);
        }
    }
    auto wanted = [&](const char* s) { return suites.empty() || suites.contains(s); };
    VerifySuiteResult out;
    Runner run(out);
    if (wanted("golden")) golden_suite(run);
    if (wanted("richardson")) richardson_suite(run, n_max);
    if (wanted("vanishing")) vanishing_suite(run, n_max);
    if (wanted("transfinity")) transfinity_suite(run, n_max);
    if (wanted("elimination")) elimination_suite(run, n_max);
    if (wanted("schwarz")) schwarz_suite(run, n_max);
    if (wanted("exptransform")) exptransform_suite(run, n_max);
    if (wanted("jacobian")) jacobian_suite(run, n_max);
    if (wanted("proof")) proof_suite(run, n_max);
    return out;
}

} // namespace hmc
