// hmc: command-line driver for moments, resultants, elimination functions,
// Jacobian reports and the self-verification suite.
//
// Exit codes: 0 success, 1 verification or guard failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "hmc/error.hpp"
#include "hmc/moment_map.hpp"
#include "hmc/moments.hpp"
#include "hmc/numeric.hpp"
#include "hmc/resultants.hpp"
#include "hmc/verify.hpp"

using json = nlohmann::ordered_json;
using namespace hmc;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json header(const std::string& command) {
    json j;
    j["schema"] = "hmc/1";
    j["command"] = command;
    return j;
}

json complex_json(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

json value_json(const MomentValue& v) {
    if (const auto* p = std::get_if<Poly>(&v)) return p->to_string();
    return complex_json(std::get<std::complex<double>>(v));
}

std::string latex(const std::string& text) {
    std::string s = std::regex_replace(text, std::regex(R"(abar(\d+))"), R"(\bar a_{$1})");
    s = std::regex_replace(s, std::regex(R"(bbar(\d+))"), R"(\bar b_{$1})");
    s = std::regex_replace(s, std::regex(R"((^|[^_{])\b([ab])(\d+))"), "$1$2_{$3}");
    s = std::regex_replace(s, std::regex(R"(\^(-?\d+))"), "^{$1}");
    s = std::regex_replace(s, std::regex(R"(wbar)"), R"(\bar w)");
    s = std::regex_replace(s, std::regex(R"(\*)"), " ");
    return s;
}

std::string value_text(const MomentValue& v) {
    if (const auto* p = std::get_if<Poly>(&v)) return p->to_string();
    std::ostringstream os;
    os.precision(17);
    const auto c = std::get<std::complex<double>>(v);
    os << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
    return os.str();
}

std::pair<int, int> parse_range(const std::string& text) {
    static const std::regex range(R"(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, range)) throw InputError("bad range '" + text + "', expected LO..HI");
    const int lo = std::stoi(m[1]);
    const int hi = m[2].matched ? std::stoi(m[2]) : lo;
    if (lo > hi) throw InputError("empty range " + text);
    return {lo, hi};
}

CoefficientVector load_coefficients(const std::string& path, int n_flag) {
    if (path.empty()) {
        if (n_flag < 0) throw InputError("either --coeffs or --n is required");
        return CoefficientVector::symbolic(n_flag);
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed coefficient file: ") + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        const std::string mode = j.value("mode", "symbolic");
        if (mode == "symbolic") return CoefficientVector::symbolic(n);
        if (mode != "numeric") throw InputError("mode must be symbolic or numeric");
        const auto& a = j.at("a");
        if (!a.is_array() || static_cast<int>(a.size()) != n + 1) throw InputError("'a' must hold n+1 entries");
        std::vector<std::complex<double>> values;
        for (const auto& pair : a) {
            if (!pair.is_array() || pair.size() != 2) throw InputError("coefficients are [re, im] pairs");
            values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return CoefficientVector::numeric(std::move(values));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed coefficient file: ") + e.what());
    }
}

PhiFamily parse_family(const std::string& s) {
    if (s == "complete") return PhiFamily::Complete;
    if (s == "conjugate") return PhiFamily::Conjugate;
    throw InputError("family must be complete or conjugate");
}

Ordering parse_ordering(const std::string& s) {
    if (s == "display") return Ordering::Display;
    if (s == "natural") return Ordering::Natural;
    throw InputError("ordering must be display or natural");
}

json matrix_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_poly(const std::string& command, const std::string& format, const Poly& p, json extra = {}) {
    if (format == "json") {
        json j = header(command);
        j["value"] = p.to_string();
        for (auto& [k, v] : extra.items()) j[k] = v;
        std::cout << j.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << latex(p.to_string()) << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
}

// --- subcommands ----------------------------------------------------------

struct MomentsArgs {
    std::string coeffs;
    int n = -1;
    std::string k = "0";
    std::string method = "ct";
    int nodes = 256;
    double tolerance = 1e-10;
    std::string format = "json";
};

int run_moments(const MomentsArgs& args) {
    const auto f = load_coefficients(args.coeffs, args.n);
    const auto [lo, hi] = parse_range(args.k);
    MomentTable table;
    table.n = f.n();
    std::optional<double> discrepancy;

    if (args.method == "ct" || args.method == "richardson") {
        table.method = args.method == "ct" ? MomentMethod::ConstantTerm : MomentMethod::Richardson;
        for (int k = lo; k <= hi; ++k) {
            table.entries.emplace(k, table.method == MomentMethod::ConstantTerm ? moment_ct(f, k)
                                                                                : moment_richardson(f, k));
        }
    } else if (args.method == "exptransform") {
        if (lo < 0 || hi > f.n()) throw InputError("exptransform yields moments 0..n only");
        const auto sym = exp_transform_moments(CoefficientVector::symbolic(f.n()));
        table.method = MomentMethod::ExpTransform;
        for (int k = lo; k <= hi; ++k) {
            const Poly& p = std::get<Poly>(sym.entries.at(k));
            table.entries.emplace(k, f.is_symbolic() ? MomentValue(p) : MomentValue(eval(p, assignment_of(f))));
        }
    } else if (args.method == "quadrature") {
        if (f.is_symbolic()) throw InputError("quadrature needs numeric coefficients (--coeffs)");
        table.method = MomentMethod::Quadrature;
        double worst = 0.0;
        for (int k = lo; k <= hi; ++k) {
            const auto r = quadrature_moment(f, k, {args.nodes, args.tolerance});
            table.entries.emplace(k, r.value);
            worst = std::max(worst, r.discrepancy);
        }
        discrepancy = worst;
    } else {
        throw InputError("unknown method " + args.method);
    }

    if (args.format == "csv") {
        std::cout << (f.is_symbolic() ? "k,value\n" : "k,re,im\n");
        for (const auto& [k, v] : table.entries) {
            if (const auto* p = std::get_if<Poly>(&v)) {
                std::cout << k << ",\"" << p->to_string() << "\"\n";
            } else {
                const auto c = std::get<std::complex<double>>(v);
                std::cout.precision(17);
                std::cout << k << "," << c.real() << "," << c.imag() << "\n";
            }
        }
    } else if (args.format == "latex") {
        for (const auto& [k, v] : table.entries) {
            std::cout << "\\mu_{" << k << "}(f_{" << f.n() << "}) = " << latex(value_text(v)) << " \\\\\n";
        }
    } else {
        json j = header("moments");
        j["n"] = f.n();
        j["mode"] = f.is_symbolic() ? "symbolic" : "numeric";
        j["method"] = std::string(to_string(table.method));
        if (discrepancy) j["discrepancy"] = *discrepancy;
        json entries = json::array();
        for (const auto& [k, v] : table.entries) entries.push_back({{"k", k}, {"value", value_json(v)}});
        j["moments"] = std::move(entries);
        std::cout << j.dump(2) << "\n";
    }
    return exit_ok;
}

int run_resultant(int n, bool swap_check, const std::string& format) {
    if (n < 0) throw InputError("--n must be >= 0");
    const Poly r = transfinite_resultant(n);
    json extra;
    int code = exit_ok;
    if (swap_check) {
        const bool symmetric = swap_ab(r) == r;
        extra["swap_symmetric"] = symmetric;
        if (!symmetric) code = exit_failed;
        if (format != "json") std::cerr << "swap check: " << (symmetric ? "pass" : "FAIL") << "\n";
    }
    emit_poly("resultant", format, r, extra);
    return code;
}

int run_eliminate(int n, bool check, const std::string& format) {
    if (n < 0) throw InputError("--n must be >= 0");
    const auto e = elimination_approximant(n);
    json extra;
    int code = exit_ok;
    if (check) {
        const auto c = elimination_check(n);
        extra["check"] = c.passed;
        extra["residual"] = c.residual.to_string();
        if (!c.passed) code = exit_failed;
        if (format != "json") std::cerr << "elimination check: " << (c.passed ? "pass" : "FAIL") << "\n";
    }
    emit_poly("eliminate", format, e.value, extra);
    return code;
}

struct JacobianArgs {
    int n = -1;
    std::string coeffs;
    std::string family = "complete";
    std::string ordering = "display";
    std::optional<std::uint64_t> rational_point;
    bool numeric = false;
    double step = 1e-5;
    int nodes = 256;
    std::string direction = "";
};

int run_jacobian_numeric(const JacobianArgs& args, PhiFamily family) {
    const auto f = load_coefficients(args.coeffs, -1);
    if (f.is_symbolic()) throw InputError("--numeric needs numeric coefficients (--coeffs)");
    std::vector<std::complex<double>> h(static_cast<std::size_t>(f.n()) + 1, 0.0);
    h[0] = 1.0;
    if (!args.direction.empty()) {
        json d = json::parse(args.direction, nullptr, false);
        if (d.is_discarded() || !d.is_array() || static_cast<int>(d.size()) != f.n() + 1) {
            throw InputError("--direction must be a JSON list of n+1 [re, im] pairs");
        }
        for (std::size_t i = 0; i < d.size(); ++i) h[i] = {d[i].at(0).get<double>(), d[i].at(1).get<double>()};
    }
    const auto fd = fd_directional(f, family, h, args.step, {args.nodes, 1e-10});
    const PolyMatrix phi = dphi_matrix(CoefficientVector::symbolic(f.n()), family);
    const auto assignment = assignment_of(f);
    const auto ext = extend_direction(h);
    json j = header("jacobian");
    j["n"] = f.n();
    j["family"] = std::string(to_string(family));
    j["mode"] = "numeric";
    j["step"] = args.step;
    const double tol = std::max(1e-5, 10 * args.step * args.step);
    double worst = 0.0;
    json rows = json::array();
    for (int r = 0; r < phi.rows(); ++r) {
        std::complex<double> predicted = 0;
        for (int c = 0; c < phi.cols(); ++c) predicted += eval(phi(r, c), assignment) * ext[static_cast<std::size_t>(c)];
        const double err = std::abs(predicted - fd[static_cast<std::size_t>(r)]);
        worst = std::max(worst, err);
        rows.push_back({{"k", r - f.n()},
                        {"finite_difference", complex_json(fd[static_cast<std::size_t>(r)])},
                        {"symbolic", complex_json(predicted)},
                        {"error", err}});
    }
    j["directional"] = std::move(rows);
    j["max_error"] = worst;
    j["tolerance"] = tol;
    j["passed"] = worst <= tol;
    std::cout << j.dump(2) << "\n";
    return worst <= tol ? exit_ok : exit_failed;
}

int run_jacobian(const JacobianArgs& args) {
    const PhiFamily family = parse_family(args.family);
    const Ordering ordering = parse_ordering(args.ordering);
    if (args.numeric) return run_jacobian_numeric(args, family);
    if (args.n < 0) throw InputError("--n is required");
    const auto f = args.rational_point ? random_rational_point(args.n, *args.rational_point)
                                       : CoefficientVector::symbolic(args.n);
    const auto r = jacobian_identity_report(f, family, ordering);
    json j = header("jacobian");
    j["n"] = r.n;
    j["family"] = std::string(to_string(family));
    j["ordering"] = std::string(to_string(ordering));
    if (args.rational_point) j["rational_point"] = *args.rational_point;
    j["v"] = matrix_json(r.v);
    j["u"] = matrix_json(r.u_mat);
    j["phi"] = matrix_json(r.phi_mat);
    j["det_phi"] = r.det_phi.to_string();
    j["abs_det_phi"] = (Rational(r.sign) * r.det_phi).to_string();
    j["det_v"] = r.det_v.to_string();
    j["det_u"] = r.det_u.to_string();
    j["res_factor"] = r.res_factor.to_string();
    j["predicted"] = r.predicted.to_string();
    j["sign"] = r.sign;
    j["residual"] = r.residual.to_string();
    j["corollary_passed"] = r.corollary_passed;
    j["det_v_literal"] = r.det_v_literal.to_string();
    j["passed"] = r.passed;
    std::cout << j.dump(2) << "\n";
    return r.passed ? exit_ok : exit_failed;
}

int run_schwarz(const std::string& coeffs, int n, int depth, bool check, const std::string& format) {
    const auto f = load_coefficients(coeffs, n);
    if (!f.is_symbolic()) throw InputError("schwarz works on symbolic coefficients");
    if (depth < 0) throw InputError("--depth must be >= 0");
    const auto s = schwarz_series(f, depth);
    json j = header("schwarz");
    j["n"] = f.n();
    j["depth"] = depth;
    json coeffs_json = json::array();
    for (const auto& [e, c] : s.coefficients) coeffs_json.push_back({{"zeta_exponent", e}, {"value", c.to_string()}});
    j["coefficients"] = std::move(coeffs_json);
    int code = exit_ok;
    if (check) {
        const auto c = schwarz_identity_check(f, -f.n() - 1, f.n());
        j["identity_check"] = c.passed;
        if (!c.passed) code = exit_failed;
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (format == "latex" ? latex(s.as_poly().to_string()) : s.as_poly().to_string()) << "\n";
    }
    return code;
}

int run_verify(int n_max, const std::vector<std::string>& suite_args) {
    std::set<std::string> suites;
    for (const auto& s : suite_args) {
        if (s != "all") suites.insert(s);
    }
    for (const auto& s : suites) {
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
            throw InputError("unknown suite " + s);
        }
    }
    if (n_max < 0 || n_max > 4) throw InputError("--n-max must lie in [0, 4]");
    const auto result = hmc::run_verify(n_max, suites);
    json j = header("verify");
    j["n_max"] = n_max;
    json checks = json::array();
    for (const auto& c : result.checks) {
        checks.push_back({{"name", c.name},
                          {"status", c.passed ? "pass" : "fail"},
                          {"detail", c.detail},
                          {"seconds", c.seconds}});
    }
    j["checks"] = std::move(checks);
    j["overall"] = result.passed() ? "pass" : "fail";
    if (const auto* bad = result.first_failure()) j["first_failure"] = {{"name", bad->name}, {"detail", bad->detail}};
    std::cout << j.dump(2) << "\n";
    return result.passed() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic moments, meromorphic resultants and moment-map Jacobians"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "csv", "latex", "text"};

    MomentsArgs margs;
    auto* moments = app.add_subcommand("moments", "Moments mu_k(f_n)");
    moments->add_option("--coeffs", margs.coeffs, "JSON coefficient file");
    moments->add_option("--n", margs.n, "Symbolic grade (without --coeffs)");
    moments->add_option("--k", margs.k, "Moment index or range LO..HI");
    moments->add_option("--method", margs.method)->check(CLI::IsMember({"ct", "richardson", "exptransform", "quadrature"}));
    moments->add_option("--nodes", margs.nodes, "Quadrature nodes M");
    moments->add_option("--tolerance", margs.tolerance, "Quadrature M/2M tolerance");
    moments->add_option("--format", margs.format)->check(CLI::IsMember({"json", "csv", "latex"}));

    int rn = -1;
    bool swap_check = false;
    std::string rformat = "text";
    auto* resultant = app.add_subcommand("resultant", "Transfinite resultant Res(a,b)_n");
    resultant->add_option("--n", rn)->required();
    resultant->add_flag("--swap-check", swap_check, "Check symmetry under a<->b");
    resultant->add_option("--format", rformat)->check(CLI::IsMember(formats));

    int en = -1;
    bool echeck = false;
    std::string eformat = "text";
    auto* eliminate = app.add_subcommand("eliminate", "Elimination function approximant E_n");
    eliminate->add_option("--n", en)->required();
    eliminate->add_flag("--check", echeck, "Verify that E_n vanishes on (f_n, g_n)");
    eliminate->add_option("--format", eformat)->check(CLI::IsMember(formats));

    JacobianArgs jargs;
    std::uint64_t seed = 0;
    auto* jacobian = app.add_subcommand("jacobian", "Jacobian factorization report");
    jacobian->add_option("--n", jargs.n);
    jacobian->add_option("--coeffs", jargs.coeffs, "JSON coefficient file (with --numeric)");
    jacobian->add_option("--family", jargs.family)->check(CLI::IsMember({"complete", "conjugate"}));
    jacobian->add_option("--ordering", jargs.ordering)->check(CLI::IsMember({"display", "natural"}));
    auto* seed_opt = jacobian->add_option("--rational-point", seed, "Evaluate at a random exact rational point");
    jacobian->add_flag("--numeric", jargs.numeric, "Finite-difference check against the symbolic matrix");
    jacobian->add_option("--step", jargs.step);
    jacobian->add_option("--nodes", jargs.nodes);
    jacobian->add_option("--direction", jargs.direction, "JSON list of [re, im] pairs h_0..h_n");

    std::string scoeffs;
    int sn = -1, depth = 2;
    bool scheck = false;
    std::string sformat = "json";
    auto* schwarz = app.add_subcommand("schwarz", "Schwarz function series");
    schwarz->add_option("--coeffs", scoeffs);
    schwarz->add_option("--n", sn);
    schwarz->add_option("--depth", depth, "Number of negative-index moments beyond -1");
    schwarz->add_flag("--check", scheck, "Check the Schwarz identity on [-n-1, n]");
    schwarz->add_option("--format", sformat)->check(CLI::IsMember(formats));

    int n_max = 2;
    std::vector<std::string> suites;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--n-max", n_max);
    verify->add_option("--suite", suites, "Suite name or 'all' (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }
    if (seed_opt->count() > 0) jargs.rational_point = seed;

    try {
        if (*moments) return run_moments(margs);
        if (*resultant) return run_resultant(rn, swap_check, rformat);
        if (*eliminate) return run_eliminate(en, echeck, eformat);
        if (*jacobian) return run_jacobian(jargs);
        if (*schwarz) return run_schwarz(scoeffs, sn, depth, scheck, sformat);
        if (*verify) return run_verify(n_max, suites);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool failure = e.code() == ErrorCode::GuardFailed || e.code() == ErrorCode::NonConvergent;
        return failure ? exit_failed : exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
