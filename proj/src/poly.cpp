#include "hmc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "hmc/error.hpp"

namespace hmc {

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& f : m.factors()) {
            h ^= (static_cast<std::size_t>(f.key) << 20) ^ static_cast<std::size_t>(f.exp + 4096);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

Poly from_accumulator(Accumulator& acc) {
    std::vector<Poly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [mono, coeff] : acc) {
        if (coeff != 0) terms.push_back({mono, std::move(coeff)});
    }
    return Poly::from_terms(std::move(terms));
}

} // namespace

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonInvertibleSubstitution: return "NonInvertibleSubstitution";
        case ErrorCode::NonInvertible: return "NonInvertible";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::WindowBelowLeadingTerm: return "WindowBelowLeadingTerm";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NegativeExponent: return "NegativeExponent";
        case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case ErrorCode::NegativeIndex: return "NegativeIndex";
        case ErrorCode::MixedNegativePowers: return "MixedNegativePowers";
        case ErrorCode::GuardFailed: return "GuardFailed";
        case ErrorCode::NonConvergent: return "NonConvergent";
        case ErrorCode::UnassignedVariable: return "UnassignedVariable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId var, int exp) {
    if (exp < 0 && !var.invertible()) {
        throw Error(ErrorCode::NonInvertible, "negative power of " + var.name());
    }
    push(var.key(), exp);
}

void Monomial::push(std::uint32_t key, int exp) {
    if (exp == 0) return;
    factors_.push_back({key, exp});
    total_grade_ += VarId::from_key(key).grade() * exp;
}

int Monomial::exponent(VarId var) const {
    const auto key = var.key();
    auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                               [](const Factor& f, std::uint32_t k) { return f.key < k; });
    return (it != factors_.end() && it->key == key) ? it->exp : 0;
}

int Monomial::grade() const {
    int g = 0;
    for (const auto& f : factors_) g = std::max(g, f.var().grade());
    return g;
}

Monomial Monomial::without(VarId var) const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    for (const auto& f : factors_) {
        if (f.key != var.key()) out.push(f.key, f.exp);
    }
    return out;
}

bool Monomial::all_invertible() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.var().invertible(); });
}

bool Monomial::valid() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.exp > 0 || f.var().invertible(); });
}

Monomial Monomial::inverse() const {
    if (!all_invertible()) throw Error(ErrorCode::NonInvertible, to_string());
    Monomial out;
    for (const auto& f : factors_) out.push(f.key, -f.exp);
    return out;
}

Monomial Monomial::combine(const Monomial& x, const Monomial& y, int sign) {
    Monomial out;
    out.factors_.reserve(x.factors_.size() + y.factors_.size());
    std::size_t i = 0, j = 0;
    const auto& fx = x.factors_;
    const auto& fy = y.factors_;
    while (i < fx.size() || j < fy.size()) {
        if (j == fy.size() || (i < fx.size() && fx[i].key < fy[j].key)) {
            out.push(fx[i].key, fx[i].exp);
            ++i;
        } else if (i == fx.size() || fy[j].key < fx[i].key) {
            out.push(fy[j].key, sign * fy[j].exp);
            ++j;
        } else {
            out.push(fx[i].key, fx[i].exp + sign * fy[j].exp);
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial operator*(const Monomial& x, const Monomial& y) { return Monomial::combine(x, y, 1); }
Monomial divide(const Monomial& x, const Monomial& y) { return Monomial::combine(x, y, -1); }

std::string Monomial::to_string() const {
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += '*';
        out += f.var().name();
        if (f.exp != 1) out += '^' + std::to_string(f.exp);
    }
    return out;
}

int compare(const Monomial& x, const Monomial& y) {
    if (x.total_grade() != y.total_grade()) return x.total_grade() < y.total_grade() ? -1 : 1;
    auto fx = x.factors();
    auto fy = y.factors();
    std::size_t i = 0, j = 0;
    while (i < fx.size() || j < fy.size()) {
        if (i < fx.size() && j < fy.size() && fx[i].key == fy[j].key) {
            if (fx[i].exp != fy[j].exp) return fx[i].exp < fy[j].exp ? -1 : 1;
            ++i;
            ++j;
        } else if (j == fy.size() || (i < fx.size() && fx[i].key < fy[j].key)) {
            // variable present only in x; y has exponent 0 there
            return fx[i].exp < 0 ? -1 : 1;
        } else {
            return fy[j].exp > 0 ? -1 : 1;
        }
    }
    return 0;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) {
    if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly::Poly(VarId var, int exp) { terms_.push_back({Monomial(var, exp), Rational(1)}); }

Poly::Poly(Monomial mono, Rational coeff) {
    if (coeff != 0) terms_.push_back({std::move(mono), std::move(coeff)});
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return compare(x.mono, y.mono) < 0; });
    Poly out;
    out.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            out.terms_.back().coeff += t.coeff;
        } else {
            if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
            out.terms_.push_back(std::move(t));
        }
    }
    if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
    return out;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_term() const {
    for (const auto& t : terms_) {
        if (t.mono.is_one()) return t.coeff;
    }
    return 0;
}

int Poly::grade() const {
    int g = 0;
    for (const auto& t : terms_) g = std::max(g, t.mono.grade());
    return g;
}

bool Poly::is_unit() const { return terms_.size() == 1 && terms_[0].mono.all_invertible(); }

Poly Poly::unit_inverse() const {
    if (!is_unit()) throw Error(ErrorCode::NonInvertible, "not a unit: " + to_string());
    Rational inv = 1 / terms_[0].coeff;
    return Poly(terms_[0].mono.inverse(), inv);
}

Poly Poly::pow(int e) const {
    if (e < 0) return unit_inverse().pow(-e);
    Poly result(1L);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::merge(const Poly& x, const Poly& y, bool subtract) {
    Poly out;
    out.terms_.reserve(x.terms_.size() + y.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < x.terms_.size() || j < y.terms_.size()) {
        int c;
        if (i == x.terms_.size()) c = 1;
        else if (j == y.terms_.size()) c = -1;
        else c = compare(x.terms_[i].mono, y.terms_[j].mono);
        if (c < 0) {
            out.terms_.push_back(x.terms_[i++]);
        } else if (c > 0) {
            const auto& t = y.terms_[j++];
            out.terms_.push_back({t.mono, subtract ? Rational(-t.coeff) : t.coeff});
        } else {
            Rational s = subtract ? Rational(x.terms_[i].coeff - y.terms_[j].coeff)
                                  : Rational(x.terms_[i].coeff + y.terms_[j].coeff);
            if (s != 0) out.terms_.push_back({x.terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) { return *this = merge(*this, o, false); }
Poly& Poly::operator-=(const Poly& o) { return *this = merge(*this, o, true); }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (y.is_constant()) return x * y.terms_[0].coeff;
    if (x.is_constant()) return y * x.terms_[0].coeff;
    Accumulator acc;
    acc.reserve(x.size() * y.size());
    Rational prod;
    for (const auto& tx : x.terms_) {
        for (const auto& ty : y.terms_) {
            mpq_mul(prod.get_mpq_t(), tx.coeff.get_mpq_t(), ty.coeff.get_mpq_t());
            acc[tx.mono * ty.mono] += prod;
        }
    }
    return from_accumulator(acc);
}

Poly operator-(Poly x) {
    for (auto& t : x.terms_) t.coeff = -t.coeff;
    return x;
}

bool operator==(const Poly& x, const Poly& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i) {
        if (!(x.terms_[i].mono == y.terms_[i].mono) || x.terms_[i].coeff != y.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

std::optional<Poly> Poly::exact_quotient(const Poly& d) const {
    if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    if (is_zero()) return Poly{};
    if (d.size() == 1) {
        // monomial divisor: divide term by term
        std::vector<Term> out;
        out.reserve(terms_.size());
        const Rational inv = 1 / d.terms_[0].coeff;
        for (const auto& t : terms_) {
            Monomial m = divide(t.mono, d.terms_[0].mono);
            if (!m.valid()) return std::nullopt;
            out.push_back({std::move(m), t.coeff * inv});
        }
        return from_terms(std::move(out));
    }

    // Per-variable exponent box for the quotient: in a Laurent domain the
    // extreme degrees add, so any quotient term outside the box is proof of
    // inexactness. The box is finite, which bounds the loop.
    std::map<std::uint32_t, std::pair<int, int>> box;
    for (VarId var : variables(*this)) {
        auto [plo, phi] = exponent_range(*this, var);
        auto [dlo, dhi] = exponent_range(d, var);
        box[var.key()] = {plo - dlo, phi - dhi};
    }
    for (VarId var : variables(d)) {
        if (!box.count(var.key())) {
            auto [dlo, dhi] = exponent_range(d, var);
            box[var.key()] = {-dlo, -dhi};
        }
    }
    for (const auto& [key, range] : box) {
        if (range.first > range.second) return std::nullopt;
    }
    auto in_box = [&](const Monomial& m) {
        if (!m.valid()) return false;
        for (const auto& [key, range] : box) {
            const int e = m.exponent(VarId::from_key(key));
            if (e < range.first || e > range.second) return false;
        }
        for (const auto& f : m.factors()) {
            if (!box.count(f.key)) return false;
        }
        return true;
    };

    std::map<Monomial, Rational, MonomialLess> rem;
    for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
    const Term& lead = d.terms_.back();
    const Rational lead_inv = 1 / lead.coeff;
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        Monomial qm = divide(top->first, lead.mono);
        if (!in_box(qm)) return std::nullopt;
        Rational qc = top->second * lead_inv;
        for (const auto& t : d.terms_) {
            Monomial m = qm * t.mono;
            Rational delta = qc * t.coeff;
            auto [it, inserted] = rem.try_emplace(std::move(m), 0);
            it->second -= delta;
            if (it->second == 0) rem.erase(it);
        }
        quotient.push_back({std::move(qm), std::move(qc)});
    }
    return from_terms(std::move(quotient));
}

// -------------------------------------------------------------- operations

Poly project(const Poly& p, int n) {
    std::vector<Poly::Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono.grade() <= n) out.push_back(t);
    }
    return Poly::from_terms(std::move(out));
}

Poly star(const Poly& p) {
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Factor> fs;
        for (const auto& f : t.mono.factors()) fs.push_back({f.var().star().key(), f.exp});
        std::sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
        Monomial m;
        for (const auto& f : fs) m = m * Monomial(f.var(), f.exp);
        out.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(std::move(out));
}

Poly derive(const Poly& p, VarId x) {
    std::vector<Poly::Term> out;
    for (const auto& t : p.terms()) {
        const int e = t.mono.exponent(x);
        if (e == 0) continue;
        out.push_back({divide(t.mono, Monomial(x)), t.coeff * e});
    }
    return Poly::from_terms(std::move(out));
}

Poly coefficient_of(const Poly& p, VarId x, int e) {
    std::vector<Poly::Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono.exponent(x) == e) out.push_back({t.mono.without(x), t.coeff});
    }
    return Poly::from_terms(std::move(out));
}

Poly substitute(const Poly& p, const std::map<VarId, Poly>& bindings) {
    std::map<std::pair<std::uint32_t, int>, Poly> powers;
    auto power = [&](VarId var, const Poly& image, int e) -> const Poly& {
        auto key = std::make_pair(var.key(), e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        if (e < 0 && !image.is_unit()) {
            throw Error(ErrorCode::NonInvertibleSubstitution,
                        var.name() + "^" + std::to_string(e) + " with image " + image.to_string());
        }
        return powers.emplace(key, image.pow(e)).first->second;
    };

    Accumulator acc;
    for (const auto& t : p.terms()) {
        Monomial rest;
        Poly factor(1L);
        for (const auto& f : t.mono.factors()) {
            auto it = bindings.find(f.var());
            if (it == bindings.end()) {
                rest = rest * Monomial(f.var(), f.exp);
            } else {
                factor = factor * power(f.var(), it->second, f.exp);
            }
        }
        for (const auto& ft : factor.terms()) acc[ft.mono * rest] += ft.coeff * t.coeff;
    }
    return from_accumulator(acc);
}

std::map<int, Poly> split_by(const Poly& p, VarId x) {
    std::map<int, std::vector<Poly::Term>> groups;
    for (const auto& t : p.terms()) groups[t.mono.exponent(x)].push_back({t.mono.without(x), t.coeff});
    std::map<int, Poly> out;
    for (auto& [e, terms] : groups) out.emplace(e, Poly::from_terms(std::move(terms)));
    return out;
}

Poly window(const Poly& p, VarId x, int lo, int hi) {
    std::vector<Poly::Term> out;
    for (const auto& t : p.terms()) {
        const int e = t.mono.exponent(x);
        if (e >= lo && e <= hi) out.push_back(t);
    }
    return Poly::from_terms(std::move(out));
}

Poly mul_window(const Poly& p, const Poly& q, VarId x, int lo, int hi) {
    std::map<int, std::vector<const Poly::Term*>> qs;
    for (const auto& t : q.terms()) qs[t.mono.exponent(x)].push_back(&t);
    Accumulator acc;
    Rational prod;
    for (const auto& tp : p.terms()) {
        const int e = tp.mono.exponent(x);
        for (auto it = qs.lower_bound(lo - e); it != qs.end() && it->first <= hi - e; ++it) {
            for (const Poly::Term* tq : it->second) {
                mpq_mul(prod.get_mpq_t(), tp.coeff.get_mpq_t(), tq->coeff.get_mpq_t());
                acc[tp.mono * tq->mono] += prod;
            }
        }
    }
    return from_accumulator(acc);
}

std::pair<int, int> exponent_range(const Poly& p, VarId x) {
    if (p.is_zero()) return {0, 0};
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& t : p.terms()) {
        const int e = t.mono.exponent(x);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return {lo, hi};
}

std::vector<VarId> variables(const Poly& p) {
    std::vector<std::uint32_t> keys;
    for (const auto& t : p.terms()) {
        for (const auto& f : t.mono.factors()) keys.push_back(f.key);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<VarId> out;
    out.reserve(keys.size());
    for (auto k : keys) out.push_back(VarId::from_key(k));
    return out;
}

} // namespace hmc
