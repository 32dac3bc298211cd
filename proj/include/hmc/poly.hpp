#ifndef HMC_POLY_HPP
#define HMC_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hmc/var.hpp"

namespace hmc {

using Rational = mpq_class;

/// Product of variable powers with nonzero integer exponents, sorted by
/// VarId key. Negative exponents only occur on invertible variables.
class Monomial {
public:
    struct Factor {
        std::uint32_t key;
        int exp;
        VarId var() const { return VarId::from_key(key); }
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    Monomial() = default;
    Monomial(VarId var, int exp = 1);

    std::span<const Factor> factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int exponent(VarId var) const;

    /// Sum over factors of grade(var) * exp.
    int total_grade() const { return total_grade_; }
    /// Largest variable grade present (0 for constants).
    int grade() const;

    Monomial without(VarId var) const;
    /// Requires every variable to be invertible.
    Monomial inverse() const;
    bool all_invertible() const;

    /// No negative exponent on a non-invertible variable.
    bool valid() const;

    friend Monomial operator*(const Monomial& x, const Monomial& y);
    /// Exponent-wise x / y; the result may be invalid (see valid()).
    friend Monomial divide(const Monomial& x, const Monomial& y);
    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.factors_ == y.factors_;
    }

    std::string to_string() const;

private:
    friend class Poly;
    std::vector<Factor> factors_;
    int total_grade_ = 0;

    void push(std::uint32_t key, int exp);
    static Monomial combine(const Monomial& x, const Monomial& y, int sign);
};

/// Canonical term order: ascending total grade, then the exponent vectors
/// compared in variable order, where the smaller exponent sorts first at the
/// first variable that differs. Compatible with multiplication.
int compare(const Monomial& x, const Monomial& y);

struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const { return compare(x, y) < 0; }
};

/// Sparse Laurent polynomial with exact rational coefficients. Terms are kept
/// in canonical order without zero coefficients, so equality is structural.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Poly() = default;
    Poly(long c);
    Poly(const Rational& c);
    Poly(VarId var, int exp = 1);
    Poly(Monomial mono, Rational coeff);

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of the empty monomial).
    Rational constant_term() const;
    int grade() const;

    /// Single term whose variables are all invertible, or a nonzero constant.
    bool is_unit() const;
    Poly unit_inverse() const;
    /// Integer power; negative exponents require a unit.
    Poly pow(int e) const;

    /// Exact division in the Laurent ring; nullopt if d does not divide *this.
    std::optional<Poly> exact_quotient(const Poly& d) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y);
    friend Poly operator*(Poly x, const Rational& c) { return x *= c; }
    friend Poly operator*(const Rational& c, Poly x) { return x *= c; }
    friend Poly operator-(Poly x);
    friend bool operator==(const Poly& x, const Poly& y);

    /// Canonical text, e.g. "2*a0^3 - 8*a0*a1*abar1".
    std::string to_string() const;
    /// Parses the canonical text (and any equivalent spelling of it).
    static Poly parse(std::string_view text);

private:
    std::vector<Term> terms_;
    static Poly merge(const Poly& x, const Poly& y, bool subtract);
};

// The four ring operations plus the involution.

/// Removes every term containing a variable of grade > n.
Poly project(const Poly& p, int n);
Poly star(const Poly& p);
Poly derive(const Poly& p, VarId x);
/// The polynomial multiplying x^e in p, with x removed.
Poly coefficient_of(const Poly& p, VarId x, int e);
/// Homomorphic substitution. A negative power of a bound variable requires a
/// unit image (NonInvertibleSubstitution otherwise).
Poly substitute(const Poly& p, const std::map<VarId, Poly>& bindings);

/// Terms of p grouped by the exponent of x (x removed from each group).
std::map<int, Poly> split_by(const Poly& p, VarId x);
/// Keeps terms whose x-exponent lies in [lo, hi].
Poly window(const Poly& p, VarId x, int lo, int hi);
/// Product restricted to x-exponents in [lo, hi]; skips the rest.
Poly mul_window(const Poly& p, const Poly& q, VarId x, int lo, int hi);
/// Smallest and largest exponent of x over the terms (0 for absent).
std::pair<int, int> exponent_range(const Poly& p, VarId x);
/// Every variable occurring in p.
std::vector<VarId> variables(const Poly& p);

} // namespace hmc

#endif
