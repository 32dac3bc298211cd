#include "hmc/resultants.hpp"

#include "hmc/error.hpp"

namespace hmc {

using namespace vars;

PolyMatrix sylvester_matrix(const std::vector<Poly>& p_desc, const std::vector<Poly>& q_desc) {
    if (p_desc.empty() || q_desc.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
    const int n = static_cast<int>(p_desc.size()) - 1;
    const int m = static_cast<int>(q_desc.size()) - 1;
    PolyMatrix s(n + m, n + m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c <= n; ++c) s(r, r + c) = p_desc[static_cast<std::size_t>(c)];
    }
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c <= m; ++c) s(m + r, r + c) = q_desc[static_cast<std::size_t>(c)];
    }
    return s;
}

namespace {

std::vector<Poly> descending_coefficients(const Poly& p, VarId x) {
    auto [lo, hi] = exponent_range(p, x);
    if (lo < 0) throw Error(ErrorCode::NegativeExponent, x.name() + " occurs inverted in " + p.to_string());
    auto groups = split_by(p, x);
    std::vector<Poly> out;
    for (int e = hi; e >= 0; --e) {
        auto it = groups.find(e);
        out.push_back(it == groups.end() ? Poly{} : it->second);
    }
    return out;
}

Poly leading_inverse(const Poly& c, int power) {
    if (power == 0) return Poly(1L);
    if (c.is_zero()) throw Error(ErrorCode::ZeroLeadingCoefficient, "zero constant coefficient");
    if (!c.is_unit()) throw Error(ErrorCode::NonInvertible, "coefficient is not a unit: " + c.to_string());
    return c.pow(-power);
}

} // namespace

Poly sylvester_resultant(const Poly& p, const Poly& q, VarId x) {
    return determinant(sylvester_matrix(descending_coefficients(p, x), descending_coefficients(q, x)));
}

Poly meromorphic_resultant(const std::vector<Poly>& b, const std::vector<Poly>& a) {
    if (b.empty() || a.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
    const int n = static_cast<int>(b.size()) - 1;
    const int m = static_cast<int>(a.size()) - 1;
    // sum b_k z^{n-k} is already leading-first; sum a_k z^k needs reversing.
    std::vector<Poly> a_desc(a.rbegin(), a.rend());
    Poly det = determinant(sylvester_matrix(b, a_desc));
#ifdef HMC_MUTATION_FLIP_RESULTANT_SIGN
    det = -det;
#endif
    return det * leading_inverse(a[0], n) * leading_inverse(b[0], m);
}

Poly transfinite_resultant(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative grade");
    std::vector<Poly> as, bs;
    for (int k = 0; k <= n; ++k) {
        as.emplace_back(a(k));
        bs.emplace_back(b(k));
    }
    return meromorphic_resultant(bs, as);
}

Poly swap_ab(const Poly& p) {
    std::map<VarId, Poly> bindings;
    for (VarId var : variables(p)) {
        switch (var.family()) {
            case Family::A: bindings.emplace(var, Poly(VarId(Family::B, var.index()))); break;
            case Family::ABar: bindings.emplace(var, Poly(VarId(Family::BBar, var.index()))); break;
            case Family::B: bindings.emplace(var, Poly(VarId(Family::A, var.index()))); break;
            case Family::BBar: bindings.emplace(var, Poly(VarId(Family::ABar, var.index()))); break;
            default: break;
        }
    }
    return substitute(p, bindings);
}

PolyMatrix elimination_matrix(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative grade");
    // g~ leading first: -v, b_0, ..., b_n
    std::vector<Poly> g{-Poly(v)};
    for (int k = 0; k <= n; ++k) g.emplace_back(b(k));
    // f~ leading first: a_n, ..., a_0, -u
    std::vector<Poly> f;
    for (int k = n; k >= 0; --k) f.emplace_back(a(k));
    f.push_back(-Poly(u));
    return sylvester_matrix(g, f);
}

EliminationApproximant elimination_approximant(int n) {
    EliminationApproximant e;
    e.n = n;
    e.determinant = determinant(elimination_matrix(n));
    e.value = e.determinant * Poly(Monomial(u, -(n + 1)) * Monomial(v, -(n + 1)), 1);
    return e;
}

EliminationCheck elimination_check(int n) {
    const Poly det = elimination_approximant(n).determinant;
    Poly f_n, g_n;
    for (int k = 0; k <= n; ++k) {
        f_n += Poly(a(k)) * Poly(z, k + 1);
        g_n += Poly(b(k)) * Poly(z, -k - 1);
    }
    EliminationCheck check;
    check.residual = substitute(det, {{u, f_n}, {v, g_n}});
    check.passed = check.residual.is_zero();
    return check;
}

} // namespace hmc
