#ifndef HMC_RESULTANTS_HPP
#define HMC_RESULTANTS_HPP

#include <vector>

#include "hmc/matrix.hpp"
#include "hmc/poly.hpp"

namespace hmc {

/// Sylvester matrix of two coefficient lists given leading coefficient
/// first. With deg p = n and deg q = m, the first m rows shift p and the
/// next n rows shift q.
PolyMatrix sylvester_matrix(const std::vector<Poly>& p_desc, const std::vector<Poly>& q_desc);

/// Classical resultant in x; the degrees are the largest x-exponents.
/// Throws NegativeExponent if x occurs inverted.
Poly sylvester_resultant(const Poly& p, const Poly& q, VarId x);

/// Res(sum b_k z^{-k}, sum a_k z^k)
///   = Res_pol(sum b_k z^{n-k}, sum a_k z^k) / (a_0^n b_0^m).
/// b_0 and a_0 must be units (nonzero constants or invertible monomials).
Poly meromorphic_resultant(const std::vector<Poly>& b, const std::vector<Poly>& a);

/// Res(a,b)_n in the symbols a_0..a_n, b_0..b_n.
Poly transfinite_resultant(int n);

/// Exchanges the a and b families (A<->B, ABar<->BBar) in p.
Poly swap_ab(const Poly& p);

struct EliminationApproximant {
    int n = 0;
    /// (uv)^{-(n+1)} Res_pol(g~, f~)
    Poly value;
    /// The (2n+2)x(2n+2) determinant Res_pol(g~, f~) before normalization.
    Poly determinant;
};

/// g~ = b_n + ... + b_0 z^n - v z^{n+1},  f~ = -u + a_0 z + ... + a_n z^{n+1}.
PolyMatrix elimination_matrix(int n);
EliminationApproximant elimination_approximant(int n);

struct EliminationCheck {
    bool passed = false;
    /// (f_n g_n)^{n+1} E_n(f_n, g_n), a polynomial in z, a, b.
    Poly residual;
};

/// Substitutes u -> sum a_k z^{k+1}, v -> sum b_k z^{-k-1} into the
/// un-normalized determinant and checks that it vanishes identically.
EliminationCheck elimination_check(int n);

} // namespace hmc

#endif
