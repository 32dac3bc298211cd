#ifndef HMC_MATRIX_HPP
#define HMC_MATRIX_HPP

#include <functional>
#include <vector>

#include "hmc/poly.hpp"

namespace hmc {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Poly& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Poly& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
    const std::vector<Poly>& entries() const { return entries_; }

    PolyMatrix reversed_rows() const;
    PolyMatrix reversed_cols() const;
    PolyMatrix map(const std::function<Poly(const Poly&)>& fn) const;

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Poly> entries_;
};

enum class DeterminantMethod { Bareiss, Cofactor };

/// Exact determinant. Bareiss is fraction-free elimination with exact
/// polynomial division; Cofactor is Laplace expansion along rows with the
/// minors memoized by column subset. Both give the same polynomial.
Poly determinant(const PolyMatrix& m, DeterminantMethod method = DeterminantMethod::Bareiss);

} // namespace hmc

#endif
