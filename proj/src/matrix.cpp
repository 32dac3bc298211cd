#include "hmc/matrix.hpp"

#include <bit>
#include <unordered_map>

#include "hmc/error.hpp"
#include "hmc/parallel.hpp"

namespace hmc {

PolyMatrix PolyMatrix::reversed_rows() const {
    PolyMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out(rows_ - 1 - i, j) = (*this)(i, j);
    }
    return out;
}

PolyMatrix PolyMatrix::reversed_cols() const {
    PolyMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out(i, cols_ - 1 - j) = (*this)(i, j);
    }
    return out;
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& fn) const {
    PolyMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = fn(entries_[i]);
    return out;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    PolyMatrix out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i) {
        for (int j = 0; j < y.cols_; ++j) {
            Poly sum;
            for (int k = 0; k < x.cols_; ++k) {
                if (!x(i, k).is_zero() && !y(k, j).is_zero()) sum += x(i, k) * y(k, j);
            }
            out(i, j) = std::move(sum);
        }
    }
    return out;
}

namespace {

Poly bareiss(const PolyMatrix& m) {
    const int n = m.rows();
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i].push_back(m(i, j));
    }
    bool negate = false;
    Poly prev(1L);
    for (int k = 0; k < n; ++k) {
        // Smallest nonzero pivot in column k keeps intermediate sizes down.
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (a[r][k].is_zero()) continue;
            if (pivot < 0 || a[r][k].size() < a[pivot][k].size()) pivot = r;
        }
        if (pivot < 0) return {};
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            negate = !negate;
        }
        if (k == n - 1) break;
        parallel_for(static_cast<std::size_t>(n - k - 1), [&](std::size_t offset) {
            auto& row = a[static_cast<std::size_t>(k + 1) + offset];
            for (int j = k + 1; j < n; ++j) {
                Poly num = row[j] * a[k][k] - row[k] * a[k][j];
                if (num.is_zero()) {
                    row[j] = Poly{};
                    continue;
                }
                auto q = num.exact_quotient(prev);
                if (!q) throw Error(ErrorCode::InexactDivision, "Bareiss step was not exact");
                row[j] = std::move(*q);
            }
            row[k] = Poly{};
        });
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    return negate ? -det : det;
}

class CofactorExpansion {
public:
    explicit CofactorExpansion(const PolyMatrix& m) : m_(m) {}

    Poly det() { return minor(0, (1u << m_.rows()) - 1u); }

private:
    const PolyMatrix& m_;
    std::unordered_map<std::uint32_t, Poly> memo_;

    // rows [row, n) against the column set `cols`
    Poly minor(int row, std::uint32_t cols) {
        if (cols == 0) return Poly(1L);
        if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
        Poly sum;
        int position = 0;
        for (int c = 0; c < m_.cols(); ++c) {
            if (!(cols & (1u << c))) continue;
            const Poly& entry = m_(row, c);
            if (!entry.is_zero()) {
                Poly term = entry * minor(row + 1, cols & ~(1u << c));
                if (position % 2 == 0) sum += term;
                else sum -= term;
            }
            ++position;
        }
        memo_.emplace(cols, sum);
        return sum;
    }
};

} // namespace

Poly determinant(const PolyMatrix& m, DeterminantMethod method) {
    if (!m.square()) {
        throw Error(ErrorCode::NonSquare,
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
    if (m.rows() == 0) return Poly(1L);
    if (method == DeterminantMethod::Cofactor) {
        if (m.rows() > 24) throw Error(ErrorCode::InvalidArgument, "cofactor expansion limited to 24x24");
        return CofactorExpansion(m).det();
    }
    return bareiss(m);
}

} // namespace hmc
