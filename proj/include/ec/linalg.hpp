#ifndef EC_LINALG_HPP
#define EC_LINALG_HPP

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ec/field.hpp"

namespace ec {

template <class F>
using Vec = std::vector<typename F::Elem>;

// Dense row-major matrix over a runtime field object.
template <class F>
struct Mat {
    using Elem = typename F::Elem;
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, const F& K) : rows(r), cols(c), a(r * c, K.zero()) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Mat identity(std::size_t n, const F& K) {
        Mat m(n, n, K);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K.one();
        return m;
    }
};

template <class F>
Vec<F> matvec(const Mat<F>& M, const Vec<F>& v, const F& K) {
    assert(v.size() == M.cols);
    Vec<F> out(M.rows, K.zero());
    // Column combination; skips zero vector entries, which dominates for the
    // near-permutation multiplication matrices.
    for (std::size_t c = 0; c < M.cols; ++c) {
        if (K.is_zero(v[c])) continue;
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (!K.is_zero(M.at(r, c))) out[r] = K.addmul(out[r], M.at(r, c), v[c]);
        }
    }
    return out;
}

template <class F>
Mat<F> matmul(const Mat<F>& A, const Mat<F>& B, const F& K) {
    assert(A.cols == B.rows);
    Mat<F> C(A.rows, B.cols, K);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t k = 0; k < A.cols; ++k) {
            const auto& aik = A.at(i, k);
            if (K.is_zero(aik)) continue;
            for (std::size_t j = 0; j < B.cols; ++j) {
                if (!K.is_zero(B.at(k, j))) C.at(i, j) = K.addmul(C.at(i, j), aik, B.at(k, j));
            }
        }
    }
    return C;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
// Pivoting: first row with a nonzero entry in the current column.
template <class F>
std::vector<std::size_t> rref_inplace(Mat<F>& M, const F& K) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.cols && row < M.rows; ++col) {
        std::size_t pr = row;
        while (pr < M.rows && K.is_zero(M.at(pr, col))) ++pr;
        if (pr == M.rows) continue;
        if (pr != row)
            for (std::size_t c = col; c < M.cols; ++c) std::swap(M.at(row, c), M.at(pr, c));
        typename F::Elem inv = K.inv(M.at(row, col));
        for (std::size_t c = col; c < M.cols; ++c) M.at(row, c) = K.mul(M.at(row, c), inv);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == row) continue;
            const auto& f = M.at(r, col);
            if (K.is_zero(f)) continue;
            typename F::Elem nf = K.neg(f);
            for (std::size_t c = col; c < M.cols; ++c)
                M.at(r, c) = K.addmul(M.at(r, c), M.at(row, c), nf);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank_of(Mat<F> M, const F& K) {
    return rref_inplace(M, K).size();
}

// Kernel of M (as a map k^cols -> k^rows). Vectors are unit at their free
// coordinate, so solving within the span is a coordinate read-off.
template <class F>
struct KernelBasis {
    std::vector<Vec<F>> vecs;
    std::vector<std::size_t> free_cols;  // parallel to vecs
};

template <class F>
KernelBasis<F> kernel_basis(Mat<F> M, const F& K) {
    std::vector<std::size_t> pivots = rref_inplace(M, K);
    std::vector<bool> is_pivot(M.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    KernelBasis<F> kb;
    for (std::size_t f = 0; f < M.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec<F> v(M.cols, K.zero());
        v[f] = K.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (!K.is_zero(M.at(r, f))) v[pivots[r]] = K.neg(M.at(r, f));
        }
        kb.vecs.push_back(std::move(v));
        kb.free_cols.push_back(f);
    }
    return kb;
}

// Incremental row-space tracker in reduced echelon form.
template <class F>
class RowSpace {
public:
    explicit RowSpace(std::size_t width, const F& K) : width_(width), K_(K) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<Vec<F>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduces v against the current rows (in place).
    void reduce(Vec<F>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (K_.is_zero(c)) continue;
            typename F::Elem f = K_.neg(c);
            const Vec<F>& row = rows_[i];
            for (std::size_t j = 0; j < width_; ++j)
                v[j] = K_.addmul(v[j], row[j], f);
        }
    }

    bool contains(Vec<F> v) const {
        reduce(v);
        for (const auto& c : v)
            if (!K_.is_zero(c)) return false;
        return true;
    }

    // Inserts v; returns true if the dimension grew.
    bool insert(Vec<F> v) {
        reduce(v);
        std::size_t p = 0;
        while (p < width_ && K_.is_zero(v[p])) ++p;
        if (p == width_) return false;
        typename F::Elem inv = K_.inv(v[p]);
        for (auto& c : v) c = K_.mul(c, inv);
        // keep reduced form: clear column p in existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = rows_[i][p];
            if (K_.is_zero(c)) continue;
            typename F::Elem f = K_.neg(c);
            for (std::size_t j = 0; j < width_; ++j)
                rows_[i][j] = K_.addmul(rows_[i][j], v[j], f);
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

private:
    std::size_t width_;
    F K_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace ec

#endif
