// Dense exact linear algebra over a field F (Rat or Fp<P>): row reduction with
// deterministic pivoting, rank, kernel, solving, inversion, determinant, and a
// row-span accumulator used by all closure algorithms.
#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gentle/fields.hpp"

namespace gentle {

template <typename F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, FieldTraits<F>::zero()) {}

    static Matrix identity(int k) {
        Matrix m(k, k);
        for (int i = 0; i < k; ++i) m(i, i) = FieldTraits<F>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const F& x : a_)
            if (!FieldTraits<F>::is_zero(x)) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& x = (*this)(i, k);
                if (FieldTraits<F>::is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Matrix operator*(const F& s) const {
        Matrix r = *this;
        for (F& x : r.a_) x *= s;
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        assert(int(v.size()) == cols_);
        std::vector<F> r(rows_, FieldTraits<F>::zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<F> row(int i) const {
        std::vector<F> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<F> col(int j) const {
        std::vector<F> r(rows_);
        for (int i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }
    void set_row(int i, const std::vector<F>& v) {
        assert(int(v.size()) == cols_);
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void set_col(int j, const std::vector<F>& v) {
        assert(int(v.size()) == rows_);
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_);
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.cols_);
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    // Reduced row echelon form; pivot column indices appended to *pivots.
    Matrix rref(std::vector<int>* pivots = nullptr) const {
        Matrix m = *this;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i)
                if (!FieldTraits<F>::is_zero(m(i, c))) { sel = i; break; }
            if (sel < 0) continue;
            m.swap_rows(sel, r);
            F inv = FieldTraits<F>::one() / m(r, c);
            for (int j = c; j < cols_; ++j) m(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || FieldTraits<F>::is_zero(m(i, c))) continue;
                F f = m(i, c);
                for (int j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            if (pivots) pivots->push_back(c);
            ++r;
        }
        return m;
    }

    int rank() const {
        std::vector<int> piv;
        rref(&piv);
        return int(piv.size());
    }

    // Rows span the null space {x : A x = 0}.
    Matrix kernel_basis() const {
        std::vector<int> piv;
        Matrix e = rref(&piv);
        std::vector<bool> is_piv(cols_, false);
        for (int c : piv) is_piv[c] = true;
        std::vector<int> free_cols;
        for (int c = 0; c < cols_; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
        Matrix k(int(free_cols.size()), cols_);
        for (size_t fi = 0; fi < free_cols.size(); ++fi) {
            int fc = free_cols[fi];
            k(int(fi), fc) = FieldTraits<F>::one();
            for (size_t pi = 0; pi < piv.size(); ++pi) k(int(fi), piv[pi]) = -e(int(pi), fc);
        }
        return k;
    }

    // One solution of A x = b, if consistent.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        assert(int(b.size()) == rows_);
        Matrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        std::vector<int> piv;
        Matrix e = aug.rref(&piv);
        for (int c : piv)
            if (c == cols_) return std::nullopt;  // inconsistent
        std::vector<F> x(cols_, FieldTraits<F>::zero());
        for (size_t pi = 0; pi < piv.size(); ++pi) x[piv[pi]] = e(int(pi), cols_);
        return x;
    }

    std::optional<Matrix> inverse() const {
        assert(rows_ == cols_);
        Matrix aug = hstack(*this, identity(rows_));
        std::vector<int> piv;
        Matrix e = aug.rref(&piv);
        if (int(piv.size()) != rows_) return std::nullopt;
        for (int i = 0; i < rows_; ++i)
            if (piv[i] != i) return std::nullopt;
        Matrix inv(rows_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < rows_; ++j) inv(i, j) = e(i, rows_ + j);
        return inv;
    }

    F determinant() const {
        assert(rows_ == cols_);
        Matrix m = *this;
        F det = FieldTraits<F>::one();
        for (int c = 0; c < cols_; ++c) {
            int sel = -1;
            for (int i = c; i < rows_; ++i)
                if (!FieldTraits<F>::is_zero(m(i, c))) { sel = i; break; }
            if (sel < 0) return FieldTraits<F>::zero();
            if (sel != c) {
                m.swap_rows(sel, c);
                det = -det;
            }
            det *= m(c, c);
            F inv = FieldTraits<F>::one() / m(c, c);
            for (int i = c + 1; i < rows_; ++i) {
                if (FieldTraits<F>::is_zero(m(i, c))) continue;
                F f = m(i, c) * inv;
                for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
            }
        }
        return det;
    }

private:
    void swap_rows(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    int rows_, cols_;
    std::vector<F> a_;
};

// Incrementally maintained row space in reduced echelon form. insert() returns
// true when the vector enlarged the span. Deterministic: pivots ordered by
// column, rows fully back-substituted.
template <typename F>
class RowSpan {
public:
    explicit RowSpan(int ambient_dim) : dim_(ambient_dim) {}

    int ambient_dim() const { return dim_; }
    int rank() const { return int(rows_.size()); }
    const std::vector<std::vector<F>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduce v against the stored rows; returns the residue.
    std::vector<F> reduce(std::vector<F> v) const {
        assert(int(v.size()) == dim_);
        for (size_t r = 0; r < rows_.size(); ++r) {
            const F& c = v[pivots_[r]];
            if (FieldTraits<F>::is_zero(c)) continue;
            F f = c;
            for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const {
        std::vector<F> r = reduce(v);
        for (const F& x : r)
            if (!FieldTraits<F>::is_zero(x)) return false;
        return true;
    }

    bool insert(std::vector<F> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < dim_; ++j)
            if (!FieldTraits<F>::is_zero(v[j])) { p = j; break; }
        if (p < 0) return false;
        F inv = FieldTraits<F>::one() / v[p];
        for (int j = 0; j < dim_; ++j) v[j] *= inv;
        // back-substitute into existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            F f = rows_[r][p];
            if (FieldTraits<F>::is_zero(f)) continue;
            for (int j = 0; j < dim_; ++j) rows_[r][j] -= f * v[j];
        }
        // keep rows ordered by pivot column
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    Matrix<F> basis_matrix() const {
        Matrix<F> m(rank(), dim_);
        for (int i = 0; i < rank(); ++i) m.set_row(i, rows_[i]);
        return m;
    }

private:
    int dim_;
    std::vector<std::vector<F>> rows_;
    std::vector<int> pivots_;
};

// Coordinates of v in the (independent) list `basis`, if v lies in its span.
template <typename F>
std::optional<std::vector<F>> coords_in_basis(const std::vector<std::vector<F>>& basis,
                                              const std::vector<F>& v) {
    if (basis.empty()) return std::nullopt;
    Matrix<F> m(int(v.size()), int(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) m.set_col(int(j), basis[j]);
    return m.solve(v);
}

}  // namespace gentle
