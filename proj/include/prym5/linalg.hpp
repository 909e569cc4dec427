#pragma once

#include "prym5/field.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace prym5 {

// Dense matrix over an exact field.
template <class S>
class Matrix {
public:
    using Domain = typename S::Domain;

    Matrix() = default;
    Matrix(Domain dom, std::size_t rows, std::size_t cols)
        : dom_(dom), r_(rows), c_(cols), a_(rows * cols, dom.zero()) {}

    static Matrix identity(Domain dom, std::size_t n) {
        Matrix m(dom, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = dom.one();
        return m;
    }
    static Matrix from_rows(Domain dom, const std::vector<std::vector<S>>& rows) {
        std::size_t c = rows.empty() ? 0 : rows[0].size();
        Matrix m(dom, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    Domain domain() const { return dom_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<S> row(std::size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }
    std::vector<S> col(std::size_t j) const {
        std::vector<S> v;
        for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    void append_row(const std::vector<S>& v) {
        if (r_ == 0 && c_ == 0) c_ = v.size();
        if (v.size() != c_) throw std::invalid_argument("row length mismatch");
        a_.insert(a_.end(), v.begin(), v.end());
        ++r_;
    }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(dom_, r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const S& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
            }
        return m;
    }
    Matrix operator+(const Matrix& o) const {
        Matrix m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
        return m;
    }
    Matrix scaled(const S& s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != c_) throw std::invalid_argument("vector length mismatch");
        std::vector<S> out(r_, dom_.zero());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    Matrix transpose() const {
        Matrix m(dom_, c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_symmetric() const {
        if (r_ != c_) return false;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = i + 1; j < c_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> piv;
        std::size_t row = 0;
        for (std::size_t col = 0; col < c_ && row < r_; ++col) {
            std::size_t sel = r_;
            for (std::size_t i = row; i < r_; ++i)
                if (!(*this)(i, col).is_zero()) {
                    sel = i;
                    break;
                }
            if (sel == r_) continue;
            if (sel != row)
                for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
            S inv = (*this)(row, col).inv();
            for (std::size_t j = col; j < c_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == row) continue;
                S f = (*this)(i, col);
                if (f.is_zero()) continue;
                for (std::size_t j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            piv.push_back(col);
            ++row;
        }
        return piv;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Basis of {v : M v = 0}, one vector per free column, read off the RREF.
    std::vector<std::vector<S>> nullspace() const {
        Matrix m = *this;
        auto piv = m.rref();
        std::vector<bool> is_piv(c_, false);
        for (auto p : piv) is_piv[p] = true;
        std::vector<std::vector<S>> basis;
        for (std::size_t f = 0; f < c_; ++f) {
            if (is_piv[f]) continue;
            std::vector<S> v(c_, dom_.zero());
            v[f] = dom_.one();
            for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    S determinant() const {
        if (r_ != c_) throw std::invalid_argument("determinant of a non-square matrix");
        Matrix m = *this;
        S det = dom_.one();
        for (std::size_t col = 0; col < c_; ++col) {
            std::size_t sel = r_;
            for (std::size_t i = col; i < r_; ++i)
                if (!m(i, col).is_zero()) {
                    sel = i;
                    break;
                }
            if (sel == r_) return dom_.zero();
            if (sel != col) {
                for (std::size_t j = 0; j < c_; ++j) std::swap(m(sel, j), m(col, j));
                det = -det;
            }
            det = det * m(col, col);
            S inv = m(col, col).inv();
            for (std::size_t i = col + 1; i < r_; ++i) {
                S f = m(i, col) * inv;
                if (f.is_zero()) continue;
                for (std::size_t j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return det;
    }

    std::optional<Matrix> inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
        Matrix aug(dom_, r_, 2 * c_);
        for (std::size_t i = 0; i < r_; ++i) {
            for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_ + i) = dom_.one();
        }
        auto piv = aug.rref();
        if (piv.size() < r_ || piv[r_ - 1] >= c_) return std::nullopt;
        Matrix inv(dom_, r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
        return inv;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Domain dom_{};
    std::size_t r_ = 0, c_ = 0;
    std::vector<S> a_;
};

using MatF = Matrix<Fq>;
using MatQ = Matrix<Rational>;

}  // namespace prym5
