#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace homcat {

using Int = mpz_class;

/// Dense matrix over Z with arbitrary-precision entries. Zero-row and
/// zero-column shapes are valid and occur routinely (empty presentations,
/// zero objects in complexes).
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            assert(r.size() == cols_);
            for (long v : r) a_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const Int& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& b) const {
        assert(cols_ == b.rows_);
        IntMatrix c(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    IntMatrix operator+(const IntMatrix& b) const {
        assert(rows_ == b.rows_ && cols_ == b.cols_);
        IntMatrix c = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

    IntMatrix operator-(const IntMatrix& b) const {
        assert(rows_ == b.rows_ && cols_ == b.cols_);
        IntMatrix c = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    IntMatrix operator-() const {
        IntMatrix c = *this;
        for (auto& x : c.a_) x = -x;
        return c;
    }

    IntMatrix scaled(const Int& s) const {
        IntMatrix c = *this;
        for (auto& x : c.a_) x *= s;
        return c;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        assert(v.size() == cols_);
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const std::vector<Int>& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    static IntMatrix from_col(const std::vector<Int>& v) {
        IntMatrix c(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
        return c;
    }

    /// [A | B], matching row counts.
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
        assert(a.rows_ == b.rows_);
        IntMatrix c(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
        }
        return c;
    }

    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
        assert(a.cols_ == b.cols_);
        IntMatrix c(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) c(a.rows_ + i, j) = b(i, j);
        return c;
    }

    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix c(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(a.rows_ + i, a.cols_ + j) = b(i, j);
        return c;
    }

    /// Kronecker product, row-major index convention (i*br+k, j*bc+l).
    static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j) == 0) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        c(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return c;
    }

    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                        std::size_t nc) const {
        assert(r0 + nr <= rows_ && c0 + nc <= cols_);
        IntMatrix s(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
        return s;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j)
                s += ((j ? " " : "") + (*this)(i, j).get_str());
        }
        return s + "]";
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

inline std::vector<Int> vec_add(std::vector<Int> a, const std::vector<Int>& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline std::vector<Int> vec_sub(std::vector<Int> a, const std::vector<Int>& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline bool vec_is_zero(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace homcat
