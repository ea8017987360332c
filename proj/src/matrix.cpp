#include "pcx/matrix.hpp"

#include "pcx/errors.hpp"

namespace pcx {

RationalMatrix::RationalMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            fail("bad_argument", "ragged matrix rows");
        for (const auto& v : r)
            a_.push_back(v);
    }
}

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::standard_J(size_t n) {
    RationalMatrix m(2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        m(i, n + i) = 1;
        m(n + i, i) = -1;
    }
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
    RationalMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail("dimension_mismatch", "matrix addition shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] + o.a_[k];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail("dimension_mismatch", "matrix subtraction shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] - o.a_[k];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_)
        fail("dimension_mismatch", "matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& v = (*this)(i, k);
            if (v == 0)
                continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r(i, j) += v * o(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
    RationalMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] * s;
    return r;
}

RationalMatrix RationalMatrix::operator-() const {
    return *this * Rational(-1);
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0)
            return false;
    return true;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool RationalMatrix::is_antisymmetric() const {
    if (!is_square())
        return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i))
                return false;
    return true;
}

Rational RationalMatrix::det() const {
    if (!is_square())
        fail("dimension_mismatch", "determinant of non-square matrix");
    RationalMatrix m = *this;
    Rational d = 1;
    for (size_t col = 0; col < cols_; ++col) {
        size_t piv = col;
        while (piv < rows_ && m(piv, col) == 0)
            ++piv;
        if (piv == rows_)
            return 0;
        if (piv != col) {
            for (size_t j = 0; j < cols_; ++j)
                std::swap(m(piv, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (size_t i = col + 1; i < rows_; ++i) {
            if (m(i, col) == 0)
                continue;
            Rational f = m(i, col) / m(col, col);
            for (size_t j = col; j < cols_; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

RationalMatrix RationalMatrix::inverse() const {
    if (!is_square())
        fail("dimension_mismatch", "inverse of non-square matrix");
    const size_t n = rows_;
    RationalMatrix m = *this;
    RationalMatrix inv = identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m(piv, col) == 0)
            ++piv;
        if (piv == n)
            fail("singular_matrix", "matrix is singular");
        if (piv != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational p = m(col, col);
        for (size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0)
                continue;
            Rational f = m(i, col);
            for (size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_)
        fail("dimension_mismatch", "matrix-vector shape mismatch");
    std::vector<Rational> y(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                y[i] += (*this)(i, j) * x[j];
    return y;
}

RrefResult rref(const RationalMatrix& M) {
    RrefResult res{M, {}};
    RationalMatrix& R = res.R;
    size_t row = 0;
    for (size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
        size_t piv = row;
        while (piv < M.rows() && R(piv, col) == 0)
            ++piv;
        if (piv == M.rows())
            continue;
        if (piv != row)
            for (size_t j = 0; j < M.cols(); ++j)
                std::swap(R(piv, j), R(row, j));
        Rational p = R(row, col);
        for (size_t j = 0; j < M.cols(); ++j)
            R(row, j) /= p;
        for (size_t i = 0; i < M.rows(); ++i) {
            if (i == row || R(i, col) == 0)
                continue;
            Rational f = R(i, col);
            for (size_t j = 0; j < M.cols(); ++j)
                R(i, j) -= f * R(row, j);
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& M) {
    RrefResult r = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (size_t c : r.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(M.cols());
        v[free] = 1;
        for (size_t k = 0; k < r.pivots.size(); ++k)
            v[r.pivots[k]] = -r.R(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank(const RationalMatrix& M) {
    return rref(M).pivots.size();
}

} // namespace pcx
