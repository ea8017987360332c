#pragma once

#include <vector>

#include "pcx/rational.hpp"

namespace pcx {

// Dense exact-rational matrix, row major.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(size_t rows, size_t cols);
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

    static RationalMatrix identity(size_t n);
    // 2n x 2n block matrix [[0, I], [-I, 0]].
    static RationalMatrix standard_J(size_t n);
    static RationalMatrix diagonal(const std::vector<Rational>& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& s) const;
    RationalMatrix operator-() const;
    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    RationalMatrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    Rational det() const;               // square only
    RationalMatrix inverse() const;     // throws singular_matrix

    std::vector<Rational> apply(const std::vector<Rational>& x) const;

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    RationalMatrix R;
    std::vector<size_t> pivots; // pivot column per pivot row, ascending
};

RrefResult rref(const RationalMatrix& M);

// Canonical kernel basis from the RREF: one vector per free column
// (ascending), with a 1 in the free slot.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& M);

size_t rank(const RationalMatrix& M);

} // namespace pcx
