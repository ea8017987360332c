#pragma once

#include <vector>

#include "pcx/matrix.hpp"
#include "pcx/polynomial.hpp"

namespace pcx {

// Exact linear system over rational unknowns, assembled by matching the
// coefficients of polynomial identities monomial by monomial.
class LinearSystem {
public:
    explicit LinearSystem(size_t unknowns) : n_(unknowns) {}

    size_t unknowns() const { return n_; }

    // Adds the constraints of sum_k u_k * per_unknown[k] = rhs, one row per
    // monomial appearing on either side.
    void add_poly_identity(const std::vector<Polynomial>& per_unknown, const Polynomial& rhs);

    // Adds the plain row sum_k coeffs[k] u_k = rhs.
    void add_row(std::vector<Rational> coeffs, const Rational& rhs);

    struct Solution {
        bool feasible = false;
        std::vector<Rational> particular;          // free unknowns set to zero
        std::vector<std::vector<Rational>> kernel; // canonical basis, 1 at the free slot
    };

    Solution solve() const;

private:
    size_t n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
};

// Ansatz monomials of total degree min_deg..max_deg in ascending graded-lex
// order (the reverse of the printing order).
std::vector<Monomial> ansatz_monomials(const ChartPtr& chart, uint32_t min_deg, uint32_t max_deg);

Polynomial from_coefficients(const ChartPtr& chart, const std::vector<Monomial>& basis,
                             const std::vector<Rational>& coeffs);

} // namespace pcx
