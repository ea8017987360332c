#pragma once

#include <optional>
#include <vector>

#include "pcx/forms.hpp"
#include "pcx/matrix.hpp"

namespace pcx {

// Verdict on a linear transformation X = A x against the quadratic
// Hamiltonian H = 1/2 x^t S x. gamma = A^t J A; the transformation preserves
// the Hamiltonian character of the flow exactly when
// gamma^t J S + S J gamma = 0, and is canonical (up to scale) when
// gamma = a J with a != 0.
struct CanonoidVerdict {
    bool is_canonoid = false;
    bool is_canonical = false;
    RationalMatrix gamma;
    std::optional<RationalMatrix> C;      // new Hessian factor, set when canonoid
    std::optional<Rational> scale_a;      // set when canonical
};

CanonoidVerdict check_canonoid(const RationalMatrix& A, const RationalMatrix& S);

// New Hamiltonian K = 1/2 X^t C X on the target chart and its source-chart
// expression H2 = K(Ax). Requires a canonoid pair.
struct TransformedHamiltonian {
    RationalMatrix C;
    Polynomial K;
    Polynomial H2;
};

TransformedHamiltonian transformed_hamiltonian(const RationalMatrix& A, const RationalMatrix& S,
                                               const ChartPtr& source_chart,
                                               const ChartPtr& target_chart);

// All antisymmetric gamma solving gamma^t J S + S J gamma = 0, as the
// canonical reduced-row-echelon kernel basis over the n(2n-1) upper-triangle
// coordinates in lexicographic pair order. Contains J for every symmetric S.
std::vector<RationalMatrix> gamma_nullspace(const RationalMatrix& S);

// Constant 2-form with matrix A^t J A on the given chart.
KForm omega2(const RationalMatrix& A, const ChartPtr& chart);

// Coordinate rescaling Q_i = a_i q_i, P_i = b_i p_i against H = 1/2 x^t S x:
// true exactly when B = diag(-a.b, -a.b) commutes with S.
bool rescaling_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                     const RationalMatrix& S);

// Hessian matrix of a homogeneous quadratic, H = 1/2 x^t S x.
RationalMatrix quadratic_matrix(const Polynomial& H);

// 1/2 x^t M x for symmetric M over the chart.
Polynomial quadratic_form(const ChartPtr& chart, const RationalMatrix& M);

} // namespace pcx
