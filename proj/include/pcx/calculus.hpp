#pragma once

#include "pcx/forms.hpp"

namespace pcx {

// Exterior derivative with the alternating-sum sign convention
// (dw)_{i0..ik} = sum_m (-1)^m d_{i_m} w_{..i_m omitted..}. Degree 3 input is
// unsupported.
KForm d(const KForm& w);
KForm d(const Polynomial& f); // df as a one-form

// Interior product (i_X w)_{j..} = sum_i X^i w_{i j..}; degree 0 input is an
// error.
KForm interior(const VectorField& X, const KForm& w);

// Cartan formula; degree 0 reduces to i_X df.
KForm lie_form(const VectorField& X, const KForm& w);

// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i.
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// (pi# a)^i = sum_j pi^{ij} a_j for a one-form a.
VectorField sharp(const Bivector& pi, const KForm& a);

VectorField ham_vf(const Bivector& pi, const Polynomial& H);

// {F,G} = sum pi^{ij} d_i F d_j G, so that X_H[F] = {F,H}.
Polynomial poisson_bracket(const Bivector& pi, const Polynomial& F, const Polynomial& G);

// Bracket of two bivectors, T^{ijk} = sum_l (a^{il} d_l b^{jk} + cyclic(ijk))
// symmetrized over the two arguments. [pi,pi] vanishes exactly when pi is
// Poisson.
Trivector schouten(const Bivector& a, const Bivector& b);

// {{F,G},H} + {{G,H},F} + {{H,F},G}; equals -1/2 of [pi,pi] contracted with
// dF, dG, dH.
Polynomial jacobiator(const Bivector& pi, const Polynomial& F, const Polynomial& G,
                      const Polynomial& H);

// Full contraction of a trivector with three one-forms.
Polynomial contract(const Trivector& T, const KForm& a, const KForm& b, const KForm& c);

// (L_X pi)^{ij} = X^l d_l pi^{ij} - pi^{lj} d_l X^i - pi^{il} d_l X^j.
Bivector lie_bivector(const VectorField& X, const Bivector& pi);

// Pullbacks along the linear map x_target = A x_source and pushforward along
// its inverse. A is square and, where inversion is needed, invertible.
Polynomial pullback_function(const RationalMatrix& A, const Polynomial& f,
                             const ChartPtr& source_chart);
KForm pullback_form(const RationalMatrix& A, const KForm& w, const ChartPtr& source_chart);
Bivector pullback_bivector(const RationalMatrix& A, const Bivector& pi,
                           const ChartPtr& source_chart);
VectorField pushforward(const RationalMatrix& A, const VectorField& X,
                        const ChartPtr& target_chart);

// Bivector with variables renamed onto another chart of equal dimension.
Bivector rename_bivector(const Bivector& pi, const ChartPtr& to);

} // namespace pcx
