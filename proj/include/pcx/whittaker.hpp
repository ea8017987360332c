#pragma once

#include <vector>

#include "pcx/calculus.hpp"
#include "pcx/forms.hpp"

namespace pcx {

// Canonical one-form on a chart ordered (q1..qn, p1..pn): the momentum
// coordinates paired against the position differentials.
KForm liouville_form(const ChartPtr& chart);

// Determinant of the full antisymmetric coefficient matrix of a two-form.
Polynomial two_form_det(const KForm& w);

// Invariance report for a one-form along a flow direction. An absolute
// generator drags the form itself to zero; a relative one only preserves
// its exterior derivative. Either way i_X Theta is the candidate constant
// of motion, certified when contracting the flow into -dTheta recovers its
// differential.
struct GeneratorReport {
    explicit GeneratorReport(const ChartPtr& c) : K(c), dtheta(c, 2), dtheta_det(c) {}

    bool absolute = false;          // L_X Theta == 0
    bool relative = false;          // L_X dTheta == 0
    Polynomial K;                   // i_X Theta
    KForm dtheta;
    Polynomial dtheta_det;
    bool nondegenerate = false;     // dtheta_det != 0
    bool is_identity_shift = false; // Theta minus the canonical form is closed
    bool certificate = false;       // i_X(-dTheta) == dK
};

GeneratorReport generator_check(const VectorField& X, const KForm& theta);

// Componentwise residual of L_X Theta; identically zero exactly for
// absolute generators.
std::vector<Polynomial> integrability_probe(const VectorField& X, const KForm& theta);

} // namespace pcx
