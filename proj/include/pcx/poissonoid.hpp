#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcx/calculus.hpp"
#include "pcx/forms.hpp"
#include "pcx/linsolve.hpp"

namespace pcx {

// Jacobi identity, checked through the self-bracket of the bivector.
bool is_poisson(const Bivector& pi);

// Vanishing mixed bracket of two structures that each satisfy Jacobi.
// Throws non_poisson_input when either argument fails on its own.
bool compatible(const Bivector& a, const Bivector& b);

// Affine solution space of pi#dK = X over polynomials of total degree
// 1..degree. The kernel collects the homogeneous solutions (Casimir-type
// elements), so any member K + span(kernel) reproduces the field.
struct HamiltonizeResult {
    bool feasible = false;
    std::optional<Polynomial> K;    // particular solution, free coefficients zero
    std::vector<Polynomial> kernel; // canonical basis of pi#dF = 0 solutions
    uint32_t degree = 0;
};

HamiltonizeResult hamiltonize(const Bivector& pi, const VectorField& X, uint32_t degree);

// Kernel of pi#d on polynomials of total degree 1..degree.
std::vector<Polynomial> casimirs(const Bivector& pi, uint32_t degree);

// Degree bound used when a caller does not pin one: PCX_MAX_DEGREE when the
// environment sets a sane value, otherwise 2.
uint32_t default_degree();

// Membership of f in the rational span of basis.
bool in_poly_span(const Polynomial& f, const std::vector<Polynomial>& basis);

bool constant_of_motion_check(const Bivector& pi, const Polynomial& F, const Polynomial& H);

bool poisson_vf_check(const Bivector& pi, const VectorField& X, const Polynomial& H);

// Transport of the flow of H under the linear change y = A x, with the same
// structure pattern rewritten in the target coordinates. The pulled-back
// structure and Hamiltonian must regenerate the original field for the
// transformation to count as structure-preserving.
struct PoissonoidReport {
    VectorField pushed;                 // transported field, target chart
    HamiltonizeResult ham;              // new Hamiltonian on the target pattern
    Bivector pulled_structure;          // target pattern pulled back to the source
    std::optional<Polynomial> pulled_K; // particular new Hamiltonian at y = A x
    bool certificate = false;           // pulled pair regenerates the field
    bool bihamiltonian = false;         // pulled structure compatible with pi
};

PoissonoidReport check_poissonoid_linear(const Bivector& pi, const RationalMatrix& A,
                                         const Polynomial& H, uint32_t degree,
                                         const ChartPtr& target);

// Rank-two pattern of a heavy top / ideal fluid moment algebra on a chart
// (p1,p2,p3,m1,m2,m3): translations braid with rotations, rotations with
// themselves, translations commute.
Bivector e3_structure(const ChartPtr& chart);

// Second Hamiltonian structure for the integrable rigid-body-in-fluid flow
// with diagonal quadratic energy. The linear change phi carries auxiliary
// canonical-pair coordinates to the physical chart; pulling the moment
// pattern back along its inverse and scaling by -2 yields a structure that
// must pair with the original one.
struct KirchhoffReport {
    KirchhoffReport(ChartPtr c, ChartPtr aux)
        : chart(std::move(c)), aux_chart(std::move(aux)), phi(6, 6),
          field(VectorField::zero(chart)), second_structure(chart),
          casimir_pulled(aux_chart) {}

    ChartPtr chart;            // physical coordinates p1..p3, m1..m3
    ChartPtr aux_chart;        // auxiliary coordinates F1..F6
    Rational root_a;           // sqrt(omega1 - omega2)
    Rational root_b;           // sqrt(omega1 - omega3 - 4 eps^2)
    Rational spread;           // omega1 - omega3
    RationalMatrix phi;        // auxiliary -> physical
    Rational det;              // det(phi)
    bool det_matches = false;  // det == -((a/(4 eps)) root_a spread)^3
    VectorField field;         // flow of the quadratic energy
    Bivector second_structure; // the rescaled pullback, physical chart
    bool second_is_poisson = false;
    bool pair_compatible = false;
    bool certificate = false;  // field == second#d(-1/2 |p|^2)
    bool conjugation = false;  // -1/2 second(phi F) == phi pattern(F) phi^T
    Polynomial casimir_pulled; // |p|^2 written in the auxiliary coordinates
};

KirchhoffReport kirchhoff_certificate(const std::array<Rational, 3>& omega,
                                      const Rational& eps, const Rational& a);

} // namespace pcx
