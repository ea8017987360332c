#pragma once

#include <optional>
#include <vector>

#include "pcx/calculus.hpp"
#include "pcx/forms.hpp"
#include "pcx/poissonoid.hpp"

namespace pcx {

// Differential twisted by a flow direction: d then contraction then d.
KForm twisted_d(const VectorField& X, const KForm& w);

// Boundary twisted the other way round: contraction, d, contraction.
// Needs degree at least one.
KForm twisted_boundary(const VectorField& X, const KForm& w);

// Repeated right-bracketing of a seed field against the flow. The degree is
// the first m (up to max_m) where the chain dies after a nonzero entry:
// iterates[m] != 0 and iterates[m+1] == 0.
struct MasterSymmetryVerdict {
    std::optional<uint32_t> degree;
    std::vector<VectorField> iterates; // it_0 = xi, it_{k+1} = [it_k, X]
};

MasterSymmetryVerdict master_symmetry_degree(const VectorField& xi, const VectorField& X,
                                             uint32_t max_m = 6);

// Candidate Hamiltonian for the bracket [xi, X], when one exists within the
// ansatz degree.
std::optional<Polynomial> infinitesimal_poissonoid_check(const Bivector& pi,
                                                         const VectorField& xi,
                                                         const VectorField& X, uint32_t degree);

// Chain of directional derivatives of a seed function along the flow.
// constants_degree: first k with the (k+1)-th derivative zero, so the k-th
// iterate is a constant of motion. hamiltonian_degree: first k where the
// (k+1)-th iterate merely generates the zero field through the structure.
struct MasterGeneratorVerdict {
    std::optional<uint32_t> constants_degree;
    std::optional<uint32_t> hamiltonian_degree;
    std::vector<Polynomial> iterates; // T, X[T], X[X[T]], ...
};

MasterGeneratorVerdict master_generator_check(const Bivector& pi, const VectorField& X,
                                              const Polynomial& T, uint32_t max_m = 6);

// For a one-form closed under the twisted differential, the sharpened field
// and the contracted function carry matching symmetry data: the function
// chain reaches Hamiltonian triviality one step before the field chain dies.
struct BetaMasterReport {
    explicit BetaMasterReport(const ChartPtr& c)
        : sharp_field(VectorField::zero(c)), contraction(c) {}

    VectorField sharp_field; // pi#beta
    MasterSymmetryVerdict sharp_verdict;
    Polynomial contraction;  // i_X beta
    MasterGeneratorVerdict generator_verdict;
    bool consistent = false;
};

BetaMasterReport beta_sharp_master_check(const Bivector& pi, const VectorField& X,
                                         const KForm& beta, uint32_t max_m = 6);

} // namespace pcx
