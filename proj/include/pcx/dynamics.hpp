#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pcx/forms.hpp"
#include "pcx/polynomial.hpp"

namespace pcx {

// Double-precision evaluator frozen once from the exact coefficients and
// reused along a trajectory.
struct CompiledPoly {
    size_t dim = 0;
    std::vector<double> coeffs;
    std::vector<Monomial> exps;

    static CompiledPoly compile(const Polynomial& p);
    double eval(const std::vector<double>& x) const;
};

struct CompiledField {
    std::vector<CompiledPoly> comps;

    static CompiledField compile(const VectorField& X);
    void eval(const std::vector<double>& x, std::vector<double>& out) const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    bool aborted = false; // a step left the finite range; the tail is dropped
};

// Classic fourth-order fixed-step integration from 0 to t_end. The step is
// rounded so the horizon is hit exactly.
Trajectory integrate_rk4(const VectorField& X, const std::vector<double>& x0, double t_end,
                         double step);

// Hamiltonian flow x' = sharp(pi, dH)(x) under the same stepping rules.
Trajectory integrate(const Bivector& pi, const Polynomial& H, const std::vector<double>& x0,
                     double t_end, double step);

// Largest deviation of each invariant from its value at the initial state.
std::vector<double> drift_report(const std::vector<Polynomial>& invariants,
                                 const Trajectory& traj);

struct DriftEntry {
    std::string name;
    double initial;
    double max_drift;
};

std::vector<DriftEntry> drift_report(
    const std::vector<std::pair<std::string, Polynomial>>& invariants, const Trajectory& traj);

} // namespace pcx
