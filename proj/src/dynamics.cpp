#include "pcx/dynamics.hpp"

#include <cmath>

#include "pcx/calculus.hpp"
#include "pcx/errors.hpp"

namespace pcx {

CompiledPoly CompiledPoly::compile(const Polynomial& p) {
    CompiledPoly out;
    out.dim = p.chart()->dim();
    for (const auto& [mono, coeff] : p.terms()) {
        out.coeffs.push_back(to_double(coeff));
        out.exps.push_back(mono);
    }
    return out;
}

double CompiledPoly::eval(const std::vector<double>& x) const {
    if (x.size() != dim)
        fail("dimension_mismatch", "state has " + std::to_string(x.size()) +
                                       " entries, polynomial lives in " + std::to_string(dim));
    double acc = 0.0;
    for (size_t t = 0; t < coeffs.size(); ++t) {
        double term = coeffs[t];
        const Monomial& e = exps[t];
        for (size_t i = 0; i < e.size(); ++i)
            for (uint32_t k = 0; k < e[i]; ++k) term *= x[i];
        acc += term;
    }
    return acc;
}

CompiledField CompiledField::compile(const VectorField& X) {
    CompiledField out;
    for (const auto& c : X.comps) out.comps.push_back(CompiledPoly::compile(c));
    return out;
}

void CompiledField::eval(const std::vector<double>& x, std::vector<double>& out) const {
    out.resize(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) out[i] = comps[i].eval(x);
}

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double c : v)
        if (!std::isfinite(c)) return false;
    return true;
}

} // namespace

Trajectory integrate_rk4(const VectorField& X, const std::vector<double>& x0, double t_end,
                         double step) {
    const size_t dim = X.chart->dim();
    if (x0.size() != dim)
        fail("dimension_mismatch", "initial state has " + std::to_string(x0.size()) +
                                       " entries, field lives in " + std::to_string(dim));
    if (!(step > 0.0) || !std::isfinite(step)) fail("bad_argument", "step must be positive");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) fail("bad_argument", "t_end must be positive");
    if (!all_finite(x0)) fail("bad_argument", "initial state must be finite");

    const CompiledField f = CompiledField::compile(X);
    const long long n = std::max<long long>(1, std::llround(t_end / step));
    const double h = t_end / static_cast<double>(n);

    Trajectory traj;
    traj.times.reserve(static_cast<size_t>(n) + 1);
    traj.states.reserve(static_cast<size_t>(n) + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(x0);

    std::vector<double> x = x0;
    std::vector<double> k1, k2, k3, k4, probe(dim), next(dim);
    for (long long s = 0; s < n; ++s) {
        f.eval(x, k1);
        for (size_t i = 0; i < dim; ++i) probe[i] = x[i] + 0.5 * h * k1[i];
        f.eval(probe, k2);
        for (size_t i = 0; i < dim; ++i) probe[i] = x[i] + 0.5 * h * k2[i];
        f.eval(probe, k3);
        for (size_t i = 0; i < dim; ++i) probe[i] = x[i] + h * k3[i];
        f.eval(probe, k4);
        for (size_t i = 0; i < dim; ++i)
            next[i] = x[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (!all_finite(next)) {
            traj.aborted = true;
            break;
        }
        x = next;
        traj.times.push_back(static_cast<double>(s + 1) * h);
        traj.states.push_back(x);
    }
    return traj;
}

Trajectory integrate(const Bivector& pi, const Polynomial& H, const std::vector<double>& x0,
                     double t_end, double step) {
    require_same_chart(pi.chart(), H.chart(), "integrate");
    return integrate_rk4(ham_vf(pi, H), x0, t_end, step);
}

std::vector<double> drift_report(const std::vector<Polynomial>& invariants,
                                 const Trajectory& traj) {
    if (traj.states.empty()) fail("bad_argument", "trajectory has no states");
    std::vector<double> out;
    out.reserve(invariants.size());
    for (const auto& F : invariants) {
        const CompiledPoly cf = CompiledPoly::compile(F);
        const double base = cf.eval(traj.states.front());
        double worst = 0.0;
        for (const auto& state : traj.states)
            worst = std::max(worst, std::fabs(cf.eval(state) - base));
        out.push_back(worst);
    }
    return out;
}

std::vector<DriftEntry> drift_report(
    const std::vector<std::pair<std::string, Polynomial>>& invariants, const Trajectory& traj) {
    if (traj.states.empty()) fail("bad_argument", "trajectory has no states");
    std::vector<DriftEntry> out;
    out.reserve(invariants.size());
    for (const auto& [name, F] : invariants) {
        const CompiledPoly cf = CompiledPoly::compile(F);
        const double base = cf.eval(traj.states.front());
        double worst = 0.0;
        for (const auto& state : traj.states)
            worst = std::max(worst, std::fabs(cf.eval(state) - base));
        out.push_back({name, base, worst});
    }
    return out;
}

} // namespace pcx
