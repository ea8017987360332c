#include "pcx/symmetry.hpp"

#include "pcx/errors.hpp"

namespace pcx {

KForm twisted_d(const VectorField& X, const KForm& w) {
    return d(interior(X, d(w)));
}

KForm twisted_boundary(const VectorField& X, const KForm& w) {
    return interior(X, d(interior(X, w)));
}

MasterSymmetryVerdict master_symmetry_degree(const VectorField& xi, const VectorField& X,
                                             uint32_t max_m) {
    require_same_chart(xi.chart, X.chart, "seed field chart differs from the flow");
    MasterSymmetryVerdict v;
    v.iterates.push_back(xi);
    for (uint32_t k = 0; k <= max_m; ++k) {
        VectorField next = lie_bracket(v.iterates.back(), X);
        bool died = next.is_zero() && !v.iterates.back().is_zero();
        v.iterates.push_back(std::move(next));
        if (died) {
            v.degree = k;
            break;
        }
    }
    return v;
}

std::optional<Polynomial> infinitesimal_poissonoid_check(const Bivector& pi,
                                                         const VectorField& xi,
                                                         const VectorField& X, uint32_t degree) {
    auto r = hamiltonize(pi, lie_bracket(xi, X), degree);
    if (!r.feasible)
        return std::nullopt;
    return r.K;
}

MasterGeneratorVerdict master_generator_check(const Bivector& pi, const VectorField& X,
                                              const Polynomial& T, uint32_t max_m) {
    require_same_chart(pi.chart(), X.chart, "flow chart differs from the structure");
    require_same_chart(pi.chart(), T.chart(), "seed function chart differs");
    MasterGeneratorVerdict v;
    v.iterates.push_back(T);
    for (uint32_t k = 0; k <= max_m; ++k) {
        Polynomial next = X.apply(v.iterates.back());
        if (!v.constants_degree && next.is_zero())
            v.constants_degree = k;
        if (!v.hamiltonian_degree && sharp(pi, d(next)).is_zero())
            v.hamiltonian_degree = k;
        v.iterates.push_back(std::move(next));
        if (v.constants_degree)
            break;
    }
    return v;
}

BetaMasterReport beta_sharp_master_check(const Bivector& pi, const VectorField& X,
                                         const KForm& beta, uint32_t max_m) {
    if (beta.degree() != 1)
        fail("degree_mismatch", "master check needs a one-form");
    require_same_chart(pi.chart(), beta.chart(), "form chart differs from the structure");
    require_same_chart(pi.chart(), X.chart, "flow chart differs from the structure");
    if (!twisted_d(X, beta).is_zero())
        fail("hypothesis_violated", "one-form is not closed under the twisted differential");

    BetaMasterReport rep(pi.chart());
    rep.sharp_field = sharp(pi, beta);
    rep.sharp_verdict = master_symmetry_degree(rep.sharp_field, X, max_m);
    rep.contraction = interior(X, beta).as_function();
    rep.generator_verdict =
        master_generator_check(pi, X, rep.contraction, max_m >= 1 ? max_m - 1 : 0);

    if (rep.contraction.is_zero()) {
        rep.consistent = true;
    } else if (rep.sharp_verdict.degree) {
        rep.consistent = *rep.sharp_verdict.degree == 0 ||
                         (rep.generator_verdict.hamiltonian_degree &&
                          *rep.generator_verdict.hamiltonian_degree ==
                              *rep.sharp_verdict.degree - 1);
    } else {
        rep.consistent = !rep.generator_verdict.hamiltonian_degree.has_value();
    }
    return rep;
}

} // namespace pcx
