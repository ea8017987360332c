#include "pcx/poissonoid.hpp"

#include <cstdlib>

#include "pcx/errors.hpp"

namespace pcx {

bool is_poisson(const Bivector& pi) {
    return schouten(pi, pi).is_zero();
}

bool compatible(const Bivector& a, const Bivector& b) {
    require_same_chart(a.chart(), b.chart(), "structures live on different charts");
    if (!is_poisson(a))
        fail("non_poisson_input", "first structure fails the Jacobi identity");
    if (!is_poisson(b))
        fail("non_poisson_input", "second structure fails the Jacobi identity");
    return schouten(a, b).is_zero();
}

HamiltonizeResult hamiltonize(const Bivector& pi, const VectorField& X, uint32_t degree) {
    require_same_chart(pi.chart(), X.chart, "field chart differs from the structure");
    if (degree == 0)
        fail("bad_argument", "ansatz degree must be at least 1");
    const ChartPtr& chart = pi.chart();
    const size_t dim = chart->dim();

    auto monos = ansatz_monomials(chart, 1, degree);
    std::vector<VectorField> columns;
    columns.reserve(monos.size());
    for (const auto& m : monos)
        columns.push_back(sharp(pi, d(from_coefficients(chart, {m}, {Rational(1)}))));

    LinearSystem sys(monos.size());
    for (size_t i = 0; i < dim; ++i) {
        std::vector<Polynomial> per_unknown;
        per_unknown.reserve(monos.size());
        for (const auto& col : columns)
            per_unknown.push_back(col.comps[i]);
        sys.add_poly_identity(per_unknown, X.comps[i]);
    }
    auto sol = sys.solve();

    HamiltonizeResult out;
    out.degree = degree;
    out.feasible = sol.feasible;
    if (!sol.feasible)
        return out;
    out.K = from_coefficients(chart, monos, sol.particular);
    out.kernel.reserve(sol.kernel.size());
    for (const auto& v : sol.kernel)
        out.kernel.push_back(from_coefficients(chart, monos, v));
    return out;
}

std::vector<Polynomial> casimirs(const Bivector& pi, uint32_t degree) {
    return hamiltonize(pi, VectorField::zero(pi.chart()), degree).kernel;
}

uint32_t default_degree() {
    if (const char* env = std::getenv("PCX_MAX_DEGREE")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 64)
            return static_cast<uint32_t>(v);
    }
    return 2;
}

bool in_poly_span(const Polynomial& f, const std::vector<Polynomial>& basis) {
    if (f.is_zero())
        return true;
    if (basis.empty())
        return false;
    for (const auto& b : basis)
        require_same_chart(f.chart(), b.chart(), "span basis chart differs");
    LinearSystem sys(basis.size());
    sys.add_poly_identity(basis, f);
    return sys.solve().feasible;
}

bool constant_of_motion_check(const Bivector& pi, const Polynomial& F, const Polynomial& H) {
    return poisson_bracket(pi, F, H).is_zero();
}

bool poisson_vf_check(const Bivector& pi, const VectorField& X, const Polynomial& H) {
    return X == ham_vf(pi, H);
}

PoissonoidReport check_poissonoid_linear(const Bivector& pi, const RationalMatrix& A,
                                         const Polynomial& H, uint32_t degree,
                                         const ChartPtr& target) {
    require_same_chart(pi.chart(), H.chart(), "Hamiltonian chart differs from the structure");
    const ChartPtr& source = pi.chart();
    if (target->dim() != source->dim())
        fail("dimension_mismatch", "target chart dimension differs from the source");

    VectorField X = ham_vf(pi, H);
    Bivector target_pattern = rename_bivector(pi, target);

    PoissonoidReport rep{VectorField::zero(target), {}, Bivector(source), std::nullopt,
                         false, false};
    rep.pushed = pushforward(A, X, target);
    rep.ham = hamiltonize(target_pattern, rep.pushed, degree);
    rep.pulled_structure = pullback_bivector(A, target_pattern, source);
    if (rep.ham.feasible) {
        rep.pulled_K = compose_linear(*rep.ham.K, A, source);
        rep.certificate = sharp(rep.pulled_structure, d(*rep.pulled_K)) == X;
    }
    rep.bihamiltonian = compatible(pi, rep.pulled_structure);
    return rep;
}

namespace {

// Angular-momentum hat block of the three coordinates starting at base.
Polynomial hat_entry(const ChartPtr& chart, size_t base, size_t i, size_t j) {
    auto v = [&](size_t k) { return Polynomial::variable(chart, base + k); };
    if (i == j)
        return Polynomial(chart);
    if (i == 0)
        return j == 1 ? -v(2) : v(1);
    if (i == 1)
        return j == 0 ? v(2) : -v(0);
    return j == 0 ? -v(1) : v(0);
}

} // namespace

Bivector e3_structure(const ChartPtr& chart) {
    if (chart->dim() != 6)
        fail("dimension_mismatch", "moment pattern needs six coordinates");
    Bivector pi(chart);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Polynomial pm = hat_entry(chart, 0, i, j);
            if (!pm.is_zero())
                pi.set_entry(i, 3 + j, pm);
            if (i < j) {
                Polynomial mm = hat_entry(chart, 3, i, j);
                if (!mm.is_zero())
                    pi.set_entry(3 + i, 3 + j, mm);
            }
        }
    return pi;
}

KirchhoffReport kirchhoff_certificate(const std::array<Rational, 3>& omega,
                                      const Rational& eps, const Rational& a) {
    const Rational &w1 = omega[0], &w2 = omega[1], &w3 = omega[2];
    if (!(w1 > w2 && w2 > w3 && w3 >= 0))
        fail("bad_argument", "spectral parameters must satisfy omega1 > omega2 > omega3 >= 0");
    if (eps == 0 || a == 0)
        fail("zero_scale", "coupling and scale parameters must be nonzero");

    auto root_of = [](const Rational& r, const char* what) {
        if (r < 0)
            fail("bad_argument", std::string(what) + " has a negative radicand");
        auto s = sqrt_exact(r);
        if (!s)
            fail("bad_argument", std::string(what) + " is not an exact square");
        return *s;
    };
    KirchhoffReport rep(make_chart({"p1", "p2", "p3", "m1", "m2", "m3"}),
                        make_chart({"F1", "F2", "F3", "F4", "F5", "F6"}));
    rep.root_a = root_of(w1 - w2, "first root");
    rep.root_b = root_of(w1 - w3 - 4 * eps * eps, "second root");
    rep.spread = w1 - w3;
    const Rational &A_ = rep.root_a, &B_ = rep.root_b, &C_ = rep.spread;
    const Rational half(1, 2);
    Rational s = a / (2 * eps);
    rep.phi = RationalMatrix({{a, 0, -s * B_, 0, 0, 0},
                              {0, 0, 0, 0, half * A_, 0},
                              {0, 0, 0, half * B_, 0, eps},
                              {0, 0, 0, -eps * A_, 0, half * A_ * B_},
                              {0, -s * C_, 0, 0, 0, 0},
                              {-s * A_ * B_, 0, -a * A_, 0, 0, 0}});
    rep.det = rep.phi.det();
    Rational unit = a / (4 * eps) * A_ * C_;
    rep.det_matches = rep.det == -(unit * unit * unit);

    Bivector pi = e3_structure(rep.chart);
    Bivector pattern_aux = e3_structure(rep.aux_chart);

    auto coord = [&](size_t k) { return Polynomial::variable(rep.chart, k); };
    Polynomial H(rep.chart);
    for (size_t k = 0; k < 3; ++k)
        H = H + coord(k) * coord(k) * (half * omega[k]) + coord(3 + k) * coord(3 + k) * half;
    rep.field = ham_vf(pi, H);

    Bivector pulled = pullback_bivector(rep.phi.inverse(), pattern_aux, rep.chart);
    rep.second_structure = pulled * Rational(-2);
    rep.second_is_poisson = is_poisson(rep.second_structure);
    rep.pair_compatible = rep.second_is_poisson && compatible(pi, rep.second_structure);

    Polynomial c1 = coord(0) * coord(0) + coord(1) * coord(1) + coord(2) * coord(2);
    rep.certificate = sharp(rep.second_structure, d(c1 * Rational(-1, 2))) == rep.field;
    rep.casimir_pulled = compose_linear(c1, rep.phi, rep.aux_chart);

    // Entrywise conjugation identity on the auxiliary chart.
    bool conj = true;
    for (size_t i = 0; i < 6 && conj; ++i)
        for (size_t j = i + 1; j < 6 && conj; ++j) {
            Polynomial lhs =
                compose_linear(rep.second_structure.entry(i, j), rep.phi, rep.aux_chart) *
                Rational(-1, 2);
            Polynomial rhs(rep.aux_chart);
            for (size_t k = 0; k < 6; ++k)
                for (size_t l = 0; l < 6; ++l) {
                    Polynomial e = pattern_aux.entry(k, l);
                    if (!e.is_zero())
                        rhs = rhs + e * (rep.phi(i, k) * rep.phi(j, l));
                }
            conj = lhs == rhs;
        }
    rep.conjugation = conj;
    return rep;
}

} // namespace pcx
