#include "pcx/whittaker.hpp"

#include "pcx/errors.hpp"

namespace pcx {

KForm liouville_form(const ChartPtr& chart) {
    const size_t d = chart->dim();
    if (d % 2 != 0)
        fail("odd_chart", "canonical one-form needs an even-dimensional chart");
    const size_t n = d / 2;
    std::vector<Polynomial> comps;
    comps.reserve(d);
    for (size_t i = 0; i < n; ++i)
        comps.push_back(Polynomial::variable(chart, n + i));
    for (size_t i = 0; i < n; ++i)
        comps.push_back(Polynomial(chart));
    return KForm::one_form(chart, std::move(comps));
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, std::vector<size_t> cols,
                    size_t row, const ChartPtr& chart) {
    if (cols.size() == 1)
        return m[row][cols[0]];
    Polynomial acc(chart);
    for (size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& pivot = m[row][cols[k]];
        if (pivot.is_zero())
            continue;
        std::vector<size_t> rest;
        rest.reserve(cols.size() - 1);
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != k)
                rest.push_back(cols[t]);
        Polynomial minor = poly_det(m, std::move(rest), row + 1, chart);
        acc = (k % 2 == 0) ? acc + pivot * minor : acc - pivot * minor;
    }
    return acc;
}

} // namespace

Polynomial two_form_det(const KForm& w) {
    if (w.degree() != 2)
        fail("degree_mismatch", "determinant is defined for two-forms");
    const ChartPtr& chart = w.chart();
    const size_t d = chart->dim();
    std::vector<std::vector<Polynomial>> m(d, std::vector<Polynomial>(d, Polynomial(chart)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (i != j)
                m[i][j] = w.entry({i, j});
    std::vector<size_t> cols(d);
    for (size_t c = 0; c < d; ++c)
        cols[c] = c;
    return poly_det(m, std::move(cols), 0, chart);
}

GeneratorReport generator_check(const VectorField& X, const KForm& theta) {
    if (theta.degree() != 1)
        fail("degree_mismatch", "generator check needs a one-form");
    require_same_chart(X.chart, theta.chart(), "flow chart differs from the form");
    const ChartPtr& chart = theta.chart();
    if (chart->dim() % 2 != 0)
        fail("odd_chart", "generator check needs an even-dimensional chart");

    GeneratorReport rep(chart);
    rep.absolute = lie_form(X, theta).is_zero();
    rep.dtheta = d(theta);
    rep.relative = lie_form(X, rep.dtheta).is_zero();
    rep.K = interior(X, theta).as_function();
    rep.dtheta_det = two_form_det(rep.dtheta);
    rep.nondegenerate = !rep.dtheta_det.is_zero();
    rep.is_identity_shift = d(theta - liouville_form(chart)).is_zero();
    rep.certificate = interior(X, rep.dtheta * Rational(-1)) == d(rep.K);
    return rep;
}

std::vector<Polynomial> integrability_probe(const VectorField& X, const KForm& theta) {
    if (theta.degree() != 1)
        fail("degree_mismatch", "probe needs a one-form");
    require_same_chart(X.chart, theta.chart(), "flow chart differs from the form");
    return lie_form(X, theta).components();
}

} // namespace pcx
