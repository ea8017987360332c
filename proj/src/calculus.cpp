#include "pcx/calculus.hpp"

#include "pcx/errors.hpp"

namespace pcx {

KForm d(const Polynomial& f) {
    const ChartPtr& c = f.chart();
    std::vector<Polynomial> comps;
    comps.reserve(c->dim());
    for (size_t i = 0; i < c->dim(); ++i)
        comps.push_back(diff(f, i));
    return KForm::one_form(c, std::move(comps));
}

KForm d(const KForm& w) {
    const ChartPtr& c = w.chart();
    const size_t dim = c->dim();
    switch (w.degree()) {
    case 0:
        return d(w.as_function());
    case 1: {
        KForm r(c, 2);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = i + 1; j < dim; ++j) {
                Polynomial e = diff(w.entry({j}), i) - diff(w.entry({i}), j);
                r.set_entry({i, j}, e);
            }
        return r;
    }
    case 2: {
        KForm r(c, 3);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = i + 1; j < dim; ++j)
                for (size_t k = j + 1; k < dim; ++k) {
                    Polynomial e = diff(w.entry({j, k}), i) - diff(w.entry({i, k}), j) +
                                   diff(w.entry({i, j}), k);
                    r.set_entry({i, j, k}, e);
                }
        return r;
    }
    default:
        fail("degree_unsupported", "exterior derivative of a degree-3 form is unsupported");
    }
}

KForm interior(const VectorField& X, const KForm& w) {
    require_same_chart(X.chart, w.chart(), "interior product");
    const ChartPtr& c = w.chart();
    const size_t dim = c->dim();
    switch (w.degree()) {
    case 0:
        fail("degree_unsupported", "interior product with a function");
    case 1: {
        Polynomial r(c);
        for (size_t i = 0; i < dim; ++i)
            if (!X.comps[i].is_zero())
                r += X.comps[i] * w.entry({i});
        return KForm::from_function(r);
    }
    case 2: {
        std::vector<Polynomial> comps;
        comps.reserve(dim);
        for (size_t j = 0; j < dim; ++j) {
            Polynomial r(c);
            for (size_t i = 0; i < dim; ++i)
                if (!X.comps[i].is_zero())
                    r += X.comps[i] * w.entry({i, j});
            comps.push_back(std::move(r));
        }
        return KForm::one_form(c, std::move(comps));
    }
    case 3: {
        KForm r(c, 3 - 1);
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = j + 1; k < dim; ++k) {
                Polynomial e(c);
                for (size_t i = 0; i < dim; ++i)
                    if (!X.comps[i].is_zero())
                        e += X.comps[i] * w.entry({i, j, k});
                r.set_entry({j, k}, e);
            }
        return r;
    }
    default:
        fail("degree_unsupported", "interior product degree out of range");
    }
}

KForm lie_form(const VectorField& X, const KForm& w) {
    require_same_chart(X.chart, w.chart(), "Lie derivative");
    if (w.degree() == 0)
        return interior(X, d(w));
    return interior(X, d(w)) + d(interior(X, w));
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    require_same_chart(X.chart, Y.chart, "Lie bracket");
    const ChartPtr& c = X.chart;
    std::vector<Polynomial> comps;
    comps.reserve(c->dim());
    for (size_t i = 0; i < c->dim(); ++i)
        comps.push_back(X.apply(Y.comps[i]) - Y.apply(X.comps[i]));
    return VectorField::make(c, std::move(comps));
}

VectorField sharp(const Bivector& pi, const KForm& a) {
    require_same_chart(pi.chart(), a.chart(), "sharp");
    if (a.degree() != 1)
        fail("degree_mismatch", "sharp expects a one-form");
    const ChartPtr& c = pi.chart();
    std::vector<Polynomial> comps(c->dim(), Polynomial::zero(c));
    for (const auto& [ij, p] : pi.upper()) {
        const auto [i, j] = ij;
        comps[i] += p * a.entry({j});
        comps[j] -= p * a.entry({i});
    }
    return VectorField::make(c, std::move(comps));
}

VectorField ham_vf(const Bivector& pi, const Polynomial& H) {
    return sharp(pi, d(H));
}

Polynomial poisson_bracket(const Bivector& pi, const Polynomial& F, const Polynomial& G) {
    require_same_chart(pi.chart(), F.chart(), "poisson bracket");
    require_same_chart(pi.chart(), G.chart(), "poisson bracket");
    Polynomial r(pi.chart());
    for (const auto& [ij, p] : pi.upper()) {
        const auto [i, j] = ij;
        r += p * (diff(F, i) * diff(G, j) - diff(F, j) * diff(G, i));
    }
    return r;
}

Trivector schouten(const Bivector& a, const Bivector& b) {
    require_same_chart(a.chart(), b.chart(), "schouten bracket");
    const ChartPtr& c = a.chart();
    const size_t dim = c->dim();
    Trivector T(c);
    auto half = [&](const Bivector& u, const Bivector& v, size_t i, size_t j, size_t k) {
        Polynomial s(c);
        for (size_t l = 0; l < dim; ++l) {
            s += u.entry(i, l) * diff(v.entry(j, k), l);
            s += u.entry(j, l) * diff(v.entry(k, i), l);
            s += u.entry(k, l) * diff(v.entry(i, j), l);
        }
        return s;
    };
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j)
            for (size_t k = j + 1; k < dim; ++k)
                T.set_entry(i, j, k, half(a, b, i, j, k) + half(b, a, i, j, k));
    return T;
}

Polynomial jacobiator(const Bivector& pi, const Polynomial& F, const Polynomial& G,
                      const Polynomial& H) {
    return poisson_bracket(pi, poisson_bracket(pi, F, G), H) +
           poisson_bracket(pi, poisson_bracket(pi, G, H), F) +
           poisson_bracket(pi, poisson_bracket(pi, H, F), G);
}

Polynomial contract(const Trivector& T, const KForm& a, const KForm& b, const KForm& c) {
    require_same_chart(T.chart(), a.chart(), "trivector contraction");
    require_same_chart(T.chart(), b.chart(), "trivector contraction");
    require_same_chart(T.chart(), c.chart(), "trivector contraction");
    if (a.degree() != 1 || b.degree() != 1 || c.degree() != 1)
        fail("degree_mismatch", "trivector contracts with three one-forms");
    const ChartPtr& ch = T.chart();
    const size_t dim = ch->dim();
    Polynomial r(ch);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                Polynomial t = T.entry(i, j, k);
                if (t.is_zero())
                    continue;
                r += t * a.entry({i}) * b.entry({j}) * c.entry({k});
            }
    return r;
}

Bivector lie_bivector(const VectorField& X, const Bivector& pi) {
    require_same_chart(X.chart, pi.chart(), "Lie derivative of bivector");
    const ChartPtr& c = pi.chart();
    const size_t dim = c->dim();
    Bivector r(c);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j) {
            Polynomial e = X.apply(pi.entry(i, j));
            for (size_t l = 0; l < dim; ++l) {
                e -= pi.entry(l, j) * diff(X.comps[i], l);
                e -= pi.entry(i, l) * diff(X.comps[j], l);
            }
            r.set_entry(i, j, e);
        }
    return r;
}

Polynomial pullback_function(const RationalMatrix& A, const Polynomial& f,
                             const ChartPtr& source_chart) {
    return compose_linear(f, A, source_chart);
}

KForm pullback_form(const RationalMatrix& A, const KForm& w, const ChartPtr& source_chart) {
    const size_t dt = w.chart()->dim();
    const size_t ds = source_chart->dim();
    if (A.rows() != dt || A.cols() != ds)
        fail("dimension_mismatch", "pullback matrix shape does not match charts");
    if (w.degree() == 0)
        return KForm::from_function(compose_linear(w.as_function(), A, source_chart));
    // Entries composed with the map, then indices contracted against A.
    std::map<std::vector<size_t>, Polynomial> composed;
    for (const auto& [idx, p] : w.entries())
        composed[idx] = compose_linear(p, A, source_chart);
    auto comp_entry = [&](std::vector<size_t> idx) {
        int sign = 1;
        for (size_t i = 1; i < idx.size(); ++i)
            for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
                if (idx[j - 1] == idx[j])
                    return Polynomial::zero(source_chart);
                std::swap(idx[j - 1], idx[j]);
                sign = -sign;
            }
        auto it = composed.find(idx);
        if (it == composed.end())
            return Polynomial::zero(source_chart);
        return sign > 0 ? it->second : -it->second;
    };
    KForm r(source_chart, w.degree());
    if (w.degree() == 1) {
        std::vector<Polynomial> comps;
        for (size_t i = 0; i < ds; ++i) {
            Polynomial e(source_chart);
            for (size_t a = 0; a < dt; ++a)
                if (A(a, i) != 0)
                    e += comp_entry({a}) * A(a, i);
            comps.push_back(std::move(e));
        }
        return KForm::one_form(source_chart, std::move(comps));
    }
    if (w.degree() == 2) {
        for (size_t i = 0; i < ds; ++i)
            for (size_t j = i + 1; j < ds; ++j) {
                Polynomial e(source_chart);
                for (size_t a = 0; a < dt; ++a)
                    for (size_t b = 0; b < dt; ++b) {
                        if (a == b || A(a, i) == 0 || A(b, j) == 0)
                            continue;
                        e += comp_entry({a, b}) * (A(a, i) * A(b, j));
                    }
                r.set_entry({i, j}, e);
            }
        return r;
    }
    for (size_t i = 0; i < ds; ++i)
        for (size_t j = i + 1; j < ds; ++j)
            for (size_t k = j + 1; k < ds; ++k) {
                Polynomial e(source_chart);
                for (size_t a = 0; a < dt; ++a)
                    for (size_t b = 0; b < dt; ++b)
                        for (size_t cc = 0; cc < dt; ++cc) {
                            if (A(a, i) == 0 || A(b, j) == 0 || A(cc, k) == 0)
                                continue;
                            Polynomial t = comp_entry({a, b, cc});
                            if (!t.is_zero())
                                e += t * (A(a, i) * A(b, j) * A(cc, k));
                        }
                r.set_entry({i, j, k}, e);
            }
    return r;
}

Bivector pullback_bivector(const RationalMatrix& A, const Bivector& pi,
                           const ChartPtr& source_chart) {
    const size_t dt = pi.chart()->dim();
    const size_t ds = source_chart->dim();
    if (A.rows() != dt || A.cols() != ds || dt != ds)
        fail("dimension_mismatch", "bivector pullback needs a square matrix matching the charts");
    const RationalMatrix Ainv = A.inverse();
    Bivector r(source_chart);
    for (size_t i = 0; i < ds; ++i)
        for (size_t j = i + 1; j < ds; ++j) {
            Polynomial e(source_chart);
            for (const auto& [kl, p] : pi.upper()) {
                const auto [k, l] = kl;
                // Both orientations of the stored upper entry.
                const Rational w1 = Ainv(i, k) * Ainv(j, l) - Ainv(i, l) * Ainv(j, k);
                if (w1 != 0)
                    e += compose_linear(p, A, source_chart) * w1;
            }
            r.set_entry(i, j, e);
        }
    return r;
}

VectorField pushforward(const RationalMatrix& A, const VectorField& X,
                        const ChartPtr& target_chart) {
    const size_t ds = X.chart->dim();
    const size_t dt = target_chart->dim();
    if (A.rows() != dt || A.cols() != ds || dt != ds)
        fail("dimension_mismatch", "pushforward needs a square matrix matching the charts");
    const RationalMatrix Ainv = A.inverse();
    std::vector<Polynomial> moved;
    moved.reserve(ds);
    for (size_t j = 0; j < ds; ++j)
        moved.push_back(compose_linear(X.comps[j], Ainv, target_chart));
    std::vector<Polynomial> comps;
    comps.reserve(dt);
    for (size_t i = 0; i < dt; ++i) {
        Polynomial e(target_chart);
        for (size_t j = 0; j < ds; ++j)
            if (A(i, j) != 0)
                e += moved[j] * A(i, j);
        comps.push_back(std::move(e));
    }
    return VectorField::make(target_chart, std::move(comps));
}

Bivector rename_bivector(const Bivector& pi, const ChartPtr& to) {
    if (to->dim() != pi.chart()->dim())
        fail("dimension_mismatch", "bivector rename between charts of different dimension");
    Bivector r(to);
    for (const auto& [ij, p] : pi.upper())
        r.set_entry(ij.first, ij.second, rename_chart(p, to));
    return r;
}

} // namespace pcx
