#include "pcx/canonoid.hpp"

#include "pcx/errors.hpp"
#include "pcx/linsolve.hpp"

namespace pcx {

namespace {

size_t half_dim(const RationalMatrix& A) {
    if (!A.is_square() || A.rows() == 0 || A.rows() % 2 != 0)
        fail("dimension_mismatch", "transformation matrix must be square of even dimension");
    return A.rows() / 2;
}

void check_pair_shapes(const RationalMatrix& A, const RationalMatrix& S) {
    half_dim(A);
    if (S.rows() != A.rows() || S.cols() != A.cols())
        fail("dimension_mismatch", "Hamiltonian matrix shape does not match the transformation");
    if (!S.is_symmetric())
        fail("not_symmetric", "Hamiltonian matrix must be symmetric");
}

} // namespace

CanonoidVerdict check_canonoid(const RationalMatrix& A, const RationalMatrix& S) {
    check_pair_shapes(A, S);
    const size_t n = half_dim(A);
    const RationalMatrix J = RationalMatrix::standard_J(n);
    const RationalMatrix Ainv = A.inverse();

    CanonoidVerdict v;
    v.gamma = A.transpose() * J * A;
    const RationalMatrix eq = v.gamma.transpose() * J * S + S * J * v.gamma;
    v.is_canonoid = eq.is_zero();

    if (v.is_canonoid) {
        RationalMatrix C = -(J * A * J * S * Ainv);
        if (!C.is_symmetric())
            fail("internal_error", "canonoid condition held but the new Hessian is asymmetric");
        v.C = std::move(C);
    }

    const Rational a = v.gamma(0, n);
    if (a != 0 && v.gamma == J * a) {
        v.is_canonical = true;
        v.scale_a = a;
    }
    return v;
}

TransformedHamiltonian transformed_hamiltonian(const RationalMatrix& A, const RationalMatrix& S,
                                               const ChartPtr& source_chart,
                                               const ChartPtr& target_chart) {
    if (source_chart->dim() != A.rows() || target_chart->dim() != A.rows())
        fail("dimension_mismatch", "charts do not match the transformation dimension");
    CanonoidVerdict v = check_canonoid(A, S);
    if (!v.is_canonoid)
        fail("not_canonoid", "transformation is not canonoid for this Hamiltonian");
    TransformedHamiltonian t{*v.C, Polynomial(), Polynomial()};
    t.K = quadratic_form(target_chart, t.C);
    t.H2 = quadratic_form(source_chart, A.transpose() * t.C * A);
    return t;
}

std::vector<RationalMatrix> gamma_nullspace(const RationalMatrix& S) {
    if (!S.is_square() || S.rows() == 0 || S.rows() % 2 != 0)
        fail("dimension_mismatch", "Hamiltonian matrix must be square of even dimension");
    if (!S.is_symmetric())
        fail("not_symmetric", "Hamiltonian matrix must be symmetric");
    const size_t d = S.rows();
    const size_t n = d / 2;
    const RationalMatrix J = RationalMatrix::standard_J(n);

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            pairs.emplace_back(i, j);

    // Rows of the homogeneous system, one per strict upper matrix position of
    // the antisymmetric residual S J gamma - gamma J S.
    RationalMatrix M(pairs.size(), pairs.size());
    for (size_t col = 0; col < pairs.size(); ++col) {
        RationalMatrix gamma(d, d);
        gamma(pairs[col].first, pairs[col].second) = 1;
        gamma(pairs[col].second, pairs[col].first) = -1;
        RationalMatrix eq = S * J * gamma - gamma * J * S;
        for (size_t row = 0; row < pairs.size(); ++row)
            M(row, col) = eq(pairs[row].first, pairs[row].second);
    }

    std::vector<RationalMatrix> basis;
    for (const auto& v : nullspace(M)) {
        RationalMatrix gamma(d, d);
        for (size_t k = 0; k < pairs.size(); ++k) {
            gamma(pairs[k].first, pairs[k].second) = v[k];
            gamma(pairs[k].second, pairs[k].first) = -v[k];
        }
        basis.push_back(std::move(gamma));
    }
    return basis;
}

KForm omega2(const RationalMatrix& A, const ChartPtr& chart) {
    const size_t n = half_dim(A);
    if (chart->dim() != A.rows())
        fail("dimension_mismatch", "chart does not match the transformation dimension");
    return KForm::constant_two_form(chart, A.transpose() * RationalMatrix::standard_J(n) * A);
}

bool rescaling_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                     const RationalMatrix& S) {
    const size_t n = a.size();
    if (b.size() != n || n == 0)
        fail("dimension_mismatch", "rescaling needs matching nonempty scale lists");
    if (S.rows() != 2 * n || S.cols() != 2 * n)
        fail("dimension_mismatch", "Hamiltonian matrix shape does not match the scales");
    if (!S.is_symmetric())
        fail("not_symmetric", "Hamiltonian matrix must be symmetric");
    std::vector<Rational> diag(2 * n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0 || b[i] == 0)
            fail("zero_scale", "rescaling factors must be nonzero");
        diag[i] = diag[n + i] = -a[i] * b[i];
    }
    const RationalMatrix B = RationalMatrix::diagonal(diag);
    return B * S == S * B;
}

RationalMatrix quadratic_matrix(const Polynomial& H) {
    const size_t d = H.chart()->dim();
    RationalMatrix S(d, d);
    for (const auto& [m, c] : H.terms()) {
        size_t i = d, j = d;
        uint32_t deg = 0;
        for (size_t v = 0; v < d; ++v) {
            deg += m[v];
            if (m[v] == 1) {
                if (i == d)
                    i = v;
                else
                    j = v;
            } else if (m[v] == 2) {
                i = j = v;
            }
        }
        if (deg != 2)
            fail("bad_argument", "Hamiltonian is not homogeneous quadratic: " + to_string(H));
        if (i == j) {
            S(i, i) = 2 * c;
        } else {
            S(i, j) = c;
            S(j, i) = c;
        }
    }
    return S;
}

Polynomial quadratic_form(const ChartPtr& chart, const RationalMatrix& M) {
    if (M.rows() != chart->dim() || M.cols() != chart->dim())
        fail("dimension_mismatch", "quadratic form matrix does not match the chart");
    if (!M.is_symmetric())
        fail("not_symmetric", "quadratic form needs a symmetric matrix");
    Polynomial p(chart);
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = i; j < M.cols(); ++j) {
            if (M(i, j) == 0)
                continue;
            Monomial m(chart->dim(), 0);
            m[i] += 1;
            m[j] += 1;
            p.add_term(m, i == j ? M(i, j) / 2 : M(i, j));
        }
    return p;
}

} // namespace pcx
