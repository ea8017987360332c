#include <doctest.h>

#include "fixtures.hpp"
#include "pcx/calculus.hpp"
#include "pcx/canonoid.hpp"
#include "pcx/errors.hpp"
#include "pcx/linsolve.hpp"

using namespace pcx;
using fx::P;

namespace {

ChartPtr src() {
    return darboux_chart(2);
}

ChartPtr dst() {
    return darboux_chart(2, "Q", "P");
}

RationalMatrix S_free() {
    return RationalMatrix::diagonal({0, 0, 1, 1});
}

RationalMatrix A_free() {
    return RationalMatrix({{1, 0, 0, 0},
                           {0, 1, 0, 0},
                           {0, 0, Rational(3, 5), Rational(-1, 5)},
                           {0, 0, Rational(-1, 5), Rational(2, 5)}});
}

RationalMatrix A_osc() {
    return RationalMatrix({{1, 1, 2, 0}, {1, -1, 0, 1}, {1, 0, 1, 1}, {0, 2, 1, -1}});
}

// Solvable membership test for span of antisymmetric matrices.
bool in_span(const RationalMatrix& target, const std::vector<RationalMatrix>& basis) {
    const size_t d = target.rows();
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            pairs.emplace_back(i, j);
    LinearSystem sys(basis.size());
    for (const auto& [i, j] : pairs) {
        std::vector<Rational> row;
        row.reserve(basis.size());
        for (const auto& b : basis)
            row.push_back(b(i, j));
        sys.add_row(std::move(row), target(i, j));
    }
    return sys.solve().feasible;
}

} // namespace

TEST_CASE("momentum-coupling point transformation of the free flow") {
    auto v = check_canonoid(A_free(), S_free());
    CHECK(v.is_canonoid);
    CHECK(!v.is_canonical);
    CHECK(!v.scale_a.has_value());
    REQUIRE(v.C.has_value());
    CHECK(*v.C == RationalMatrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 3}}));

    auto t = transformed_hamiltonian(A_free(), S_free(), src(), dst());
    CHECK(to_string(t.K) == "P1^2 + P1*P2 + 3/2*P2^2");
    CHECK(to_string(t.H2) == "3/10*p1^2 - 1/5*p1*p2 + 1/5*p2^2");
}

TEST_CASE("mixing transformation of the isotropic oscillator") {
    RationalMatrix S = RationalMatrix::identity(4);
    auto v = check_canonoid(A_osc(), S);
    CHECK(v.is_canonoid);
    CHECK(!v.is_canonical);
    RationalMatrix E1({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    CHECK(v.gamma == E1);
    CHECK(*v.C ==
          RationalMatrix({{-2, 3, 0, 3}, {3, 4, -6, 0}, {0, -6, 4, -3}, {3, 0, -3, -2}}));

    auto t = transformed_hamiltonian(A_osc(), S, src(), dst());
    // The angular momentum appears as the source-chart expression.
    CHECK(t.H2 == P("q2*p1 - q1*p2", src()));
    CHECK(to_string(t.H2) == "-1*q1*p2 + q2*p1");
}

TEST_CASE("canonical transformations carry a scale") {
    RationalMatrix S({{1, 0, 2, 0}, {0, 3, 0, 0}, {2, 0, 1, 0}, {0, 0, 0, 2}});
    auto id = check_canonoid(RationalMatrix::identity(4), S);
    CHECK(id.is_canonical);
    CHECK(*id.scale_a == 1);

    auto doubled = check_canonoid(RationalMatrix::identity(4) * Rational(2), S);
    CHECK(doubled.is_canonical);
    CHECK(*doubled.scale_a == 4);

    auto byJ = check_canonoid(RationalMatrix::standard_J(2), S);
    CHECK(byJ.is_canonical);
    CHECK(*byJ.scale_a == 1);
}

TEST_CASE("a shear that breaks the condition") {
    RationalMatrix A = RationalMatrix::identity(4);
    A(0, 1) = 1;
    auto v = check_canonoid(A, RationalMatrix::identity(4));
    CHECK(!v.is_canonoid);
    CHECK(!v.is_canonical);
    CHECK(!v.C.has_value());
    CHECK_THROWS_AS(transformed_hamiltonian(A, RationalMatrix::identity(4), src(), dst()),
                    Error);
}

TEST_CASE("canonical means canonoid for every quadratic Hamiltonian") {
    auto spanning = [](size_t d) {
        std::vector<RationalMatrix> out;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i; j < d; ++j) {
                RationalMatrix S(d, d);
                S(i, j) += 1;
                S(j, i) += 1;
                out.push_back(S);
            }
        return out;
    };
    auto canonoid_for_all = [&](const RationalMatrix& A) {
        for (const auto& S : spanning(A.rows()))
            if (!check_canonoid(A, S).is_canonoid)
                return false;
        return true;
    };
    CHECK(canonoid_for_all(RationalMatrix::identity(4) * Rational(3)));
    CHECK(canonoid_for_all(RationalMatrix::standard_J(2)));
    // Canonoid for the oscillator but not for every S.
    CHECK(check_canonoid(A_osc(), RationalMatrix::identity(4)).is_canonoid);
    CHECK(!canonoid_for_all(A_osc()));
}

TEST_CASE("guards on malformed inputs") {
    CHECK_THROWS_AS(check_canonoid(RationalMatrix::identity(3), RationalMatrix::identity(3)),
                    Error);
    RationalMatrix notsym(4, 4);
    notsym(0, 1) = 1;
    CHECK_THROWS_AS(check_canonoid(RationalMatrix::identity(4), notsym), Error);
    CHECK_THROWS_AS(check_canonoid(RationalMatrix(4, 4), RationalMatrix::identity(4)), Error);
}

TEST_CASE("solution space of the structure equation") {
    auto J = RationalMatrix::standard_J(2);

    auto basis_osc = gamma_nullspace(RationalMatrix::identity(4));
    CHECK(basis_osc.size() == 4);
    CHECK(in_span(J, basis_osc));

    auto basis_free = gamma_nullspace(S_free());
    CHECK(basis_free.size() == 4);
    CHECK(in_span(J, basis_free));

    auto basis_mixed = gamma_nullspace(RationalMatrix::diagonal({1, 0, 1, 1}));
    CHECK(basis_mixed.size() == 2);
    CHECK(in_span(J, basis_mixed));

    auto basis_1dof = gamma_nullspace(RationalMatrix::identity(2));
    REQUIRE(basis_1dof.size() == 1);
    CHECK(basis_1dof[0] == RationalMatrix::standard_J(1));

    CHECK(gamma_nullspace(RationalMatrix(4, 4)).size() == 6);

    // Every member solves the equation; the basis is deterministic.
    for (const auto& g : basis_osc) {
        RationalMatrix eq = g.transpose() * J * RationalMatrix::identity(4) +
                            RationalMatrix::identity(4) * J * g;
        CHECK(eq.is_zero());
    }
    auto again = gamma_nullspace(RationalMatrix::identity(4));
    for (size_t i = 0; i < again.size(); ++i)
        CHECK(again[i] == basis_osc[i]);
}

TEST_CASE("rescalings commute through the Hamiltonian matrix") {
    std::vector<Rational> a{1, 1}, b{2, 3};

    RationalMatrix S13 = RationalMatrix::identity(4);
    S13(0, 2) = S13(2, 0) = 1; // couples q1 to p1, same scale block
    CHECK(rescaling_check(a, b, S13));

    RationalMatrix S14 = RationalMatrix::identity(4);
    S14(0, 3) = S14(3, 0) = 1; // couples q1 to p2 across different scales
    CHECK(!rescaling_check(a, b, S14));

    // Reciprocal scales commute with everything.
    std::vector<Rational> ar{2, 3}, br{Rational(1, 2), Rational(1, 3)};
    CHECK(rescaling_check(ar, br, S14));
    CHECK(rescaling_check(ar, br, S13));

    CHECK_THROWS_AS(rescaling_check({0, 1}, b, S13), Error);
    CHECK_THROWS_AS(rescaling_check({1}, b, S13), Error);

    // Agreement with the full verdict for the scale matrix diag(a, b).
    for (const auto& S : {S13, S14, RationalMatrix::identity(4)}) {
        RationalMatrix A = RationalMatrix::diagonal({a[0], a[1], b[0], b[1]});
        CHECK(rescaling_check(a, b, S) == check_canonoid(A, S).is_canonoid);
    }
}

TEST_CASE("pulled-back symplectic forms from block transformations") {
    auto c = src();
    RationalMatrix swapq({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    RationalMatrix E2({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}});
    CHECK(omega2(swapq, c).constant_matrix() == E2);

    RationalMatrix flipp({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    RationalMatrix E3({{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(omega2(flipp, c).constant_matrix() == E3);

    CHECK(omega2(A_osc(), c).constant_matrix() ==
          RationalMatrix({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
}

TEST_CASE("quadratic matrix extraction") {
    auto c = src();
    Polynomial H = P("1/2*(p1^2 + p2^2 + q1^2 + q2^2)", c);
    CHECK(quadratic_matrix(H) == RationalMatrix::identity(4));
    CHECK(quadratic_form(c, RationalMatrix::identity(4)) == H);
    Polynomial cross = P("q1*p2 - 3*q2^2", c);
    RationalMatrix S = quadratic_matrix(cross);
    CHECK(S(0, 3) == 1);
    CHECK(S(3, 0) == 1);
    CHECK(S(1, 1) == -6);
    CHECK(quadratic_form(c, S) == cross);
    CHECK_THROWS_AS(quadratic_matrix(P("q1^2 + p1", c)), Error);
    CHECK_THROWS_AS(quadratic_matrix(P("q1^2 + 1", c)), Error);
}

TEST_CASE("linear identities over polynomial coefficients") {
    auto c = darboux_chart(1);
    auto monos = ansatz_monomials(c, 1, 2);
    REQUIRE(monos.size() == 5);
    auto as_poly = [&](size_t i) { return from_coefficients(c, {monos[i]}, {Rational(1)}); };
    CHECK(to_string(as_poly(0)) == "p1");
    CHECK(to_string(as_poly(1)) == "q1");
    CHECK(to_string(as_poly(2)) == "p1^2");
    CHECK(to_string(as_poly(3)) == "q1*p1");
    CHECK(to_string(as_poly(4)) == "q1^2");

    // Find x, y with x*q1 + y*p1 == 2*q1 - 3*p1.
    LinearSystem sys(2);
    sys.add_poly_identity({P("q1", c), P("p1", c)}, P("2*q1 - 3*p1", c));
    auto sol = sys.solve();
    REQUIRE(sol.feasible);
    CHECK(sol.particular == std::vector<Rational>{2, -3});
    CHECK(sol.kernel.empty());

    // Inconsistent right-hand side.
    LinearSystem bad(1);
    bad.add_poly_identity({P("q1", c)}, P("p1", c));
    CHECK(!bad.solve().feasible);

    // Underdetermined: kernel carries the redundancy.
    LinearSystem under(2);
    under.add_poly_identity({P("q1", c), P("q1", c)}, P("q1", c));
    auto usol = under.solve();
    REQUIRE(usol.feasible);
    REQUIRE(usol.kernel.size() == 1);
    CHECK(usol.kernel[0] == std::vector<Rational>{-1, 1});

    CHECK(from_coefficients(c, monos, {0, 1, 0, Rational(1, 2), 0}) ==
          P("q1 + 1/2*q1*p1", c));
}

TEST_CASE("embedded family instances stay canonoid without being canonical") {
    // One oscillator degree of freedom next to a free one.
    RationalMatrix S_emb = RationalMatrix::diagonal({1, 0, 1, 1});

    // Oscillator-form new Hamiltonian.
    RationalMatrix A1({{4, 1, 0, 1}, {-2, 2, 0, 2}, {0, 0, 4, 1}, {0, 0, -2, 2}});
    auto v1 = check_canonoid(A1, S_emb);
    CHECK(v1.is_canonoid);
    CHECK(!v1.is_canonical);
    CHECK(v1.gamma ==
          RationalMatrix({{0, 0, 20, 0}, {0, 0, 0, 5}, {-20, 0, 0, 0}, {0, -5, 0, 0}}));
    CHECK(*v1.C == RationalMatrix({{Rational(4, 5), Rational(-2, 5), 0, 0},
                                   {Rational(-2, 5), Rational(1, 5), 0, 0},
                                   {0, 0, 1, 0},
                                   {0, 0, 0, 1}}));
    auto t1 = transformed_hamiltonian(A1, S_emb, src(), dst());
    CHECK(t1.K == P("1/2*(P1^2 + P2^2) + 2/5*Q1^2 - 2/5*Q1*Q2 + 1/10*Q2^2", dst()));
    CHECK(t1.H2 == P("10*p1^2 + 5/2*p2^2 + 10*q1^2", src()));

    // Product-form new Hamiltonian, full-oscillator variant.
    RationalMatrix A2({{1, 1, -1, -1}, {0, 1, 0, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}});
    auto v2 = check_canonoid(A2, RationalMatrix::identity(4));
    CHECK(v2.is_canonoid);
    CHECK(!v2.is_canonical);
    CHECK(*v2.C == RationalMatrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
    auto t2 = transformed_hamiltonian(A2, RationalMatrix::identity(4), src(), dst());
    CHECK(t2.K == P("P1*P2 + Q1*Q2", dst()));

    // Product minus squared-difference new Hamiltonian.
    RationalMatrix A3({{-1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, -1, 1}});
    auto v3 = check_canonoid(A3, S_emb);
    CHECK(v3.is_canonoid);
    CHECK(!v3.is_canonical);
    CHECK(*v3.C == RationalMatrix({{Rational(-1, 2), Rational(1, 2), 0, 0},
                                   {Rational(1, 2), Rational(-1, 2), 0, 0},
                                   {0, 0, 0, 1},
                                   {0, 0, 1, 0}}));
    auto t3 = transformed_hamiltonian(A3, S_emb, src(), dst());
    CHECK(t3.K == P("P1*P2 - 1/4*(Q1 - Q2)^2", dst()));
    CHECK(t3.H2 == P("p2^2 - p1^2 - q1^2", src()));
}
