#include <doctest.h>

#include "fixtures.hpp"
#include "pcx/errors.hpp"
#include "pcx/symmetry.hpp"

using namespace pcx;
using fx::P;

namespace {

VectorField free_flow(const ChartPtr& c) {
    return fx::vf(c, {"p1", "p2", "0", "0"});
}

} // namespace

TEST_CASE("twisted operators") {
    auto c = darboux_chart(2);
    VectorField X = free_flow(c);

    // On functions the twisted differential is d of the drag.
    CHECK(twisted_d(X, KForm::from_function(P("q1", c))) == d(P("p1", c)));
    // Twice gives zero because the inner dd collapses.
    CHECK(twisted_d(X, twisted_d(X, KForm::from_function(P("q1", c)))).is_zero());
    // Exact one-forms die immediately.
    CHECK(twisted_d(X, d(P("q1^2 + p2", c))).is_zero());

    KForm dq1 = d(P("q1", c));
    CHECK(twisted_boundary(X, dq1).as_function().is_zero());
    KForm theta = KForm::one_form(c, {P("p1", c), P("p2", c), Polynomial(c), Polynomial(c)});
    // i_X d i_X theta = X[p1^2 + p2^2] = 0 for the free flow.
    CHECK(twisted_boundary(X, theta).as_function().is_zero());
    CHECK_THROWS_AS(twisted_boundary(X, KForm::from_function(P("q1", c))), Error);
}

TEST_CASE("bracket chains against the free flow") {
    auto c = darboux_chart(2);
    VectorField X = free_flow(c);

    auto v = master_symmetry_degree(fx::vf(c, {"0", "0", "-1", "0"}), X);
    REQUIRE(v.degree.has_value());
    CHECK(*v.degree == 1);
    REQUIRE(v.iterates.size() == 3);
    CHECK(v.iterates[1] == fx::vf(c, {"-1", "0", "0", "0"}));
    CHECK(v.iterates[2].is_zero());

    // A plain symmetry dies in one step.
    auto sym = master_symmetry_degree(X, X);
    REQUIRE(sym.degree.has_value());
    CHECK(*sym.degree == 0);

    // The zero seed never produces a nonzero-then-zero transition.
    CHECK(!master_symmetry_degree(VectorField::zero(c), X).degree.has_value());

    auto c1 = darboux_chart(1);
    auto v1 = master_symmetry_degree(fx::vf(c1, {"q1", "0"}), fx::vf(c1, {"p1", "0"}));
    REQUIRE(v1.degree.has_value());
    CHECK(*v1.degree == 1);
    CHECK(v1.iterates[1] == fx::vf(c1, {"-1*p1", "0"}));
}

TEST_CASE("the dilation chain cycles for the oscillator") {
    auto c = darboux_chart(1);
    VectorField X = fx::vf(c, {"p1", "-1*q1"});
    auto v = master_symmetry_degree(fx::vf(c, {"q1", "0"}), X, 6);
    CHECK(!v.degree.has_value());
    REQUIRE(v.iterates.size() == 8);
    CHECK(v.iterates[1] == fx::vf(c, {"-1*p1", "-1*q1"}));
    CHECK(v.iterates[2] == fx::vf(c, {"-2*q1", "2*p1"}));
    CHECK(v.iterates[3] == fx::vf(c, {"4*p1", "4*q1"}));
    CHECK(v.iterates[4] == fx::vf(c, {"8*q1", "-8*p1"}));
    CHECK(v.iterates[5] == fx::vf(c, {"-16*p1", "-16*q1"}));
    // The chain is periodic up to scale, so it can never terminate.
    CHECK(v.iterates[3] == v.iterates[1] * Rational(-4));
}

TEST_CASE("Hamiltonian candidates for bracket fields") {
    auto mc = fx::m_chart();
    auto pi = fx::pi_so3();
    Polynomial H = P("1/2*(m1^2 + 1/4*m2^2 + 1/9*m3^2)", mc);
    VectorField X = ham_vf(pi, H);
    VectorField xi = ham_vf(pi, P("m1", mc));

    auto K = infinitesimal_poissonoid_check(pi, xi, X, 2);
    REQUIRE(K.has_value());
    CHECK(sharp(pi, d(*K)) == lie_bracket(xi, X));

    auto c1 = darboux_chart(1);
    auto none = infinitesimal_poissonoid_check(fx::pi_standard(c1), fx::vf(c1, {"q1^2", "0"}),
                                               fx::vf(c1, {"p1", "0"}), 3);
    CHECK(!none.has_value());
}

TEST_CASE("derivative chains of seed functions") {
    auto c = darboux_chart(2);
    auto pi = fx::pi_standard(c);
    VectorField X = free_flow(c);

    auto v = master_generator_check(pi, X, P("q1", c));
    REQUIRE(v.constants_degree.has_value());
    REQUIRE(v.hamiltonian_degree.has_value());
    CHECK(*v.constants_degree == 1);
    CHECK(*v.hamiltonian_degree == 1);
    REQUIRE(v.iterates.size() == 3);
    CHECK(v.iterates[1] == P("p1", c));
    CHECK(v.iterates[2].is_zero());

    auto flat = master_generator_check(pi, X, P("p1", c));
    CHECK(*flat.constants_degree == 0);
    CHECK(*flat.hamiltonian_degree == 0);

    // Along the oscillator flow the coordinate chain rotates forever.
    auto c1 = darboux_chart(1);
    auto cyc = master_generator_check(fx::pi_standard(c1), fx::vf(c1, {"p1", "-1*q1"}),
                                      P("q1", c1), 4);
    CHECK(!cyc.constants_degree.has_value());
    CHECK(!cyc.hamiltonian_degree.has_value());
    CHECK(cyc.iterates.size() == 6);
}

TEST_CASE("sharpened one-forms carry matching chains") {
    auto c = darboux_chart(2);
    auto pi = fx::pi_standard(c);
    VectorField X = free_flow(c);

    auto rep = beta_sharp_master_check(pi, X, d(P("q1", c)));
    CHECK(rep.sharp_field == fx::vf(c, {"0", "0", "-1", "0"}));
    REQUIRE(rep.sharp_verdict.degree.has_value());
    CHECK(*rep.sharp_verdict.degree == 1);
    CHECK(rep.contraction == P("p1", c));
    REQUIRE(rep.generator_verdict.hamiltonian_degree.has_value());
    CHECK(*rep.generator_verdict.hamiltonian_degree == 0);
    CHECK(rep.consistent);

    // Vanishing contraction is consistent by convention.
    auto rep2 = beta_sharp_master_check(pi, X, d(P("p1", c)));
    CHECK(rep2.contraction.is_zero());
    CHECK(rep2.consistent);

    // A form that fails the twisted-closure hypothesis is rejected.
    KForm bad = KForm::one_form(c, {P("q2", c), Polynomial(c), Polynomial(c), Polynomial(c)});
    CHECK_THROWS_AS(beta_sharp_master_check(pi, X, bad), Error);
    CHECK_THROWS_AS(beta_sharp_master_check(pi, X, KForm(c, 2)), Error);
}
