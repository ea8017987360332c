#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "pcx/dynamics.hpp"
#include "pcx/errors.hpp"

using namespace pcx;
using namespace fx;

TEST_CASE("compiled polynomials evaluate like their exact originals") {
    auto c = make_chart({"q1", "p1"});
    auto cp = CompiledPoly::compile(P("1/2*q1^2 - 3*p1 + 7", c));
    CHECK(cp.eval({2.0, 1.5}) == doctest::Approx(0.5 * 4.0 - 4.5 + 7.0));
    CHECK(cp.eval({0.0, 0.0}) == doctest::Approx(7.0));

    auto zero = CompiledPoly::compile(Polynomial(c));
    CHECK(zero.eval({1.0, 2.0}) == 0.0);

    CHECK_THROWS_WITH_AS(cp.eval({1.0}), doctest::Contains("state has"), Error);
}

TEST_CASE("compiled fields evaluate componentwise") {
    auto c = make_chart({"q1", "p1"});
    auto f = CompiledField::compile(vf(c, {"p1", "-1*q1"}));
    std::vector<double> out;
    f.eval({0.25, -2.0}, out);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == doctest::Approx(-2.0));
    CHECK(out[1] == doctest::Approx(-0.25));
}

TEST_CASE("oscillator orbit closes and conserves energy") {
    auto c = make_chart({"q1", "p1"});
    auto X = vf(c, {"p1", "-1*q1"});
    const double two_pi = 6.283185307179586;
    auto traj = integrate_rk4(X, {1.0, 0.0}, two_pi, 1e-3);

    CHECK_FALSE(traj.aborted);
    REQUIRE(traj.times.size() == traj.states.size());
    CHECK(traj.times.size() == 6284);
    CHECK(traj.times.back() == doctest::Approx(two_pi));

    CHECK(traj.states.back()[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::fabs(traj.states.back()[1]) < 1e-9);

    auto drifts = drift_report({P("1/2*q1^2 + 1/2*p1^2", c)}, traj);
    REQUIRE(drifts.size() == 1);
    CHECK(drifts[0] < 1e-12);
}

TEST_CASE("halving the step shrinks the drift at fourth order") {
    auto c = make_chart({"q1", "p1"});
    auto X = vf(c, {"p1", "-1*q1"});
    auto H = P("1/2*q1^2 + 1/2*p1^2", c);

    auto coarse = drift_report({H}, integrate_rk4(X, {1.0, 0.0}, 10.0, 0.05))[0];
    auto fine = drift_report({H}, integrate_rk4(X, {1.0, 0.0}, 10.0, 0.025))[0];
    REQUIRE(coarse > 1e-12);
    REQUIRE(fine > 0.0);
    CHECK(coarse / fine >= 12.0);
}

TEST_CASE("rigid body drift stays small for every invariant at once") {
    auto mc = m_chart();
    auto X = vf(mc, {"-5/36*m2*m3", "8/9*m1*m3", "-3/4*m1*m2"});
    auto H = P("1/2*m1^2 + 1/8*m2^2 + 1/18*m3^2", mc);
    auto C = P("m1^2 + m2^2 + m3^2", mc);

    auto traj = integrate_rk4(X, {1.0, 0.5, -0.25}, 10.0, 1e-2);
    CHECK_FALSE(traj.aborted);
    auto drifts = drift_report({H, C}, traj);
    REQUIRE(drifts.size() == 2);
    CHECK(drifts[0] < 1e-8);
    CHECK(drifts[1] < 1e-8);
}

TEST_CASE("hamiltonian flow drives the oscillator directly from the structure") {
    auto c = make_chart({"q1", "p1"});
    auto traj = integrate(pi_standard(c), P("1/2*q1^2 + 1/2*p1^2", c), {1.0, 0.0},
                          6.283185307179586, 1e-3);
    CHECK_FALSE(traj.aborted);
    CHECK(traj.states.back()[0] == doctest::Approx(1.0).epsilon(1e-9));

    auto named = drift_report({{"energy", P("1/2*q1^2 + 1/2*p1^2", c)}, {"q", P("q1", c)}}, traj);
    REQUIRE(named.size() == 2);
    CHECK(named[0].name == "energy");
    CHECK(named[0].initial == doctest::Approx(0.5));
    CHECK(named[0].max_drift < 1e-12);
    CHECK(named[1].max_drift > 1.0);
}

TEST_CASE("a horizon shorter than one step still takes one step") {
    auto c = make_chart({"q1", "p1"});
    auto traj = integrate_rk4(vf(c, {"p1", "0"}), {0.0, 1.0}, 0.5, 2.0);
    REQUIRE(traj.states.size() == 2);
    CHECK(traj.times.back() == doctest::Approx(0.5));
    CHECK(traj.states.back()[0] == doctest::Approx(0.5));
}

TEST_CASE("finite-time blowup aborts and keeps the finite prefix") {
    auto c = make_chart({"u"});
    auto traj = integrate_rk4(vf(c, {"u^2"}), {1.0}, 2.0, 0.01);
    CHECK(traj.aborted);
    CHECK(traj.states.size() < 201);
    CHECK(traj.states.size() == traj.times.size());
    for (const auto& s : traj.states) CHECK(std::isfinite(s[0]));
}

TEST_CASE("integration rejects malformed inputs") {
    auto c = make_chart({"q1", "p1"});
    auto X = vf(c, {"p1", "-1*q1"});
    CHECK_THROWS_WITH_AS(integrate_rk4(X, {1.0}, 1.0, 0.1), doctest::Contains("initial state"),
                         Error);
    CHECK_THROWS_WITH_AS(integrate_rk4(X, {1.0, 0.0}, 1.0, 0.0),
                         doctest::Contains("step must be positive"), Error);
    CHECK_THROWS_WITH_AS(integrate_rk4(X, {1.0, 0.0}, -1.0, 0.1),
                         doctest::Contains("t_end must be positive"), Error);
    CHECK_THROWS_WITH_AS(integrate_rk4(X, {1.0, 1.0 / 0.0}, 1.0, 0.1),
                         doctest::Contains("finite"), Error);

    Trajectory empty;
    CHECK_THROWS_WITH_AS(drift_report({P("q1", c)}, empty), doctest::Contains("no states"),
                         Error);
}
