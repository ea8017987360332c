#pragma once

#include <string>
#include <vector>

#include "pcx/calculus.hpp"
#include "pcx/forms.hpp"
#include "pcx/polynomial.hpp"

// Shared structures used across the test suite: the rigid-body bracket on
// three moments, its four-dimensional analogue on six, the mixed
// moment/momentum bracket on six, and a quadratic second structure paired
// with it.
namespace fx {

using namespace pcx;

inline Polynomial P(const std::string& s, const ChartPtr& c) {
    return parse_polynomial(s, c);
}

inline VectorField vf(const ChartPtr& c, const std::vector<std::string>& comps) {
    std::vector<Polynomial> ps;
    ps.reserve(comps.size());
    for (const auto& s : comps)
        ps.push_back(P(s, c));
    return VectorField::make(c, std::move(ps));
}

inline ChartPtr m_chart() {
    return make_chart({"m1", "m2", "m3"});
}

inline ChartPtr n_chart() {
    return make_chart({"n1", "n2", "n3"});
}

// (p1,p2,p3,m1,m2,m3)
inline ChartPtr pm_chart() {
    return make_chart({"p1", "p2", "p3", "m1", "m2", "m3"});
}

inline ChartPtr m4_chart() {
    return make_chart({"m12", "m13", "m14", "m23", "m24", "m34"});
}

inline ChartPtr f6_chart() {
    return make_chart({"F1", "F2", "F3", "F4", "F5", "F6"});
}

// Angular-momentum bracket on any 3-coordinate chart: entries (0,1) = -x3,
// (0,2) = x2, (1,2) = -x1.
inline Bivector pi_rot3(const ChartPtr& c) {
    Bivector b(c);
    b.set_entry(0, 1, -Polynomial::variable(c, 2));
    b.set_entry(0, 2, Polynomial::variable(c, 1));
    b.set_entry(1, 2, -Polynomial::variable(c, 0));
    return b;
}

inline Bivector pi_so3() {
    return pi_rot3(m_chart());
}

// Angular-momentum bracket with the entries damped per axis: (0,1) = -x3*s3,
// (0,2) = x2*s2, (1,2) = -x1*s1.
inline Bivector pi_rot3_scaled(const ChartPtr& c, const Rational& s1, const Rational& s2,
                               const Rational& s3) {
    Bivector b(c);
    b.set_entry(0, 1, -Polynomial::variable(c, 2) * s3);
    b.set_entry(0, 2, Polynomial::variable(c, 1) * s2);
    b.set_entry(1, 2, -Polynomial::variable(c, 0) * s1);
    return b;
}

// Block structure [[0, hat(p)], [hat(p), hat(m)]] on (p, m); hat(v) is the
// cross-product matrix [[0,-v3,v2],[v3,0,-v1],[-v2,v1,0]].
inline Bivector pi_e3(const ChartPtr& c) {
    auto hat_entry = [&](size_t base, size_t a, size_t b) {
        // (a,b) entry of hat(v) for v = coordinates base..base+2, a < b.
        if (a == 0 && b == 1)
            return -Polynomial::variable(c, base + 2);
        if (a == 0 && b == 2)
            return Polynomial::variable(c, base + 1);
        return -Polynomial::variable(c, base + 0); // (1,2)
    };
    Bivector pi(c);
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b) {
            pi.set_entry(a, b, Polynomial::zero(c));          // p-p block
            pi.set_entry(3 + a, 3 + b, hat_entry(3, a, b));   // m-m block
        }
    // p-m block: pi(a, 3+b) = hat(p)(a,b), full matrix.
    auto hat_full = [&](size_t a, size_t b) {
        if (a == b)
            return Polynomial::zero(c);
        if (a < b)
            return hat_entry(0, a, b);
        return -hat_entry(0, b, a);
    };
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b)
            pi.set_entry(a, 3 + b, hat_full(a, b));
    return pi;
}

inline Bivector pi_e3() {
    return pi_e3(pm_chart());
}

// Bracket on the six rotational moments m_ij of four-dimensional rigid-body
// motion, coordinates ordered (m12,m13,m14,m23,m24,m34).
inline Bivector pi_so4(const ChartPtr& c) {
    auto v = [&](const std::string& n) { return P(n, c); };
    Bivector pi(c);
    pi.set_entry(0, 1, -v("m23"));
    pi.set_entry(0, 2, -v("m24"));
    pi.set_entry(0, 3, v("m13"));
    pi.set_entry(0, 4, v("m14"));
    pi.set_entry(1, 2, -v("m34"));
    pi.set_entry(1, 3, -v("m12"));
    pi.set_entry(1, 5, v("m14"));
    pi.set_entry(2, 4, -v("m12"));
    pi.set_entry(2, 5, -v("m13"));
    pi.set_entry(3, 4, -v("m34"));
    pi.set_entry(3, 5, v("m24"));
    pi.set_entry(4, 5, -v("m23"));
    return pi;
}

inline Bivector pi_so4() {
    return pi_so4(m4_chart());
}

// Quadratic second structure compatible with pi_e3 for the frequency triple
// (6,2,1) at unit coupling.
inline Bivector eta_621(const ChartPtr& c) {
    auto v = [&](const std::string& s) { return P(s, c); };
    Bivector eta(c);
    eta.set_entry(0, 1, -v("m3"));
    eta.set_entry(0, 2, v("m2"));
    eta.set_entry(1, 2, -v("m1"));
    eta.set_entry(1, 3, v("4*p3"));
    eta.set_entry(1, 5, -v("4*p1"));
    eta.set_entry(2, 3, -v("5*p2"));
    eta.set_entry(2, 4, v("5*p1"));
    eta.set_entry(3, 4, -v("5*m3"));
    eta.set_entry(3, 5, v("4*m2"));
    return eta;
}

inline Bivector eta_621() {
    return eta_621(pm_chart());
}

inline Bivector pi_standard(const ChartPtr& c) {
    return Bivector::constant(c, RationalMatrix::standard_J(c->dim() / 2));
}

// Jacobi-breaking corruptions of the five structures above.
inline Bivector corrupt_standard(const ChartPtr& c) {
    Bivector b = pi_standard(c);
    b.set_entry(0, 1, Polynomial::variable(c, 0));
    return b;
}

inline Bivector corrupt_so3(const ChartPtr& c) {
    Bivector b = pi_rot3(c);
    b.set_entry(0, 1, -Polynomial::variable(c, 0));
    return b;
}

inline Bivector corrupt_so4(const ChartPtr& c) {
    Bivector b = pi_so4(c);
    b.set_entry(0, 1, -P("m12", c));
    return b;
}

inline Bivector corrupt_e3(const ChartPtr& c) {
    Bivector b = pi_e3(c);
    b.set_entry(3, 4, -P("p3", c));
    return b;
}

inline Bivector corrupt_eta(const ChartPtr& c) {
    Bivector b = eta_621(c);
    b.set_entry(0, 1, -P("m2", c));
    return b;
}

inline Bivector corrupt_so3() {
    return corrupt_so3(m_chart());
}

inline Bivector corrupt_so4() {
    return corrupt_so4(m4_chart());
}

inline Bivector corrupt_e3() {
    return corrupt_e3(pm_chart());
}

inline Bivector corrupt_eta() {
    return corrupt_eta(pm_chart());
}

} // namespace fx
