#include "pcx/scenario.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "pcx/calculus.hpp"
#include "pcx/canonoid.hpp"
#include "pcx/dynamics.hpp"
#include "pcx/errors.hpp"
#include "pcx/poissonoid.hpp"
#include "pcx/whittaker.hpp"

namespace pcx {

namespace {

namespace fs = std::filesystem;

const std::set<std::string>& check_types() {
    static const std::set<std::string> kinds = {
        "is_poisson", "compat",     "canonoid",   "gamma_space", "constraints",
        "form_pairing", "hopf",     "whittaker",  "poissonoid",  "casimirs",
        "hamiltonize",  "kirchhoff", "drift",     "noether"};
    return kinds;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const Json& field(const Json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) fail("bad_scenario", ctx + " requires \"" + key + "\"");
    return *it;
}

Bivector structure_from_json(const Json& j, const ChartPtr& chart, const std::string& ctx) {
    const std::string kind = field(j, "kind", ctx).get<std::string>();
    const Json& data = field(j, "data", ctx);
    if (kind == "bivector") {
        Bivector pi = bivector_from_json(data, chart);
        if (!is_poisson(pi)) fail("bad_scenario", ctx + " fails the Jacobi identity");
        return pi;
    }
    if (kind == "symplectic_matrix") {
        RationalMatrix m = matrix_from_json(data);
        if (m.rows() != chart->dim() || m.cols() != chart->dim())
            fail("bad_scenario", ctx + " matrix does not match the chart dimension");
        if (!m.is_antisymmetric()) fail("bad_scenario", ctx + " matrix is not antisymmetric");
        if (m.det() == 0) fail("bad_scenario", ctx + " matrix is degenerate");
        return Bivector::constant(chart, m.inverse().transpose());
    }
    fail("bad_scenario", ctx + " kind must be \"bivector\" or \"symplectic_matrix\"");
}

// Expected-output blob for one check; absent keys mean nothing is pinned.
Json blob(const Scenario& s, const std::string& key) {
    if (s.expected.is_object() && s.expected.contains(key)) return s.expected.at(key);
    return Json::object();
}

void check_bool(const Json& exp, const char* key, bool actual, std::vector<std::string>& out) {
    if (!exp.contains(key)) return;
    const bool want = exp.at(key).get<bool>();
    if (actual != want)
        out.push_back(std::string(key) + ": expected " + (want ? "true" : "false") + ", got " +
                      (actual ? "true" : "false"));
}

void check_poly(const Json& exp, const char* key, const ChartPtr& chart, const Polynomial& actual,
                std::vector<std::string>& out) {
    if (!exp.contains(key)) return;
    Polynomial want = poly_from_json(exp.at(key), chart);
    if (want != actual)
        out.push_back(std::string(key) + ": expected " + to_string(want) + ", got " +
                      to_string(actual));
}

void check_matrix(const Json& exp, const char* key, const RationalMatrix& actual,
                  std::vector<std::string>& out) {
    if (!exp.contains(key)) return;
    RationalMatrix want = matrix_from_json(exp.at(key));
    if (want != actual)
        out.push_back(std::string(key) + ": expected " + matrix_to_json(want).dump() + ", got " +
                      matrix_to_json(actual).dump());
}

const Bivector& select_structure(const Scenario& s, const std::string& sel) {
    if (sel == "structure") return s.structure;
    if (sel == "structure2") {
        if (!s.structure2) fail("bad_scenario", "scenario has no structure2");
        return *s.structure2;
    }
    fail("bad_scenario", "unknown structure selector \"" + sel + "\"");
}

RationalMatrix hamiltonian_matrix(const Scenario& s, const Json& c) {
    if (c.contains("S")) return matrix_from_json(c.at("S"));
    return quadratic_matrix(s.hamiltonian);
}

void run_is_poisson(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const std::string sel = c.value("target", "structure");
    if (!is_poisson(select_structure(s, sel)))
        out.push_back(sel + " fails the Jacobi identity");
}

void run_compat(const Scenario& s, const Json&, std::vector<std::string>& out) {
    if (!s.structure2) fail("bad_scenario", "compat check needs structure2");
    if (!compatible(s.structure, *s.structure2))
        out.push_back("the Schouten bracket of the two structures does not vanish");
}

void run_canonoid(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const auto& T = s.transform(field(c, "transform", "canonoid check").get<std::string>());
    const RationalMatrix S = hamiltonian_matrix(s, c);
    const CanonoidVerdict v = check_canonoid(T.matrix, S);
    const Json exp = blob(s, "canonoid:" + T.name);
    if (v.is_canonoid != exp.value("canonoid", true))
        out.push_back(std::string("canonoid: expected ") +
                      (exp.value("canonoid", true) ? "true" : "false") + ", got " +
                      (v.is_canonoid ? "true" : "false"));
    check_bool(exp, "canonical", v.is_canonical, out);
    if (!v.is_canonoid) return;
    const TransformedHamiltonian th = transformed_hamiltonian(T.matrix, S, s.chart, T.target);
    check_matrix(exp, "C", th.C, out);
    check_poly(exp, "K", T.target, th.K, out);
    check_poly(exp, "H2", s.chart, th.H2, out);
}

void run_gamma_space(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const RationalMatrix S = hamiltonian_matrix(s, c);
    const size_t n = S.rows();
    if (n % 2 != 0) {
        out.push_back("gamma space needs an even-dimensional Hamiltonian matrix");
        return;
    }
    const auto basis = gamma_nullspace(S);
    const Json exp = blob(s, "gamma_space");
    if (!exp.contains("dim")) {
        out.push_back("expected blob gamma_space.dim is missing");
    } else if (basis.size() != exp.at("dim").get<size_t>()) {
        out.push_back("dim: expected " + std::to_string(exp.at("dim").get<size_t>()) + ", got " +
                      std::to_string(basis.size()));
    }
    const RationalMatrix J = RationalMatrix::standard_J(n / 2);
    for (size_t i = 0; i < basis.size(); ++i) {
        const RationalMatrix& G = basis[i];
        if (!G.is_antisymmetric() || !(G.transpose() * J * S + S * J * G).is_zero())
            out.push_back("basis element " + std::to_string(i) +
                          " does not solve the structure equation");
    }
}

void run_constraints(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const auto& T = s.transform(field(c, "transform", "constraints check").get<std::string>());
    if (T.matrix.rows() != 4 || T.matrix.cols() != 4) {
        out.push_back("constraint residuals are defined for 4x4 transformations");
        return;
    }
    static const ChartPtr blocks = make_chart({"a11", "a12", "a21", "a22", "b11", "b12", "b21",
                                               "b22", "c11", "c12", "c21", "c22", "d11", "d12",
                                               "d21", "d22"});
    // 2x2 block layout: A = [[a, b], [c, d]].
    static const std::array<std::pair<size_t, size_t>, 16> slots = {{{0, 0},
                                                                     {0, 1},
                                                                     {1, 0},
                                                                     {1, 1},
                                                                     {0, 2},
                                                                     {0, 3},
                                                                     {1, 2},
                                                                     {1, 3},
                                                                     {2, 0},
                                                                     {2, 1},
                                                                     {3, 0},
                                                                     {3, 1},
                                                                     {2, 2},
                                                                     {2, 3},
                                                                     {3, 2},
                                                                     {3, 3}}};
    std::vector<Rational> point;
    for (const auto& [i, j] : slots) point.push_back(T.matrix(i, j));
    for (const auto& rj : field(c, "residuals", "constraints check")) {
        const std::string text = rj.get<std::string>();
        const Rational v = eval(parse_polynomial(text, blocks), point);
        if (v != 0) out.push_back("residual " + text + " = " + to_string(v));
    }
}

void run_form_pairing(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const RationalMatrix& E = s.form(field(c, "form", "form_pairing check").get<std::string>());
    const Polynomial& W = s.named_poly(field(c, "integral", "form_pairing check").get<std::string>());
    const VectorField X = ham_vf(s.structure, s.hamiltonian);
    const KForm lhs = interior(X, KForm::constant_two_form(s.chart, E));
    const KForm rhs = d(W);
    if (lhs != rhs)
        out.push_back("contraction " + polys_to_json(lhs.components()).dump() +
                      " differs from gradient " + polys_to_json(rhs.components()).dump());
}

void run_hopf(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const Polynomial& plus = s.named_poly(field(c, "plus", "hopf check").get<std::string>());
    Polynomial acc = plus * plus;
    for (const auto& mj : field(c, "minus", "hopf check")) {
        const Polynomial& m = s.named_poly(mj.get<std::string>());
        acc -= m * m;
    }
    if (!acc.is_zero()) out.push_back("residual " + to_string(acc));
}

void run_whittaker(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    std::vector<Polynomial> comps;
    for (const auto& tj : field(c, "theta", "whittaker check"))
        comps.push_back(poly_from_json(tj, s.chart));
    const KForm theta = KForm::one_form(s.chart, std::move(comps));
    const GeneratorReport rep = generator_check(ham_vf(s.structure, s.hamiltonian), theta);
    const Json exp = blob(s, "whittaker");
    check_bool(exp, "absolute", rep.absolute, out);
    check_bool(exp, "relative", rep.relative, out);
    check_bool(exp, "certificate", rep.certificate, out);
    check_bool(exp, "identity_shift", rep.is_identity_shift, out);
    check_bool(exp, "nondegenerate", rep.nondegenerate, out);
    check_poly(exp, "K", s.chart, rep.K, out);
    check_poly(exp, "det", s.chart, rep.dtheta_det, out);
    if (exp.contains("dtheta")) {
        const KForm want = KForm::constant_two_form(s.chart, matrix_from_json(exp.at("dtheta")));
        if (want != rep.dtheta)
            out.push_back("dtheta: expected " + two_form_to_json(want).dump() + ", got " +
                          two_form_to_json(rep.dtheta).dump());
    }
}

void run_poissonoid(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const auto& T = s.transform(field(c, "transform", "poissonoid check").get<std::string>());
    const uint32_t degree = c.value("degree", default_degree());
    const PoissonoidReport rep =
        check_poissonoid_linear(s.structure, T.matrix, s.hamiltonian, degree, T.target);
    if (!rep.ham.feasible) {
        out.push_back("the pushed flow is not hamiltonizable at degree " + std::to_string(degree));
        return;
    }
    if (!rep.certificate) out.push_back("the pulled-back certificate field differs from the flow");
    const Json exp = blob(s, "poissonoid:" + T.name);
    check_bool(exp, "bihamiltonian", rep.bihamiltonian, out);
    if (exp.contains("pulled_structure")) {
        const Bivector want = bivector_from_json(exp.at("pulled_structure"), s.chart);
        if (want != rep.pulled_structure)
            out.push_back("pulled_structure: expected " + bivector_to_json(want).dump() +
                          ", got " + bivector_to_json(rep.pulled_structure).dump());
    }
    if (exp.contains("K_contains")) {
        const Polynomial want = poly_from_json(exp.at("K_contains"), T.target);
        if (!in_poly_span(want - *rep.ham.K, rep.ham.kernel))
            out.push_back("K_contains: " + to_string(want) +
                          " is outside the affine solution space");
    }
    if (exp.contains("pulled_K_contains")) {
        const Polynomial want = poly_from_json(exp.at("pulled_K_contains"), s.chart);
        std::vector<Polynomial> pulled_kernel;
        for (const auto& k : rep.ham.kernel)
            pulled_kernel.push_back(compose_linear(k, T.matrix, s.chart));
        if (!in_poly_span(want - *rep.pulled_K, pulled_kernel))
            out.push_back("pulled_K_contains: " + to_string(want) +
                          " is outside the pulled-back affine solution space");
    }
    if (exp.contains("pulled_casimirs_contain")) {
        const auto cas = casimirs(rep.pulled_structure, degree);
        for (const auto& pj : exp.at("pulled_casimirs_contain")) {
            const Polynomial want = poly_from_json(pj, s.chart);
            if (!in_poly_span(want, cas))
                out.push_back("pulled casimirs do not contain " + to_string(want));
        }
    }
}

void run_casimirs(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const std::string sel = c.value("structure", "structure");
    const uint32_t degree = c.value("degree", default_degree());
    const auto computed = casimirs(select_structure(s, sel), degree);
    const Json exp = blob(s, "casimirs:" + sel);
    if (!exp.contains("span")) {
        out.push_back("expected blob casimirs:" + sel + ".span is missing");
        return;
    }
    std::vector<Polynomial> want;
    for (const auto& pj : exp.at("span")) want.push_back(poly_from_json(pj, s.chart));
    for (const auto& w : want)
        if (!in_poly_span(w, computed))
            out.push_back(to_string(w) + " is not a casimir combination (computed dim " +
                          std::to_string(computed.size()) + ")");
    for (const auto& f : computed)
        if (!in_poly_span(f, want))
            out.push_back("computed casimir " + to_string(f) + " is outside the expected span");
}

void run_hamiltonize(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const std::string sel = c.value("structure", "structure2");
    const Bivector& pi = select_structure(s, sel);
    const uint32_t degree = c.value("degree", default_degree());
    const VectorField X = ham_vf(s.structure, s.hamiltonian);
    const HamiltonizeResult res = hamiltonize(pi, X, degree);
    if (!res.feasible) {
        out.push_back("the flow is not hamiltonizable under " + sel + " at degree " +
                      std::to_string(degree));
        return;
    }
    if (sharp(pi, d(*res.K)) != X) out.push_back("recovered K does not regenerate the flow");
    const Json exp = blob(s, "hamiltonize:" + sel);
    if (exp.contains("K_contains")) {
        const Polynomial want = poly_from_json(exp.at("K_contains"), s.chart);
        if (!in_poly_span(want - *res.K, res.kernel))
            out.push_back("K_contains: " + to_string(want) +
                          " is outside the affine solution space");
    }
}

void run_kirchhoff(const Scenario& s, const Json&, std::vector<std::string>& out) {
    const std::array<Rational, 3> omega = {s.param("omega1"), s.param("omega2"),
                                           s.param("omega3")};
    const KirchhoffReport rep = kirchhoff_certificate(omega, s.param("eps"), s.param("a"));
    if (!rep.det_matches) out.push_back("det of the embedding differs from the closed form");
    if (!rep.second_is_poisson) out.push_back("second structure fails the Jacobi identity");
    if (!rep.pair_compatible) out.push_back("the structure pair is not compatible");
    if (!rep.certificate) out.push_back("second structure does not regenerate the flow");
    if (!rep.conjugation) out.push_back("the conjugation identity fails");
    const Json exp = blob(s, "kirchhoff");
    if (exp.contains("det")) {
        const Rational want = rational_from_json(exp.at("det"));
        if (want != rep.det)
            out.push_back("det: expected " + to_string(want) + ", got " + to_string(rep.det));
    }
    check_poly(exp, "casimir_pulled", rep.aux_chart, rep.casimir_pulled, out);
    if (exp.value("second_matches_structure2", false)) {
        if (!s.structure2) {
            out.push_back("scenario has no structure2 to compare against");
        } else if (rename_bivector(*s.structure2, rep.chart) != rep.second_structure) {
            out.push_back("second structure differs from structure2");
        }
    }
}

void run_drift(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    std::vector<double> x0;
    for (const auto& xj : field(c, "x0", "drift check"))
        x0.push_back(to_double(rational_from_json(xj)));
    const double t_end = field(c, "t_end", "drift check").get<double>();
    const double step = field(c, "step", "drift check").get<double>();
    const double tol = field(c, "tolerance", "drift check").get<double>();
    const Trajectory traj = integrate(s.structure, s.hamiltonian, x0, t_end, step);
    if (traj.aborted) {
        out.push_back("trajectory left the finite range before t_end");
        return;
    }
    std::vector<std::pair<std::string, Polynomial>> invs;
    for (const auto& nj : field(c, "invariants", "drift check")) {
        const std::string n = nj.get<std::string>();
        invs.emplace_back(n, s.named_poly(n));
    }
    for (const auto& e : drift_report(invs, traj))
        if (!(e.max_drift < tol))
            out.push_back("drift(" + e.name + ") = " + fmt(e.max_drift) + " exceeds " + fmt(tol));
}

void run_noether(const Scenario& s, const Json& c, std::vector<std::string>& out) {
    const uint32_t degree = c.value("degree", default_degree());
    std::vector<const NamedPoly*> list;
    const Json& sel = field(c, "integrals", "noether check");
    if (sel.is_string() && sel.get<std::string>() == "all") {
        for (const auto& f : s.integrals) list.push_back(&f);
    } else {
        for (const auto& nj : sel) {
            const std::string n = nj.get<std::string>();
            auto it = std::find_if(s.integrals.begin(), s.integrals.end(),
                                   [&](const NamedPoly& f) { return f.name == n; });
            if (it == s.integrals.end()) fail("bad_scenario", "unknown integral \"" + n + "\"");
            list.push_back(&*it);
        }
    }
    for (const NamedPoly* f : list) {
        const VectorField X = ham_vf(s.structure, f->poly);
        const uint32_t deg = std::max<uint32_t>(degree, f->poly.total_degree());
        const HamiltonizeResult res = hamiltonize(s.structure, X, deg);
        if (!res.feasible) {
            out.push_back(f->name + ": flow of the integral is not hamiltonizable");
            continue;
        }
        if (sharp(s.structure, d(*res.K)) != X)
            out.push_back(f->name + ": recovered K does not regenerate the flow");
        if (!in_poly_span(f->poly - *res.K, res.kernel))
            out.push_back(f->name + ": integral is not K plus a casimir combination");
    }
}

std::string check_label(const Json& c) {
    const std::string type = c.value("type", "?");
    if (type == "canonoid" || type == "constraints" || type == "poissonoid")
        return type + ":" + c.value("transform", "?");
    if (type == "casimirs") return type + ":" + c.value("structure", "structure");
    if (type == "hamiltonize") return type + ":" + c.value("structure", "structure2");
    if (type == "is_poisson" && c.value("target", "structure") != "structure")
        return type + ":" + c.value("target", "structure");
    if (type == "form_pairing") return type + ":" + c.value("form", "?") + ":" +
                                        c.value("integral", "?");
    return type;
}

} // namespace

const NamedTransform& Scenario::transform(const std::string& n) const {
    for (const auto& t : transforms)
        if (t.name == n) return t;
    fail("bad_scenario", "unknown transform \"" + n + "\"");
}

const Polynomial& Scenario::integral(const std::string& n) const {
    for (const auto& f : integrals)
        if (f.name == n) return f.poly;
    fail("bad_scenario", "unknown integral \"" + n + "\"");
}

const Polynomial& Scenario::named_poly(const std::string& n) const {
    if (n == "H") return hamiltonian;
    return integral(n);
}

const RationalMatrix& Scenario::form(const std::string& n) const {
    for (const auto& f : forms)
        if (f.name == n) return f.matrix;
    fail("bad_scenario", "unknown form \"" + n + "\"");
}

Rational Scenario::param(const std::string& n) const {
    auto it = params.find(n);
    if (it == params.end()) fail("bad_scenario", "missing parameter \"" + n + "\"");
    return it->second;
}

std::string scenario_dir() {
    if (const char* e = std::getenv("PCX_SCENARIO_DIR"); e && *e) return e;
    return PCX_DATA_DIR;
}

std::vector<std::string> list_scenarios() {
    const fs::path dir = scenario_dir();
    if (!fs::is_directory(dir)) fail("io_error", "scenario directory " + dir.string() + " not found");
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

std::string find_scenario(const std::string& name_or_path) {
    if (fs::exists(name_or_path) && fs::is_regular_file(name_or_path)) return name_or_path;
    fs::path cand = fs::path(scenario_dir()) / name_or_path;
    if (!name_or_path.ends_with(".json")) cand += ".json";
    if (fs::exists(cand) && fs::is_regular_file(cand)) return cand.string();
    fail("io_error", "scenario \"" + name_or_path + "\" not found");
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("io_error", "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();

    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const Json::exception& e) {
        fail("bad_scenario", path + ": " + e.what());
    }

    try {
        if (j.value("schema", 0) != 1) fail("bad_scenario", "unsupported schema version");
        Scenario s;
        s.name = field(j, "name", "scenario").get<std::string>();
        s.chart = chart_from_json(field(j, "chart", "scenario"));
        s.structure = structure_from_json(field(j, "structure", "scenario"), s.chart, "structure");
        if (j.contains("structure2"))
            s.structure2 = structure_from_json(j.at("structure2"), s.chart, "structure2");
        s.hamiltonian = poly_from_json(field(j, "hamiltonian", "scenario"), s.chart);

        for (const auto& tj : j.value("transforms", Json::array())) {
            NamedTransform t;
            t.name = field(tj, "name", "transform").get<std::string>();
            t.matrix = matrix_from_json(field(tj, "matrix", "transform " + t.name));
            if (t.matrix.rows() != s.chart->dim() || t.matrix.cols() != s.chart->dim())
                fail("bad_scenario", "transform " + t.name + " does not match the chart");
            if (t.matrix.det() == 0)
                fail("bad_scenario", "transform " + t.name + " is singular");
            t.target = chart_from_json(field(tj, "target_chart", "transform " + t.name));
            if (t.target->dim() != s.chart->dim())
                fail("bad_scenario", "transform " + t.name + " target chart has the wrong size");
            for (const auto& prev : s.transforms)
                if (prev.name == t.name)
                    fail("bad_scenario", "duplicate transform \"" + t.name + "\"");
            s.transforms.push_back(std::move(t));
        }

        for (const auto& fj : j.value("integrals", Json::array())) {
            NamedPoly f;
            f.name = field(fj, "name", "integral").get<std::string>();
            f.poly = poly_from_json(field(fj, "poly", "integral " + f.name), s.chart);
            for (const auto& prev : s.integrals)
                if (prev.name == f.name)
                    fail("bad_scenario", "duplicate integral \"" + f.name + "\"");
            if (!constant_of_motion_check(s.structure, f.poly, s.hamiltonian))
                fail("bad_scenario", "integral " + f.name + " is not conserved by the flow");
            s.integrals.push_back(std::move(f));
        }

        for (const auto& fj : j.value("forms", Json::array())) {
            NamedForm f;
            f.name = field(fj, "name", "form").get<std::string>();
            f.matrix = matrix_from_json(field(fj, "matrix", "form " + f.name));
            if (f.matrix.rows() != s.chart->dim() || !f.matrix.is_antisymmetric())
                fail("bad_scenario", "form " + f.name + " must be an antisymmetric chart matrix");
            for (const auto& prev : s.forms)
                if (prev.name == f.name) fail("bad_scenario", "duplicate form \"" + f.name + "\"");
            s.forms.push_back(std::move(f));
        }

        const Json params = j.value("params", Json::object());
        for (const auto& [key, value] : params.items()) s.params[key] = rational_from_json(value);

        s.checks = j.value("checks", Json::array());
        for (const auto& c : s.checks) {
            if (!c.is_object() || !c.contains("type") || !c.at("type").is_string())
                fail("bad_scenario", "every check needs a string \"type\"");
            if (!check_types().count(c.at("type").get<std::string>()))
                fail("bad_scenario", "unknown check type \"" + c.at("type").get<std::string>() +
                                         "\"");
        }
        s.expected = j.value("expected", Json::object());
        return s;
    } catch (const Error& e) {
        if (e.code() == "bad_scenario" || e.code() == "io_error") throw;
        fail("bad_scenario", e.what());
    } catch (const Json::exception& e) {
        fail("bad_scenario", path + ": " + e.what());
    }
}

ScenarioReport run_scenario(const Scenario& s) {
    ScenarioReport report;
    report.scenario = s.name;
    for (const auto& c : s.checks) {
        CheckResult r;
        r.name = check_label(c);
        std::vector<std::string> problems;
        try {
            const std::string type = c.at("type").get<std::string>();
            if (type == "is_poisson") run_is_poisson(s, c, problems);
            else if (type == "compat") run_compat(s, c, problems);
            else if (type == "canonoid") run_canonoid(s, c, problems);
            else if (type == "gamma_space") run_gamma_space(s, c, problems);
            else if (type == "constraints") run_constraints(s, c, problems);
            else if (type == "form_pairing") run_form_pairing(s, c, problems);
            else if (type == "hopf") run_hopf(s, c, problems);
            else if (type == "whittaker") run_whittaker(s, c, problems);
            else if (type == "poissonoid") run_poissonoid(s, c, problems);
            else if (type == "casimirs") run_casimirs(s, c, problems);
            else if (type == "hamiltonize") run_hamiltonize(s, c, problems);
            else if (type == "kirchhoff") run_kirchhoff(s, c, problems);
            else if (type == "drift") run_drift(s, c, problems);
            else if (type == "noether") run_noether(s, c, problems);
            else problems.push_back("unknown check type");
        } catch (const Error& e) {
            problems.push_back(std::string("error[") + e.code() + "]: " + e.what());
        }
        r.passed = problems.empty();
        if (!r.passed) {
            std::string joined;
            for (const auto& p : problems) {
                if (!joined.empty()) joined += "; ";
                joined += p;
            }
            r.detail = joined;
            report.all_passed = false;
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

Json scenario_report_to_json(const ScenarioReport& r) {
    Json out;
    out["scenario"] = r.scenario;
    out["passed"] = r.all_passed;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json row;
        row["name"] = c.name;
        row["passed"] = c.passed;
        if (!c.detail.empty()) row["detail"] = c.detail;
        checks.push_back(std::move(row));
    }
    out["checks"] = std::move(checks);
    return out;
}

} // namespace pcx
