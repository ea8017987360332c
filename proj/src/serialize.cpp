#include "pcx/serialize.hpp"

#include <cstdio>
#include <ostream>

#include "pcx/errors.hpp"

namespace pcx {

Json rational_to_json(const Rational& r) {
    return to_string(r);
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    fail("bad_argument", "expected a rational as \"p/q\" string or integer, got " + j.dump());
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) fail("bad_argument", "matrix must be a nonempty array of rows");
    const size_t rows = j.size();
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) fail("bad_argument", "matrix rows must be nonempty arrays");
    RationalMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            fail("bad_argument", "matrix rows must all have " + std::to_string(cols) + " entries");
        for (size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
    }
    return m;
}

Json chart_to_json(const ChartPtr& c) {
    Json names = Json::array();
    for (const auto& n : c->names()) names.push_back(n);
    return names;
}

ChartPtr chart_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) fail("bad_argument", "chart must be a nonempty name array");
    std::vector<std::string> names;
    for (const auto& n : j) {
        if (!n.is_string()) fail("bad_argument", "chart names must be strings");
        names.push_back(n.get<std::string>());
    }
    return make_chart(std::move(names));
}

Polynomial poly_from_json(const Json& j, const ChartPtr& chart) {
    if (!j.is_string()) fail("bad_argument", "expected a polynomial string, got " + j.dump());
    return parse_polynomial(j.get<std::string>(), chart);
}

Json polys_to_json(const std::vector<Polynomial>& v) {
    Json out = Json::array();
    for (const auto& p : v) out.push_back(to_string(p));
    return out;
}

Json bivector_to_json(const Bivector& pi) {
    const size_t n = pi.dim();
    Json rows = Json::array();
    for (size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < n; ++j) row.push_back(to_string(pi.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Bivector bivector_from_json(const Json& j, const ChartPtr& chart) {
    const size_t n = chart->dim();
    if (!j.is_array() || j.size() != n)
        fail("bad_argument", "bivector entries must be a " + std::to_string(n) + "x" +
                                 std::to_string(n) + " matrix");
    std::vector<std::vector<Polynomial>> m;
    for (size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            fail("bad_argument", "bivector row " + std::to_string(i) + " must have " +
                                     std::to_string(n) + " entries");
        std::vector<Polynomial> row;
        for (size_t k = 0; k < n; ++k) row.push_back(poly_from_json(j[i][k], chart));
        m.push_back(std::move(row));
    }
    return Bivector::from_matrix(chart, m);
}

Json two_form_to_json(const KForm& w) {
    if (w.degree() != 2) fail("degree_mismatch", "two_form_to_json needs a 2-form");
    const size_t n = w.chart()->dim();
    Json rows = Json::array();
    for (size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < n; ++j) row.push_back(to_string(w.entry({i, j})));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_field_to_json(const VectorField& X) {
    Json out = Json::array();
    for (const auto& c : X.comps) out.push_back(to_string(c));
    return out;
}

Json canonoid_to_json(const CanonoidVerdict& v) {
    Json out;
    out["canonoid"] = v.is_canonoid;
    out["canonical"] = v.is_canonical;
    out["gamma"] = matrix_to_json(v.gamma);
    out["C"] = v.C ? matrix_to_json(*v.C) : Json();
    out["scale"] = v.scale_a ? Json(to_string(*v.scale_a)) : Json();
    return out;
}

Json hamiltonize_to_json(const HamiltonizeResult& r) {
    Json out;
    out["feasible"] = r.feasible;
    out["degree"] = r.degree;
    out["K"] = r.K ? Json(to_string(*r.K)) : Json();
    out["kernel"] = polys_to_json(r.kernel);
    return out;
}

Json poissonoid_to_json(const PoissonoidReport& r) {
    Json out;
    out["feasible"] = r.ham.feasible;
    out["certificate"] = r.certificate;
    out["bihamiltonian"] = r.bihamiltonian;
    out["degree"] = r.ham.degree;
    out["pushed_field"] = vector_field_to_json(r.pushed);
    out["K"] = r.ham.K ? Json(to_string(*r.ham.K)) : Json();
    out["kernel"] = polys_to_json(r.ham.kernel);
    out["pulled_structure"] = bivector_to_json(r.pulled_structure);
    out["pulled_K"] = r.pulled_K ? Json(to_string(*r.pulled_K)) : Json();
    return out;
}

Json kirchhoff_to_json(const KirchhoffReport& r) {
    Json out;
    out["chart"] = chart_to_json(r.chart);
    out["aux_chart"] = chart_to_json(r.aux_chart);
    out["root_a"] = to_string(r.root_a);
    out["root_b"] = to_string(r.root_b);
    out["spread"] = to_string(r.spread);
    out["phi"] = matrix_to_json(r.phi);
    out["det"] = to_string(r.det);
    out["det_matches"] = r.det_matches;
    out["field"] = vector_field_to_json(r.field);
    out["second_structure"] = bivector_to_json(r.second_structure);
    out["second_is_poisson"] = r.second_is_poisson;
    out["pair_compatible"] = r.pair_compatible;
    out["certificate"] = r.certificate;
    out["conjugation"] = r.conjugation;
    out["casimir_pulled"] = to_string(r.casimir_pulled);
    return out;
}

Json whittaker_to_json(const GeneratorReport& r) {
    Json out;
    out["absolute"] = r.absolute;
    out["relative"] = r.relative;
    out["K"] = to_string(r.K);
    out["dtheta"] = two_form_to_json(r.dtheta);
    out["det"] = to_string(r.dtheta_det);
    out["nondegenerate"] = r.nondegenerate;
    out["identity_shift"] = r.is_identity_shift;
    out["certificate"] = r.certificate;
    return out;
}

Json master_symmetry_to_json(const MasterSymmetryVerdict& v) {
    Json out;
    out["degree"] = v.degree ? Json(*v.degree) : Json();
    Json its = Json::array();
    for (const auto& it : v.iterates) its.push_back(vector_field_to_json(it));
    out["iterates"] = std::move(its);
    return out;
}

Json master_generator_to_json(const MasterGeneratorVerdict& v) {
    Json out;
    out["constants_degree"] = v.constants_degree ? Json(*v.constants_degree) : Json();
    out["hamiltonian_degree"] = v.hamiltonian_degree ? Json(*v.hamiltonian_degree) : Json();
    out["iterates"] = polys_to_json(v.iterates);
    return out;
}

Json beta_master_to_json(const BetaMasterReport& r) {
    Json out;
    out["contraction"] = to_string(r.contraction);
    out["sharp_field"] = vector_field_to_json(r.sharp_field);
    out["sharp"] = master_symmetry_to_json(r.sharp_verdict);
    out["generator"] = master_generator_to_json(r.generator_verdict);
    out["consistent"] = r.consistent;
    return out;
}

Json drift_to_json(const std::vector<DriftEntry>& entries) {
    Json out = Json::array();
    for (const auto& e : entries) {
        Json row;
        row["name"] = e.name;
        row["initial"] = e.initial;
        row["max_drift"] = e.max_drift;
        out.push_back(std::move(row));
    }
    return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const ChartPtr& chart) {
    os << "t";
    for (const auto& n : chart->names()) os << "," << n;
    os << "\n";
    char buf[40];
    for (size_t r = 0; r < traj.states.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.17g", traj.times[r]);
        os << buf;
        for (double v : traj.states[r]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            os << "," << buf;
        }
        os << "\n";
    }
}

} // namespace pcx
