#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pcx/calculus.hpp"
#include "pcx/canonoid.hpp"
#include "pcx/dynamics.hpp"
#include "pcx/errors.hpp"
#include "pcx/poissonoid.hpp"
#include "pcx/scenario.hpp"
#include "pcx/serialize.hpp"
#include "pcx/symmetry.hpp"
#include "pcx/whittaker.hpp"

namespace {

using namespace pcx;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("io_error", "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail("io_error", path + ": " + e.what());
    }
}

uint32_t env_degree() {
    if (const char* e = std::getenv("PCX_MAX_DEGREE"); e && *e) {
        char* end = nullptr;
        const long v = std::strtol(e, &end, 10);
        if (!end || *end != '\0' || v < 1 || v > 64)
            fail("bad_argument", "PCX_MAX_DEGREE must be a small positive integer");
        return static_cast<uint32_t>(v);
    }
    return default_degree();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
    if (out.empty()) fail("bad_argument", "expected a comma-separated list of rationals");
    return out;
}

ChartPtr synthetic_chart(size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    for (size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return make_chart(names);
}

std::vector<Polynomial> poly_list_from_json(const Json& j, const ChartPtr& chart) {
    if (!j.is_array()) fail("bad_argument", "expected a JSON array of polynomial strings");
    std::vector<Polynomial> out;
    for (const auto& pj : j) out.push_back(poly_from_json(pj, chart));
    return out;
}

int cmd_canonoid(const std::string& s_path, const std::string& a_path) {
    const RationalMatrix S = matrix_from_json(read_json_file(s_path));
    const RationalMatrix A = matrix_from_json(read_json_file(a_path));
    const CanonoidVerdict v = check_canonoid(A, S);
    Json out;
    out["is_canonoid"] = v.is_canonoid;
    out["is_canonical"] = v.is_canonical;
    out["gamma"] = matrix_to_json(v.gamma);
    if (v.is_canonoid) {
        const ChartPtr source = synthetic_chart(S.rows(), "x");
        const ChartPtr target = synthetic_chart(S.rows(), "y");
        const TransformedHamiltonian th = transformed_hamiltonian(A, S, source, target);
        out["C"] = matrix_to_json(th.C);
        out["K"] = to_string(th.K);
        out["H2"] = to_string(th.H2);
        out["omega2"] = two_form_to_json(omega2(A, source));
    } else {
        out["C"] = Json();
        out["K"] = Json();
        out["H2"] = Json();
        out["omega2"] = Json();
    }
    emit(out);
    return v.is_canonoid ? kPass : kCheckFailed;
}

int cmd_gamma_space(const std::string& s_path) {
    const RationalMatrix S = matrix_from_json(read_json_file(s_path));
    const auto basis = gamma_nullspace(S);
    Json out;
    out["dim"] = basis.size();
    Json arr = Json::array();
    for (const auto& G : basis) arr.push_back(matrix_to_json(G));
    out["basis"] = std::move(arr);
    emit(out);
    return kPass;
}

const Bivector& pick_structure(const Scenario& s, const std::string& sel) {
    if (sel == "structure") return s.structure;
    if (sel == "structure2") {
        if (!s.structure2) fail("bad_argument", "scenario has no structure2");
        return *s.structure2;
    }
    fail("bad_argument", "structure selector must be structure or structure2");
}

int cmd_schouten(const Scenario& s, const std::string& sel) {
    const Bivector& pi = pick_structure(s, sel);
    const Trivector bracket = schouten(pi, pi);
    Json out;
    out["target"] = sel;
    out["vanishes"] = bracket.is_zero();
    Json entries = Json::array();
    for (const auto& [idx, p] : bracket.entries()) {
        Json row;
        row["indices"] = idx;
        row["value"] = to_string(p);
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    emit(out);
    return bracket.is_zero() ? kPass : kCheckFailed;
}

int cmd_compat(const Scenario& s, const std::string& other_path) {
    Bivector other(nullptr);
    std::string other_name;
    if (!other_path.empty()) {
        other = bivector_from_json(read_json_file(other_path), s.chart);
        other_name = other_path;
    } else if (s.structure2) {
        other = *s.structure2;
        other_name = "structure2";
    } else {
        fail("bad_argument", "pass --other or use a scenario with structure2");
    }
    const bool ok = compatible(s.structure, other);
    Json out;
    out["other"] = other_name;
    out["compatible"] = ok;
    emit(out);
    return ok ? kPass : kCheckFailed;
}

int cmd_casimir(const Scenario& s, const std::string& sel, uint32_t degree) {
    const auto basis = casimirs(pick_structure(s, sel), degree);
    Json out;
    out["structure"] = sel;
    out["degree"] = degree;
    out["dim"] = basis.size();
    out["basis"] = polys_to_json(basis);
    emit(out);
    return kPass;
}

int cmd_hamiltonize(const Scenario& s, const std::string& sel, uint32_t degree) {
    const VectorField X = ham_vf(s.structure, s.hamiltonian);
    const HamiltonizeResult res = hamiltonize(pick_structure(s, sel), X, degree);
    emit(hamiltonize_to_json(res));
    return res.feasible ? kPass : kCheckFailed;
}

int cmd_poissonoid(const Scenario& s, const std::string& transform, uint32_t degree) {
    const NamedTransform& T = s.transform(transform);
    const PoissonoidReport rep =
        check_poissonoid_linear(s.structure, T.matrix, s.hamiltonian, degree, T.target);
    emit(poissonoid_to_json(rep));
    return rep.ham.feasible && rep.certificate ? kPass : kCheckFailed;
}

int cmd_kirchhoff(const std::string& omega_text, const std::string& eps_text,
                  const std::string& a_text) {
    const auto omega = parse_rational_list(omega_text);
    if (omega.size() != 3) fail("bad_argument", "--omega needs three comma-separated values");
    const KirchhoffReport rep = kirchhoff_certificate({omega[0], omega[1], omega[2]},
                                                      rational_from_string(eps_text),
                                                      rational_from_string(a_text));
    emit(kirchhoff_to_json(rep));
    const bool ok = rep.det_matches && rep.second_is_poisson && rep.pair_compatible &&
                    rep.certificate && rep.conjugation;
    return ok ? kPass : kCheckFailed;
}

int cmd_whittaker(const Scenario& s, const std::string& theta_path) {
    const KForm theta =
        KForm::one_form(s.chart, poly_list_from_json(read_json_file(theta_path), s.chart));
    const GeneratorReport rep = generator_check(ham_vf(s.structure, s.hamiltonian), theta);
    emit(whittaker_to_json(rep));
    return rep.certificate ? kPass : kCheckFailed;
}

int cmd_symmetry(const Scenario& s, const std::string& xi_path, uint32_t max_m) {
    const VectorField xi =
        VectorField::make(s.chart, poly_list_from_json(read_json_file(xi_path), s.chart));
    const VectorField X = ham_vf(s.structure, s.hamiltonian);
    const MasterSymmetryVerdict v = master_symmetry_degree(xi, X, max_m);
    emit(master_symmetry_to_json(v));
    return v.degree ? kPass : kCheckFailed;
}

int cmd_master_gen(const Scenario& s, const std::string& t_text, uint32_t max_m) {
    const Polynomial T = parse_polynomial(t_text, s.chart);
    const MasterGeneratorVerdict v =
        master_generator_check(s.structure, ham_vf(s.structure, s.hamiltonian), T, max_m);
    emit(master_generator_to_json(v));
    return v.constants_degree || v.hamiltonian_degree ? kPass : kCheckFailed;
}

int cmd_integrate(const Scenario& s, const std::string& x0_text, double t_end, double step,
                  const std::string& invariants, const std::string& csv_path) {
    std::vector<double> x0;
    for (const auto& r : parse_rational_list(x0_text)) x0.push_back(to_double(r));
    const Trajectory traj = integrate(s.structure, s.hamiltonian, x0, t_end, step);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) fail("io_error", "cannot write " + csv_path);
        write_trajectory_csv(csv, traj, s.chart);
    }
    std::vector<std::pair<std::string, Polynomial>> invs;
    invs.emplace_back("H", s.hamiltonian);
    if (invariants == "all") {
        for (const auto& f : s.integrals) invs.emplace_back(f.name, f.poly);
    } else if (!invariants.empty()) {
        std::stringstream ss(invariants);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "H") continue;
            invs.emplace_back(item, s.integral(item));
        }
    }
    Json out;
    out["aborted"] = traj.aborted;
    out["samples"] = traj.states.size();
    out["t_final"] = traj.times.empty() ? 0.0 : traj.times.back();
    out["drift"] = drift_to_json(drift_report(invs, traj));
    emit(out);
    return traj.aborted ? kCheckFailed : kPass;
}

int cmd_scenario_run(const std::string& name, bool all) {
    if (all == !name.empty())
        fail("bad_argument", "pass exactly one of a scenario name or --all");
    std::vector<std::string> names;
    if (all)
        names = list_scenarios();
    else
        names.push_back(name);
    Json reports = Json::array();
    bool ok = true;
    for (const auto& n : names) {
        const Scenario s = load_scenario(find_scenario(n));
        const ScenarioReport rep = run_scenario(s);
        ok = ok && rep.all_passed;
        reports.push_back(scenario_report_to_json(rep));
    }
    emit(all ? reports : reports.front());
    return ok ? kPass : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for canonoid and Poissonoid transformations"};
    app.require_subcommand(1);

    std::string s_path, a_path, scenario_name, transform, other_path, theta_path, xi_path;
    std::string sel = "structure";
    std::string ham_sel = "structure2";
    std::string omega_text, eps_text = "1", a_text = "1";
    std::string t_text, x0_text, invariants = "all", csv_path;
    uint32_t degree = 0, max_m = 6;
    double t_end = 1.0, step = 0.001;
    bool run_all = false;

    auto* canonoid = app.add_subcommand("canonoid", "canonoid test for a linear transformation");
    canonoid->add_option("--S", s_path, "Hamiltonian matrix file")->required();
    canonoid->add_option("--A", a_path, "transformation matrix file")->required();

    auto* gamma = app.add_subcommand("gamma-space", "structure-matrix solution space");
    gamma->add_option("--S", s_path, "Hamiltonian matrix file")->required();

    auto* schouten_cmd = app.add_subcommand("schouten", "self-bracket of a structure");
    schouten_cmd->add_option("--scenario", scenario_name, "scenario name or file")->required();
    schouten_cmd->add_option("--target", sel, "structure or structure2");

    auto* compat = app.add_subcommand("compat", "compatibility of a structure pair");
    compat->add_option("--scenario", scenario_name, "scenario name or file")->required();
    compat->add_option("--other", other_path, "bivector entry-matrix file");

    auto* casimir = app.add_subcommand("casimir", "polynomial casimir basis");
    casimir->add_option("--scenario", scenario_name, "scenario name or file")->required();
    casimir->add_option("--structure", sel, "structure or structure2");
    casimir->add_option("--degree", degree, "ansatz total degree");

    auto* hamz = app.add_subcommand("hamiltonize", "recover a Hamiltonian for the flow");
    hamz->add_option("--scenario", scenario_name, "scenario name or file")->required();
    hamz->add_option("--structure", ham_sel, "structure carrying the flow");
    hamz->add_option("--degree", degree, "ansatz total degree");

    auto* poissonoid = app.add_subcommand("poissonoid", "Poissonoid transformation tools");
    poissonoid->require_subcommand(1);
    auto* pcheck = poissonoid->add_subcommand("check", "transport a flow and certify it");
    pcheck->add_option("--scenario", scenario_name, "scenario name or file")->required();
    pcheck->add_option("--transform", transform, "named transformation")->required();
    pcheck->add_option("--degree", degree, "ansatz total degree");

    auto* kirchhoff = app.add_subcommand("kirchhoff", "second structure for the fluid rigid body");
    kirchhoff->add_option("--omega", omega_text, "three frequencies, comma-separated")->required();
    kirchhoff->add_option("--eps", eps_text, "signature scale");
    kirchhoff->add_option("--a", a_text, "embedding scale");

    auto* whittaker = app.add_subcommand("whittaker", "generator test for a one-form");
    whittaker->add_option("--scenario", scenario_name, "scenario name or file")->required();
    whittaker->add_option("--theta", theta_path, "one-form component file")->required();

    auto* symmetry = app.add_subcommand("symmetry", "master symmetry degree of a seed field");
    symmetry->add_option("--scenario", scenario_name, "scenario name or file")->required();
    symmetry->add_option("--xi", xi_path, "vector field component file")->required();
    symmetry->add_option("--max-degree", max_m, "iteration cap");

    auto* master_gen = app.add_subcommand("master-gen", "master generator chain of a function");
    master_gen->add_option("--scenario", scenario_name, "scenario name or file")->required();
    master_gen->add_option("--T", t_text, "seed polynomial")->required();
    master_gen->add_option("--m", max_m, "iteration cap");

    auto* integrate_cmd = app.add_subcommand("integrate", "numeric flow with drift report");
    integrate_cmd->add_option("--scenario", scenario_name, "scenario name or file")->required();
    integrate_cmd->add_option("--x0", x0_text, "initial state, comma-separated rationals")
        ->required();
    integrate_cmd->add_option("--t-end", t_end, "integration horizon")->required();
    integrate_cmd->add_option("--step", step, "step size")->required();
    integrate_cmd->add_option("--invariants", invariants, "all, or comma-separated names");
    integrate_cmd->add_option("--csv", csv_path, "trajectory output file");

    auto* scenario_cmd = app.add_subcommand("scenario", "builtin scenario suite");
    scenario_cmd->require_subcommand(1);
    auto* slist = scenario_cmd->add_subcommand("list", "names of available scenarios");
    auto* srun = scenario_cmd->add_subcommand("run", "execute a scenario's check list");
    srun->add_option("name", scenario_name, "scenario name or file");
    srun->add_flag("--all", run_all, "run every available scenario");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, std::cerr, std::cerr);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (degree == 0) degree = env_degree();

        if (app.got_subcommand(canonoid)) return cmd_canonoid(s_path, a_path);
        if (app.got_subcommand(gamma)) return cmd_gamma_space(s_path);
        if (app.got_subcommand(kirchhoff)) return cmd_kirchhoff(omega_text, eps_text, a_text);
        if (app.got_subcommand(scenario_cmd)) {
            if (scenario_cmd->got_subcommand(slist)) {
                emit(Json(list_scenarios()));
                return kPass;
            }
            return cmd_scenario_run(scenario_name, run_all);
        }

        const Scenario s = load_scenario(find_scenario(scenario_name));
        if (app.got_subcommand(schouten_cmd)) return cmd_schouten(s, sel);
        if (app.got_subcommand(compat)) return cmd_compat(s, other_path);
        if (app.got_subcommand(casimir)) return cmd_casimir(s, sel, degree);
        if (app.got_subcommand(hamz)) return cmd_hamiltonize(s, ham_sel, degree);
        if (app.got_subcommand(poissonoid)) return cmd_poissonoid(s, transform, degree);
        if (app.got_subcommand(whittaker)) return cmd_whittaker(s, theta_path);
        if (app.got_subcommand(symmetry)) return cmd_symmetry(s, xi_path, max_m);
        if (app.got_subcommand(master_gen)) return cmd_master_gen(s, t_text, max_m);
        if (app.got_subcommand(integrate_cmd))
            return cmd_integrate(s, x0_text, t_end, step, invariants, csv_path);
        fail("internal_error", "unhandled subcommand");
    } catch (const Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error[internal_error]: " << e.what() << "\n";
        return kUsage;
    }
}
