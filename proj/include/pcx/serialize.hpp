#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "pcx/canonoid.hpp"
#include "pcx/dynamics.hpp"
#include "pcx/forms.hpp"
#include "pcx/matrix.hpp"
#include "pcx/poissonoid.hpp"
#include "pcx/symmetry.hpp"
#include "pcx/whittaker.hpp"

namespace pcx {

// Insertion-ordered documents keep CLI output byte-stable.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j); // string "p/q" or integer

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json chart_to_json(const ChartPtr& c);
ChartPtr chart_from_json(const Json& j);

Polynomial poly_from_json(const Json& j, const ChartPtr& chart);
Json polys_to_json(const std::vector<Polynomial>& v);

// Bivectors travel as the full entry matrix; antisymmetry is re-validated on
// the way in.
Json bivector_to_json(const Bivector& pi);
Bivector bivector_from_json(const Json& j, const ChartPtr& chart);

Json two_form_to_json(const KForm& w); // degree 2 only
Json vector_field_to_json(const VectorField& X);

Json canonoid_to_json(const CanonoidVerdict& v);
Json hamiltonize_to_json(const HamiltonizeResult& r);
Json poissonoid_to_json(const PoissonoidReport& r);
Json kirchhoff_to_json(const KirchhoffReport& r);
Json whittaker_to_json(const GeneratorReport& r);
Json master_symmetry_to_json(const MasterSymmetryVerdict& v);
Json master_generator_to_json(const MasterGeneratorVerdict& v);
Json beta_master_to_json(const BetaMasterReport& r);
Json drift_to_json(const std::vector<DriftEntry>& entries);

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const ChartPtr& chart);

} // namespace pcx
