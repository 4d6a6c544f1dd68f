#pragma once

#include <string>
#include <vector>

#include "focuskit/dynamics.hpp"
#include "focuskit/fiber.hpp"
#include "focuskit/obstruction.hpp"
#include "focuskit/poisson.hpp"
#include "focuskit/singularity.hpp"

namespace focuskit {

/// Parse a JSON system descriptor:
///   { "bracket": "e3"|"so4"|"lambda"|"canonical4"|"custom",
///     "lambda": real?, "dim": int?, "structure_constants": [{i,j,k,value}]?,
///     "casimir_values": [..], "hamiltonian": {terms}, "integral": {terms} }
/// Polynomial specs are { "terms": [ {"coeff": real, "exponents": [..]} ] }.
/// Throws ValidationError on schema violations.
SystemSpec parse_system_json(const std::string& text);

/// Parse a JSON manifold descriptor, e.g. {"kind":"cp2"},
/// {"kind":"product_surfaces","g1":0,"g2":0,"factor_areas":[1,1]},
/// {"kind":"cotangent_surface","orientable":true,"genus":0,"magnetic_exact":true},
/// {"kind":"e3_orbit","m":0.0}, {"kind":"generic",...}.
/// Plain builtin names ("cp2", "s2xs2", "s2xr2") are accepted too.
ManifoldDescriptor parse_manifold_json(const std::string& text);

std::string singular_points_to_json(const std::vector<SingularPoint>& points);
std::string fiber_to_json(const FiberSample& fs);
std::string verdict_to_json(const Verdict& v);
std::string drift_report_to_json(const std::vector<DriftReportRow>& rows);

std::string moment_image_to_csv(const std::vector<MomentImageCell>& cells);
std::string trajectory_to_csv(const Trajectory& traj);

}  // namespace focuskit
