#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace focuskit {

enum class ManifoldKind {
    cp2,
    product_surfaces,     // M_g1 x M_g2
    surface_times_plane,  // M_g x R^2
    cotangent_surface,    // T* of a closed surface, magnetic symplectic form
    e3_orbit,             // coadjoint orbit of e(3)*, diffeomorphic to T*S^2
    so4_orbit,            // coadjoint orbit of so(4)*, diffeomorphic to S^2 x S^2
    generic,              // user-asserted topological facts
};

/// Topological facts feeding the obstruction rules. Only the fields relevant
/// to the kind are read.
struct ManifoldDescriptor {
    ManifoldKind kind = ManifoldKind::generic;

    int g1 = 0, g2 = 0;  // product_surfaces
    int g = 0;           // surface_times_plane

    bool orientable = true;       // cotangent_surface
    int genus_or_crosscaps = 0;   // genus when orientable, crosscap count otherwise
    bool magnetic_exact = false;  // the magnetic 2-form is exact

    double m = 0.0;  // e3_orbit / so4_orbit parameter (second Casimir value)

    bool compact = false;  // generic
    int dim_h2 = 0;
    bool pi2_trivial = false;

    // S^2 x S^2 refinement: symplectic areas of the factors, when known
    std::optional<std::pair<double, double>> factor_areas;

    static ManifoldDescriptor make_cp2();
    static ManifoldDescriptor make_product(int g1, int g2);
    static ManifoldDescriptor make_surface_times_plane(int g);
    static ManifoldDescriptor make_cotangent(bool orientable, int g_or_mu, bool magnetic_exact);
    static ManifoldDescriptor make_e3_orbit(double m);
    static ManifoldDescriptor make_so4_orbit(double m);
    static ManifoldDescriptor make_generic(bool compact, int dim_h2, bool pi2_trivial);
};

enum class VerdictStatus { admissible, forbidden, conditional };

std::string to_string(VerdictStatus status);

struct Verdict {
    VerdictStatus status = VerdictStatus::admissible;
    std::optional<int> max_complexity;  // nullopt means unbounded by these rules
    std::string condition;              // set when status == conditional
    std::vector<std::string> rule_trace;
};

/// Can the manifold carry a focus-focus singularity of complexity n?
/// Encodes the known topological bounds as an ordered rule table; n = 1 is always
/// admissible (the local model has no topological obstruction).
Verdict admits_complexity(const ManifoldDescriptor& desc, int n);

struct ConsistencyReport {
    int checks_run = 0;
    std::vector<std::string> contradictions;
};

/// Cross-checks the catalog rules against the generic bounds (every catalog
/// "forbidden" must be consistent with the generic rules, and known
/// equivalences must agree).
ConsistencyReport consistency_check();

}  // namespace focuskit
