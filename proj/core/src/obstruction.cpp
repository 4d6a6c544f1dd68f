#include "focuskit/obstruction.hpp"

#include <algorithm>
#include <cmath>

#include "focuskit/common.hpp"

namespace focuskit {

namespace {

bool areas_equal(const std::pair<double, double>& areas) {
    return std::abs(areas.first - areas.second) <=
           1e-12 * (1.0 + std::max(std::abs(areas.first), std::abs(areas.second)));
}

// Conclusion of the sphere-base cotangent case: complexity <= 2, and
// complexity 2 requires an exact magnetic form. Self-intersection of the
// Lagrangian sphere equals its Euler characteristic (+-2 by orientation
// convention), which is what kills the inexact case.
Verdict sphere_base_verdict(int n, bool condition_holds,
                            const std::string& condition_code,
                            const std::string& catalog_rule,
                            const std::string& realization_note) {
    Verdict v;
    v.max_complexity = 2;
    if (n == 2) {
        v.rule_trace.push_back(catalog_rule);
        if (condition_holds) {
            v.status = VerdictStatus::conditional;
            v.condition = condition_code;
            if (!realization_note.empty()) v.rule_trace.push_back(realization_note);
        } else {
            v.status = VerdictStatus::forbidden;
            v.max_complexity = 1;
        }
    } else {  // n >= 3
        v.status = VerdictStatus::forbidden;
        v.rule_trace.push_back(catalog_rule);
        v.rule_trace.push_back("R4:noncompact_h2_bound");
    }
    return v;
}

Verdict complex_case_verdict(const ManifoldDescriptor& d, int n) {
    Verdict v;
    switch (d.kind) {
        case ManifoldKind::cp2:
            // dim H^2(CP^2) = 1, compact: only simple singularities
            v.status = VerdictStatus::forbidden;
            v.max_complexity = 1;
            v.rule_trace = {"catalog:cp2", "R3:compact_h2_bound"};
            return v;

        case ManifoldKind::product_surfaces:
            if (d.g1 > 0 && d.g2 > 0) {
                v.status = VerdictStatus::forbidden;
                v.max_complexity = 1;
                v.rule_trace = {"catalog:product_higher_genus", "R2:pi2_trivial"};
                return v;
            }
            if (d.g1 > 0 || d.g2 > 0) {
                // M_g x S^2, g > 0: the generator of pi_2 has zero
                // self-intersection, so no Lagrangian sphere class exists
                v.status = VerdictStatus::forbidden;
                v.max_complexity = 1;
                v.rule_trace = {"catalog:surface_times_sphere_zero_self_intersection"};
                return v;
            }
            // S^2 x S^2: the Lagrangian sphere class is a - b, so the two
            // factor areas must coincide for complexity 2
            if (n >= 3) {
                v.status = VerdictStatus::forbidden;
                v.max_complexity = 2;
                v.rule_trace = {"catalog:s2_x_s2", "R3:compact_h2_bound"};
                return v;
            }
            return sphere_base_verdict(
                n, !d.factor_areas || areas_equal(*d.factor_areas),
                "equal_factor_areas", "catalog:s2_x_s2",
                "realization:so4_model_system");

        case ManifoldKind::surface_times_plane:
            v.status = VerdictStatus::forbidden;
            v.max_complexity = 1;
            if (d.g > 0)
                v.rule_trace = {"catalog:surface_times_plane", "R2:pi2_trivial"};
            else
                v.rule_trace = {"catalog:s2_x_r2_zero_self_intersection"};
            return v;

        case ManifoldKind::cotangent_surface:
            if (d.orientable && d.genus_or_crosscaps == 0)
                return sphere_base_verdict(n, d.magnetic_exact,
                                           "magnetic_form_exact",
                                           "catalog:cotangent_sphere",
                                           "");
            v.status = VerdictStatus::forbidden;
            v.max_complexity = 1;
            if (!d.orientable && d.genus_or_crosscaps == 1)
                v.rule_trace = {"catalog:cotangent_rp2", "R4:noncompact_h2_bound"};
            else
                v.rule_trace = {"catalog:cotangent_higher_genus", "R2:pi2_trivial"};
            return v;

        case ManifoldKind::e3_orbit:
            // regular e(3)* orbits are T*S^2 with magnetic class 4*pi*m;
            // the form is exact exactly on the m = 0 orbits
            return sphere_base_verdict(n, d.m == 0.0, "m_equals_zero",
                                       "catalog:e3_orbit",
                                       "realization:e3_model_system");

        case ManifoldKind::so4_orbit:
            // generic so(4)* orbits are S^2 x S^2; factor areas coincide
            // exactly on the m = 0 orbits
            return sphere_base_verdict(n, d.m == 0.0, "m_equals_zero",
                                       "catalog:so4_orbit",
                                       "realization:so4_model_system");

        case ManifoldKind::generic: {
            if (d.pi2_trivial) {
                v.status = VerdictStatus::forbidden;
                v.max_complexity = 1;
                v.rule_trace = {"R2:pi2_trivial"};
                return v;
            }
            const int bound = d.compact ? std::max(d.dim_h2, 1) : d.dim_h2 + 1;
            v.max_complexity = bound;
            if (n > bound) {
                v.status = VerdictStatus::forbidden;
                v.rule_trace = {d.compact ? "R3:compact_h2_bound"
                                          : "R4:noncompact_h2_bound"};
            } else {
                v.status = VerdictStatus::admissible;
                v.rule_trace = {"generic:within_h2_bound"};
            }
            return v;
        }
    }
    throw ValidationError("admits_complexity: unknown manifold kind");
}

}  // namespace

std::string to_string(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::admissible: return "admissible";
        case VerdictStatus::forbidden: return "forbidden";
        case VerdictStatus::conditional: return "conditional";
    }
    return "admissible";
}

ManifoldDescriptor ManifoldDescriptor::make_cp2() {
    ManifoldDescriptor d;
    d.kind = ManifoldKind::cp2;
    return d;
}
ManifoldDescriptor ManifoldDescriptor::make_product(int g1, int g2) {
    ManifoldDescriptor d;
    d.kind = ManifoldKind::product_surfaces;
    d.g1 = g1;
    d.g2 = g2;
    return d;
}
ManifoldDescriptor ManifoldDescriptor::make_surface_times_plane(int g) {
    ManifoldDescriptor d;
    d.kind = ManifoldKind::surface_times_plane;
    d.g = g;
    return d;
}
ManifoldDescriptor ManifoldDescriptor::make_cotangent(bool orientable, int g_or_mu,
                                                      bool magnetic_exact) {
    if (!orientable && g_or_mu < 1)
        throw ValidationError("ManifoldDescriptor: nonorientable surface needs mu >= 1");
    if (g_or_mu < 0)
        throw ValidationError("ManifoldDescriptor: genus must be nonnegative");
    ManifoldDescriptor d;
    d.kind = ManifoldKind::cotangent_surface;
    d.orientable = orientable;
    d.genus_or_crosscaps = g_or_mu;
    d.magnetic_exact = magnetic_exact;
    return d;
}
ManifoldDescriptor ManifoldDescriptor::make_e3_orbit(double m) {
    ManifoldDescriptor d;
    d.kind = ManifoldKind::e3_orbit;
    d.m = m;
    return d;
}
ManifoldDescriptor ManifoldDescriptor::make_so4_orbit(double m) {
    ManifoldDescriptor d;
    d.kind = ManifoldKind::so4_orbit;
    d.m = m;
    return d;
}
ManifoldDescriptor ManifoldDescriptor::make_generic(bool compact, int dim_h2,
                                                    bool pi2_trivial) {
    if (dim_h2 < 0) throw ValidationError("ManifoldDescriptor: dim_h2 must be >= 0");
    ManifoldDescriptor d;
    d.kind = ManifoldKind::generic;
    d.compact = compact;
    d.dim_h2 = dim_h2;
    d.pi2_trivial = pi2_trivial;
    return d;
}

Verdict admits_complexity(const ManifoldDescriptor& desc, int n) {
    if (n < 1) throw ValidationError("admits_complexity: n must be >= 1");
    if (n == 1) {
        // the local model realizes a simple focus-focus singularity on any
        // symplectic 4-manifold
        Verdict v;
        v.status = VerdictStatus::admissible;
        v.rule_trace = {"R1:simple_always_admissible"};
        Verdict probe = complex_case_verdict(desc, 2);
        v.max_complexity = probe.max_complexity;
        return v;
    }
    return complex_case_verdict(desc, n);
}

namespace {

// generic-topology facts for each catalog descriptor; dim H^2 by Kunneth
// where a product is involved
ManifoldDescriptor generic_equivalent(const ManifoldDescriptor& d) {
    switch (d.kind) {
        case ManifoldKind::cp2:
            return ManifoldDescriptor::make_generic(true, 1, false);
        case ManifoldKind::product_surfaces:
            return ManifoldDescriptor::make_generic(true, 2 + 4 * d.g1 * d.g2,
                                                    d.g1 > 0 && d.g2 > 0);
        case ManifoldKind::surface_times_plane:
            // H^2 of a closed orientable surface is one-dimensional
            return ManifoldDescriptor::make_generic(false, 1, d.g > 0);
        case ManifoldKind::cotangent_surface:
            if (d.orientable)
                return ManifoldDescriptor::make_generic(false, 1,
                                                        d.genus_or_crosscaps > 0);
            return ManifoldDescriptor::make_generic(false, 0, d.genus_or_crosscaps > 1);
        case ManifoldKind::e3_orbit:
            return ManifoldDescriptor::make_generic(false, 1, false);
        case ManifoldKind::so4_orbit:
            return ManifoldDescriptor::make_generic(true, 2, false);
        default:
            return d;
    }
}

}  // namespace

ConsistencyReport consistency_check() {
    ConsistencyReport report;

    std::vector<ManifoldDescriptor> entries = {
        ManifoldDescriptor::make_cp2(),
        ManifoldDescriptor::make_product(1, 1),
        ManifoldDescriptor::make_product(2, 1),
        ManifoldDescriptor::make_product(1, 0),
        ManifoldDescriptor::make_product(0, 0),
        ManifoldDescriptor::make_surface_times_plane(0),
        ManifoldDescriptor::make_surface_times_plane(1),
        ManifoldDescriptor::make_cotangent(true, 0, true),
        ManifoldDescriptor::make_cotangent(true, 0, false),
        ManifoldDescriptor::make_cotangent(true, 2, false),
        ManifoldDescriptor::make_cotangent(false, 1, false),
        ManifoldDescriptor::make_cotangent(false, 2, false),
        ManifoldDescriptor::make_e3_orbit(0.0),
        ManifoldDescriptor::make_e3_orbit(0.5),
        ManifoldDescriptor::make_so4_orbit(0.0),
        ManifoldDescriptor::make_so4_orbit(0.5),
    };

    // a catalog rule may only tighten the generic bounds, never loosen them
    for (const auto& entry : entries) {
        const auto generic = generic_equivalent(entry);
        for (int n = 1; n <= 5; ++n) {
            ++report.checks_run;
            const Verdict cat = admits_complexity(entry, n);
            const Verdict gen = admits_complexity(generic, n);
            if (gen.status == VerdictStatus::forbidden &&
                cat.status != VerdictStatus::forbidden)
                report.contradictions.push_back(
                    "catalog admits n=" + std::to_string(n) +
                    " where generic rules forbid it");
        }
    }

    // CP^2 carries no extra refinement: catalog and generic must coincide
    for (int n = 1; n <= 5; ++n) {
        ++report.checks_run;
        const Verdict cat = admits_complexity(ManifoldDescriptor::make_cp2(), n);
        const Verdict gen = admits_complexity(
            ManifoldDescriptor::make_generic(true, 1, false), n);
        if (cat.status != gen.status)
            report.contradictions.push_back("cp2 verdict differs from its generic facts at n=" +
                                            std::to_string(n));
    }

    // so(4)* orbit with m = 0 is S^2 x S^2 with equal factor areas
    auto s2s2 = ManifoldDescriptor::make_product(0, 0);
    s2s2.factor_areas = {1.0, 1.0};
    for (int n = 1; n <= 5; ++n) {
        ++report.checks_run;
        const Verdict a = admits_complexity(ManifoldDescriptor::make_so4_orbit(0.0), n);
        const Verdict b = admits_complexity(s2s2, n);
        if (a.status != b.status || a.max_complexity != b.max_complexity)
            report.contradictions.push_back(
                "so4 m=0 orbit disagrees with equal-area S2xS2 at n=" + std::to_string(n));
    }

    // the e(3)* orbit rule is the magnetic cotangent-sphere rule in disguise
    for (double m : {0.0, 0.7}) {
        for (int n = 1; n <= 5; ++n) {
            ++report.checks_run;
            const Verdict a = admits_complexity(ManifoldDescriptor::make_e3_orbit(m), n);
            const Verdict b = admits_complexity(
                ManifoldDescriptor::make_cotangent(true, 0, m == 0.0), n);
            if (a.status != b.status || a.max_complexity != b.max_complexity)
                report.contradictions.push_back(
                    "e3 orbit disagrees with magnetic cotangent sphere at n=" +
                    std::to_string(n));
        }
    }

    return report;
}

}  // namespace focuskit
