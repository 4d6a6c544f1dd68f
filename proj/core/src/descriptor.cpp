#include "focuskit/descriptor.hpp"

#include <cstdio>

#include <json.hpp>

namespace focuskit {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ValidationError("invalid JSON");
    return j;
}

std::vector<Monomial> parse_terms(const json& spec) {
    if (!spec.is_object() || !spec.contains("terms") || !spec["terms"].is_array())
        throw ValidationError("polynomial spec: expected {\"terms\": [...]}");
    std::vector<Monomial> terms;
    for (const auto& t : spec["terms"]) {
        if (!t.contains("coeff") || !t.contains("exponents"))
            throw ValidationError("polynomial term: need coeff and exponents");
        Monomial m;
        m.coeff = t["coeff"].get<double>();
        m.exponents = t["exponents"].get<std::vector<int>>();
        terms.push_back(std::move(m));
    }
    return terms;
}

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

SystemSpec parse_system_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("bracket"))
        throw ValidationError("system descriptor: missing \"bracket\"");
    const std::string bracket = j["bracket"].get<std::string>();

    PoissonStructure ps = [&]() -> PoissonStructure {
        if (bracket == "e3") return e3_structure();
        if (bracket == "so4") return so4_structure();
        if (bracket == "lambda") {
            if (!j.contains("lambda"))
                throw ValidationError("system descriptor: lambda bracket needs \"lambda\"");
            return lambda_structure(j["lambda"].get<double>());
        }
        if (bracket == "canonical4") return canonical_r4();
        if (bracket == "custom") {
            if (!j.contains("dim") || !j.contains("structure_constants"))
                throw ValidationError(
                    "system descriptor: custom bracket needs dim and structure_constants");
            std::vector<StructureConstant> table;
            for (const auto& sc : j["structure_constants"]) {
                table.push_back({sc.at("i").get<int>(), sc.at("j").get<int>(),
                                 sc.at("k").get<int>(), sc.at("value").get<double>()});
            }
            return lie_poisson(j["dim"].get<int>(), table);
        }
        throw ValidationError("system descriptor: unknown bracket '" + bracket + "'");
    }();

    Vec cv(0);
    if (j.contains("casimir_values")) {
        const auto vals = j["casimir_values"].get<std::vector<double>>();
        cv = Eigen::Map<const Vec>(vals.data(), static_cast<int>(vals.size()));
    }
    if (static_cast<std::size_t>(cv.size()) != ps.casimirs().size())
        throw ValidationError("system descriptor: casimir_values length mismatch");

    if (!j.contains("hamiltonian") || !j.contains("integral"))
        throw ValidationError("system descriptor: need hamiltonian and integral");
    ScalarField h = make_polynomial_field(ps.dim(), parse_terms(j["hamiltonian"]));
    ScalarField f = make_polynomial_field(ps.dim(), parse_terms(j["integral"]));

    std::string name = j.value("name", "custom-" + bracket);
    return SystemSpec{std::move(name), OrbitSpec{std::move(ps), std::move(cv)},
                      std::move(h), std::move(f)};
}

ManifoldDescriptor parse_manifold_json(const std::string& text) {
    // builtin shorthand names first
    if (text == "cp2") return ManifoldDescriptor::make_cp2();
    if (text == "s2xs2") return ManifoldDescriptor::make_product(0, 0);
    if (text == "s2xr2") return ManifoldDescriptor::make_surface_times_plane(0);

    const json j = parse(text);
    if (!j.contains("kind"))
        throw ValidationError("manifold descriptor: missing \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "cp2") return ManifoldDescriptor::make_cp2();
    if (kind == "product_surfaces") {
        auto d = ManifoldDescriptor::make_product(j.value("g1", 0), j.value("g2", 0));
        if (j.contains("factor_areas")) {
            const auto a = j["factor_areas"].get<std::vector<double>>();
            if (a.size() != 2)
                throw ValidationError("manifold descriptor: factor_areas needs 2 entries");
            d.factor_areas = {a[0], a[1]};
        }
        return d;
    }
    if (kind == "surface_times_plane")
        return ManifoldDescriptor::make_surface_times_plane(j.value("g", 0));
    if (kind == "cotangent_surface")
        return ManifoldDescriptor::make_cotangent(
            j.value("orientable", true),
            j.contains("genus") ? j["genus"].get<int>() : j.value("mu", 0),
            j.value("magnetic_exact", false));
    if (kind == "e3_orbit") return ManifoldDescriptor::make_e3_orbit(j.value("m", 0.0));
    if (kind == "so4_orbit") return ManifoldDescriptor::make_so4_orbit(j.value("m", 0.0));
    if (kind == "generic")
        return ManifoldDescriptor::make_generic(j.value("compact", false),
                                                j.value("dim_h2", 0),
                                                j.value("pi2_trivial", false));
    throw ValidationError("manifold descriptor: unknown kind '" + kind + "'");
}

namespace {

json point_to_json(const SingularPoint& pt) {
    json spectrum = json::array();
    for (const auto& e : pt.spectrum)
        spectrum.push_back(json::array({e.real(), e.imag()}));
    return json{{"location", std::vector<double>(pt.location.data(),
                                                 pt.location.data() + pt.location.size())},
                {"rank", pt.rank},
                {"spectrum", spectrum},
                {"label", to_string(pt.label)},
                {"combination", json::array({pt.combination_a, pt.combination_b})}};
}

}  // namespace

std::string singular_points_to_json(const std::vector<SingularPoint>& points) {
    json arr = json::array();
    for (const auto& pt : points) arr.push_back(point_to_json(pt));
    return arr.dump(2) + "\n";
}

std::string fiber_to_json(const FiberSample& fs) {
    const char* status = fs.status == FiberStatus::ok
                             ? "ok"
                             : (fs.status == FiberStatus::empty ? "empty" : "inconclusive");
    json pts = json::array();
    for (const auto& p : fs.points)
        pts.push_back(std::vector<double>(p.data(), p.data() + p.size()));
    json rank0 = json::array();
    for (const auto& pt : fs.rank0_on_fiber) rank0.push_back(point_to_json(pt));
    return json{{"moment", json::array({fs.moment.h, fs.moment.f})},
                {"status", status},
                {"n_points", fs.points.size()},
                {"eps_link", fs.eps_link},
                {"n_components", fs.n_components},
                {"complexity", fs.complexity},
                {"rank0_on_fiber", rank0},
                {"points", pts}}
               .dump(2) +
           "\n";
}

std::string verdict_to_json(const Verdict& v) {
    json j{{"status", to_string(v.status)}, {"rule_trace", v.rule_trace}};
    if (v.max_complexity) j["max_complexity"] = *v.max_complexity;
    else j["max_complexity"] = "unbounded";
    if (!v.condition.empty()) j["condition"] = v.condition;
    return j.dump(2) + "\n";
}

std::string drift_report_to_json(const std::vector<DriftReportRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"invariant", r.name},
                           {"max_deviation", r.max_deviation},
                           {"relative_deviation", r.relative_deviation}});
    return arr.dump(2) + "\n";
}

std::string moment_image_to_csv(const std::vector<MomentImageCell>& cells) {
    std::string out = "h,f,exists,complexity\n";
    for (const auto& c : cells) {
        out += csv_num(c.h);
        out += ',';
        out += csv_num(c.f);
        out += ',';
        out += c.fiber_exists ? '1' : '0';
        out += ',';
        out += std::to_string(c.complexity);
        out += '\n';
    }
    return out;
}

std::string trajectory_to_csv(const Trajectory& traj) {
    if (traj.states.empty()) return "t\n";
    const int n = static_cast<int>(traj.states.front().size());
    std::string out = "t";
    for (int i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
    out += '\n';
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        out += csv_num(traj.times[k]);
        for (int i = 0; i < n; ++i) {
            out += ',';
            out += csv_num(traj.states[k][i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace focuskit
