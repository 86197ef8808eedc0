#include "pmc/catalog.hpp"

#include "pmc/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pmc {

namespace {

using std::numbers::pi;

double radius_of(double kappa) { return 1.0 / std::sqrt(std::abs(kappa)); }

// Point at geodesic distance r from the base point of M^2(kappa), in direction angle.
JetVec polar_point(double kappa, const Jet2& r, const Jet2& angle)
{
    if (kappa > 0) {
        const double R = radius_of(kappa);
        const Jet2 s = R * sin(r / R);
        return {s * cos(angle), s * sin(angle), R * cos(r / R)};
    }
    if (kappa < 0) {
        const double R = radius_of(kappa);
        const Jet2 s = R * sinh(r / R);
        return {R * cosh(r / R), s * cos(angle), s * sin(angle)};
    }
    return {r * cos(angle), r * sin(angle)};
}

// Unit-speed geodesic through the base point of M^2(kappa).
JetVec geodesic_point(double kappa, const Jet2& s)
{
    if (kappa > 0) {
        const double R = radius_of(kappa);
        return {R * cos(s / R), R * sin(s / R), Jet2(0.0)};
    }
    if (kappa < 0) {
        const double R = radius_of(kappa);
        return {R * cosh(s / R), R * sinh(s / R), Jet2(0.0)};
    }
    return {s, Jet2(0.0)};
}

JetVec conformal_point(double kappa, const Jet2& u, const Jet2& v)
{
    const Jet2 rho2 = u * u + v * v;
    if (kappa > 0) {
        const double R = radius_of(kappa);
        const Jet2 den = R * R + rho2;
        return {2 * R * R * u / den, 2 * R * R * v / den, R * (R * R - rho2) / den};
    }
    if (kappa < 0) {
        const double R = radius_of(kappa);
        const Jet2 den = R * R - rho2;
        return {R * (R * R + rho2) / den, 2 * R * R * u / den, 2 * R * R * v / den};
    }
    return {2 * u, 2 * v};
}

// Appends zero space-form coordinates up to dimension n, then the t-coordinate.
ChartFn pad(ChartFn base, int base_space_coords, const AmbientModel& model)
{
    const int space = model.space_dim();
    return [base = std::move(base), base_space_coords, space](const Jet2& u, const Jet2& v) {
        JetVec x = base(u, v);
        const Jet2 t = x.back();
        x.pop_back();
        const int order = std::min(u.order(), v.order());
        for (int i = base_space_coords; i < space; ++i) x.push_back(Jet2::constant(0.0, order));
        x.push_back(t);
        return x;
    };
}

int int_param(const Params& p, const std::string& name)
{
    const double x = p.at(name);
    if (x != std::floor(x)) throw InvalidArgument("parameter " + name + " must be an integer");
    return static_cast<int>(x);
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw InvalidArgument("parameter out of range: " + what);
}

std::map<std::string, double> circle_cylinder_expected(const Params& p)
{
    const double kappa = p.at("kappa");
    const double k = circle_geodesic_curvature(kappa, p.at("r"));
    const double s = 0.5 * (k * k + kappa);
    return {{"K", 0.0}, {"normT", 1.0}, {"normH", 0.5 * k}, {"detS", -s * s}, {"normS_sq", 2 * s * s},
            {"principal_curvature", k}, {"mu", 0.0}};
}

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> entries;
    const ParamSpec kappa_any{"kappa", 1.0, "any real"};
    const ParamSpec t0{"t0", 0.0, "any real"};

    entries.push_back({"slice",
                       "horizontal slice M^2(kappa) x {t0}, geodesic polar chart",
                       {kappa_any, t0, {"n", 2, "integer >= 2"}},
                       "kappa free, n >= 2",
                       true,
                       true,
                       [](const Params& p) {
                           return std::map<std::string, double>{
                               {"K", p.at("kappa")}, {"normT", 0.0}, {"normH", 0.0}, {"detS_tilde", 0.0}};
                       }});
    entries.push_back({"conformal_slice",
                       "horizontal slice M^2(kappa) x {t0}, conformal chart with factor 4 at the origin",
                       {kappa_any, t0, {"n", 2, "integer >= 2"}},
                       "kappa free, n >= 2",
                       true,
                       true,
                       [](const Params& p) {
                           return std::map<std::string, double>{{"K", p.at("kappa")},
                                                                {"normT", 0.0},
                                                                {"normH", 0.0},
                                                                {"metric_factor_at_origin", 4.0}};
                       }});
    entries.push_back({"vertical_geodesic_cylinder",
                       "vertical cylinder over a unit-speed geodesic of M^2(kappa)",
                       {kappa_any, {"n", 2, "integer >= 2"}},
                       "kappa free, n >= 2",
                       true,
                       true,
                       [](const Params&) {
                           return std::map<std::string, double>{
                               {"K", 0.0}, {"normT", 1.0}, {"normH", 0.0}, {"detS_tilde", -0.25}};
                       }});
    entries.push_back({"circle_cylinder",
                       "vertical cylinder over a geodesic circle of radius r in M^2(kappa); CMC",
                       {kappa_any, {"r", std::numbers::pi / 4, "0 < r < pi/(2 sqrt(kappa)) if kappa > 0, else r > 0"},
                        {"n", 2, "integer >= 2"}},
                       "kappa free, n >= 2 (n > 2 pads totally geodesically)",
                       false,
                       true,
                       circle_cylinder_expected});
    entries.push_back({"cor32_flat_minimal",
                       "flat minimal surface with constant angle sin(theta) = |T| in M^4(kappa) x R",
                       {{"kappa", 1.0, "kappa > 0"}, {"theta", std::numbers::pi / 4, "0 < theta < pi/2"},
                        {"n", 4, "integer >= 4"}},
                       "kappa > 0, n >= 4",
                       true,
                       true,
                       [](const Params& p) {
                           const double kappa = p.at("kappa");
                           const double theta = p.at("theta");
                           const double s = std::sin(theta);
                           const double c = std::cos(theta);
                           return std::map<std::string, double>{{"K", 0.0},
                                                                {"normT", s},
                                                                {"normH", 0.0},
                                                                {"b", cor32_b(kappa, theta)},
                                                                {"detS_tilde", -s * s * s * s / 4},
                                                                {"alpha_sq", 2 * kappa * c * c}};
                       }});
    entries.push_back({"helicoidal_torus",
                       "(r1 cos u, r1 sin u, r2 cos v, r2 sin v, pitch u) in S^3(kappa) x R; PMC iff pitch = 0",
                       {{"kappa", 1.0, "kappa > 0"}, {"r1", 0.6, "0 < r1 < 1/sqrt(kappa)"}, {"pitch", 0.0, "pitch >= 0"},
                        {"n", 3, "integer >= 3"}},
                       "kappa > 0, n >= 3",
                       false,
                       false,
                       [](const Params& p) {
                           const double r1 = p.at("r1");
                           const double h = p.at("pitch");
                           const double R2 = 1.0 / p.at("kappa");
                           return std::map<std::string, double>{{"K", 0.0},
                                                                {"normT", h / std::sqrt(r1 * r1 + h * h)},
                                                                {"g_uu", r1 * r1 + h * h},
                                                                {"g_vv", R2 - r1 * r1}};
                       }});
    entries.push_back({"perturbed_control",
                       "circle cylinder whose radius varies as r (1 + delta sin v); a genuine non-PMC surface",
                       {kappa_any, {"r", std::numbers::pi / 4, "as circle_cylinder, with r (1 + delta) in range"},
                        {"delta", 0.1, "0 <= delta < 0.5"}, {"n", 2, "integer >= 2"}},
                       "kappa free, n >= 2",
                       false,
                       false,
                       [](const Params& p) {
                           const double kappa = p.at("kappa");
                           const double r = p.at("r");
                           double s = r;
                           if (kappa > 0) s = radius_of(kappa) * std::sin(r * std::sqrt(kappa));
                           if (kappa < 0) s = radius_of(kappa) * std::sinh(r * std::sqrt(-kappa));
                           return std::map<std::string, double>{{"g_uu_at_v0", s * s},
                                                                {"g_vv_at_v0", 1.0 + std::pow(p.at("delta") * r, 2)}};
                       }});
    return entries;
}

} // namespace

double cor32_b(double kappa, double theta)
{
    const double c = std::cos(theta);
    return std::sqrt(kappa + kappa * c * c);
}

double circle_geodesic_curvature(double kappa, double r)
{
    if (kappa > 0) return std::sqrt(kappa) / std::tan(std::sqrt(kappa) * r);
    if (kappa < 0) return std::sqrt(-kappa) / std::tanh(std::sqrt(-kappa) * r);
    return 1.0 / r;
}

const std::vector<CatalogEntry>& catalog_list()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id)
{
    for (const auto& e : catalog_list()) {
        if (e.id == id) return e;
    }
    throw InvalidArgument("unknown surface id: " + id);
}

Params resolve_params(const std::string& id, const Params& params)
{
    const CatalogEntry& entry = catalog_entry(id);
    Params p;
    for (const auto& spec : entry.params) p[spec.name] = spec.default_value;
    for (const auto& [name, value] : params) {
        if (!p.contains(name)) throw InvalidArgument("surface " + id + " has no parameter " + name);
        if (!std::isfinite(value)) throw InvalidArgument("parameter " + name + " must be finite");
        p[name] = value;
    }

    const double kappa = p.at("kappa");
    const int n = int_param(p, "n");
    const auto radius_ok = [kappa](double r) {
        return r > 0 && (kappa <= 0 || r < pi / (2 * std::sqrt(kappa)));
    };
    if (id == "slice" || id == "conformal_slice" || id == "vertical_geodesic_cylinder") {
        require(n >= 2, "n >= 2");
    } else if (id == "circle_cylinder") {
        require(n >= 2, "n >= 2");
        require(radius_ok(p.at("r")), "r for circle_cylinder");
    } else if (id == "perturbed_control") {
        require(n >= 2, "n >= 2");
        const double delta = p.at("delta");
        require(delta >= 0 && delta < 0.5, "0 <= delta < 0.5");
        require(radius_ok(p.at("r") * (1 + delta)) && radius_ok(p.at("r") * (1 - delta)), "r for perturbed_control");
    } else if (id == "cor32_flat_minimal") {
        require(n >= 4, "n >= 4");
        require(kappa > 0, "kappa > 0");
        require(p.at("theta") > 0 && p.at("theta") < pi / 2, "0 < theta < pi/2");
    } else if (id == "helicoidal_torus") {
        require(n >= 3, "n >= 3");
        require(kappa > 0, "kappa > 0");
        require(p.at("r1") > 0 && p.at("r1") < radius_of(kappa), "0 < r1 < 1/sqrt(kappa)");
        require(p.at("pitch") >= 0, "pitch >= 0");
    }
    require(n <= 16, "n <= 16");
    return p;
}

SurfaceSpec instantiate(const std::string& id, const Params& params)
{
    const Params p = resolve_params(id, params);
    const double kappa = p.at("kappa");
    const int n = int_param(p, "n");

    SurfaceSpec s;
    s.catalog_id = id;
    s.params = p;
    s.ambient = make_ambient(kappa, n);
    const double R = kappa != 0 ? radius_of(kappa) : 1.0;
    const int m2_coords = kappa != 0 ? 3 : 2;

    ChartFn base;
    int base_coords = m2_coords;
    if (id == "slice") {
        const double t = p.at("t0");
        base = [kappa, t](const Jet2& u, const Jet2& v) {
            JetVec x = polar_point(kappa, u, v);
            x.push_back(Jet2::constant(t, std::min(u.order(), v.order())));
            return x;
        };
        s.domain = kappa > 0 ? Domain{0.1 * pi * R, 0.9 * pi * R, 0.0, 2 * pi} : Domain{0.2 * R, 2.0 * R, 0.0, 2 * pi};
    } else if (id == "conformal_slice") {
        const double t = p.at("t0");
        base = [kappa, t](const Jet2& u, const Jet2& v) {
            JetVec x = conformal_point(kappa, u, v);
            x.push_back(Jet2::constant(t, std::min(u.order(), v.order())));
            return x;
        };
        const double half = kappa < 0 ? 0.5 * R : R;
        s.domain = Domain{-half, half, -half, half};
    } else if (id == "vertical_geodesic_cylinder") {
        base = [kappa](const Jet2& u, const Jet2& v) {
            JetVec x = geodesic_point(kappa, u);
            x.push_back(v);
            return x;
        };
        s.domain = kappa > 0 ? Domain{0.0, 2 * pi * R, -1.0, 1.0} : Domain{-2.0 * R, 2.0 * R, -1.0, 1.0};
    } else if (id == "circle_cylinder") {
        const Jet2 r = p.at("r");
        base = [kappa, r](const Jet2& u, const Jet2& v) {
            JetVec x = polar_point(kappa, r, u);
            x.push_back(v);
            return x;
        };
        s.domain = Domain{0.0, 2 * pi, -pi, pi};
    } else if (id == "perturbed_control") {
        const double r = p.at("r");
        const double delta = p.at("delta");
        base = [kappa, r, delta](const Jet2& u, const Jet2& v) {
            JetVec x = polar_point(kappa, r * (1.0 + delta * sin(v)), u);
            x.push_back(v);
            return x;
        };
        s.domain = Domain{0.0, 2 * pi, -pi, pi};
    } else if (id == "cor32_flat_minimal") {
        const double theta = p.at("theta");
        const double b = cor32_b(kappa, theta);
        const double c = std::cos(theta);
        const double st = std::sin(theta);
        base = [b, c, st](const Jet2& u, const Jet2& v) {
            const int order = std::min(u.order(), v.order());
            return JetVec{c / b * cos(b * u), c / b * sin(b * u), sin(b * v) / b, cos(b * v) / b,
                          Jet2::constant(0.0, order), st * u};
        };
        base_coords = 5;
        s.domain = Domain{0.0, 2 * pi / b, 0.0, 2 * pi / b};
    } else if (id == "helicoidal_torus") {
        const double r1 = p.at("r1");
        const double r2 = std::sqrt(R * R - r1 * r1);
        const double h = p.at("pitch");
        base = [r1, r2, h](const Jet2& u, const Jet2& v) {
            return JetVec{r1 * cos(u), r1 * sin(u), r2 * cos(v), r2 * sin(v), h * u};
        };
        base_coords = 4;
        s.domain = Domain{0.0, 2 * pi, 0.0, 2 * pi};
    } else {
        throw InvalidArgument("unknown surface id: " + id);
    }
    s.chart = pad(std::move(base), base_coords, s.ambient);
    return s;
}

} // namespace pmc
