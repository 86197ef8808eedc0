#pragma once

/**
 * Built-in surfaces with closed-form geometry.
 *
 *   slice                       M^2(kappa) x {t0}, geodesic polar chart
 *   conformal_slice             M^2(kappa) x {t0}, conformal chart (stereographic / Poincare)
 *   vertical_geodesic_cylinder  geodesic x R
 *   circle_cylinder             geodesic circle of radius r, times R
 *   cor32_flat_minimal          flat minimal constant-angle surface in M^4(kappa) x R, kappa > 0
 *   helicoidal_torus            (r1 e^{iu}, r2 e^{iv}, pitch u) in S^3(kappa) x R
 *   perturbed_control           circle cylinder with radius r (1 + delta sin v); not PMC
 *
 * Every entry accepts an optional integer parameter n that pads the space
 * form totally geodesically into M^n(kappa).
 */

#include "pmc/surface.hpp"

#include <string>
#include <vector>

namespace pmc {

struct ParamSpec {
    std::string name;
    double default_value = 0.0;
    std::string range; // human-readable validity range
};

struct CatalogEntry {
    std::string id;
    std::string description;
    std::vector<ParamSpec> params;
    std::string ambient_rule;
    bool minimal = false;
    bool pmc = false;
    // Closed-form expected quantities for the given parameters.
    std::function<std::map<std::string, double>(const Params&)> expected;
};

const std::vector<CatalogEntry>& catalog_list();
const CatalogEntry& catalog_entry(const std::string& id);

// Merges defaults into params and validates ranges.
Params resolve_params(const std::string& id, const Params& params);

SurfaceSpec instantiate(const std::string& id, const Params& params = {});

// b = sqrt(kappa + kappa cos^2 theta) of the flat minimal constant-angle surface.
double cor32_b(double kappa, double theta);

// Geodesic curvature of a circle of geodesic radius r in M^2(kappa).
double circle_geodesic_curvature(double kappa, double r);

} // namespace pmc
