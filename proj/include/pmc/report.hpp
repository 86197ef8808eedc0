#pragma once

// Machine-readable output: JSON reports and CSV field samples.

#include "pmc/catalog.hpp"
#include "pmc/identities.hpp"
#include "pmc/theorems.hpp"

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace pmc {

inline constexpr const char* kVersion = "1.0.0";

nlohmann::json to_json(const ResidualReport& r);
nlohmann::json to_json(const TheoremVerdict& v);
nlohmann::json to_json(const CatalogEntry& e);
nlohmann::json surface_json(const SurfaceSpec& s);
nlohmann::json grid_json(const Grid& g);

// { "surface", "grid", "results", "verdicts", "version" }
nlohmann::json make_report(const SurfaceSpec& s, const Grid& grid, const std::vector<ResidualReport>& results,
                           const std::vector<TheoremVerdict>& verdicts);

enum class FieldQuantity { K, normT, normS, detS, mu_integrand };

// Accepts "K", "normT", "normS", "detS", "mu_integrand".
FieldQuantity parse_field_quantity(const std::string& s);

// Samples in grid order. normS and detS use S~ when tilde is set and S otherwise
// (MinimalSurfaceError at minimal points); mu_integrand throws at minimal points.
std::vector<double> sample_field(const SurfaceSpec& s, const std::vector<GridPoint>& pts, FieldQuantity q,
                                 bool tilde, Execution ex = Execution::parallel);

// Header "u,v,value", one row per point, 17 significant digits.
void write_csv(std::ostream& os, const std::vector<GridPoint>& pts, const std::vector<double>& values);

} // namespace pmc
