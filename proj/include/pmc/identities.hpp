#pragma once

// Residuals of the ambient structure equations and of the curvature identities
// for surfaces in M^n(kappa) x R, pointwise and as grid reports.

#include "pmc/codazzi.hpp"
#include "pmc/geometry.hpp"
#include "pmc/sweep.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pmc {

struct ResidualReport {
    std::string identity_id;
    int nu = 0;
    int nv = 0;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double argmax_u = 0.0;
    double argmax_v = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    std::vector<std::string> warnings;
};

// Builds a report from per-point residuals in grid order; NaN marks skipped points.
ResidualReport make_report(std::string id, const std::vector<GridPoint>& pts, const Grid& grid,
                           const std::vector<double>& values, double tolerance);

// g-norm of (nabla_X A)(Y, xi) - (nabla_Y A)(X, xi) - kappa <xi, eta> (X ^ Y) T
// with X = d_u, Y = d_v and (X ^ Y) T = <Y, T> X - <X, T> Y.
// The covariant derivative of A includes the normal connection acting on xi;
// xi is extended off the point by projecting the constant vector.
double ambient_codazzi_residual(const GeomPoint& gp, const Vec& xi);
double ambient_codazzi_residual(const SurfaceSpec& s, double u, double v, const Vec& xi);
// Worst case over the orthonormal normal frame.
double ambient_codazzi_residual(const GeomPoint& gp);

struct CurvatureFormulaTerms {
    double K = 0.0;              // intrinsic
    double kappa_term = 0.0;     // kappa (1 - |T|^2)
    double H_sq = 0.0;           // |H|^2
    double S_term = 0.0;         // -|S|^2 / (8 |H|^2)
    double T4_term = 0.0;        // -kappa^2 |T|^4 / (16 |H|^2)
    double ST_term = 0.0;        // -kappa <S T, T> / (4 |H|^2)
    double aux_det = 0.0;        // sum_{i>1} det A_i
    [[nodiscard]] double rhs() const { return kappa_term + H_sq + S_term + T4_term + ST_term + aux_det; }
};

// Throws MinimalSurfaceError when |H| < 1e-8.
CurvatureFormulaTerms curvature_formula_terms(const GeomPoint& gp);
double curvature_formula_residual(const GeomPoint& gp);
double curvature_formula_residual(const SurfaceSpec& s, double u, double v);

struct TLaplacianTerms {
    double lhs = 0.0;            // 1/2 Lap |T|^2
    double A_eta_sq = 0.0;       // trace(A_eta^2)
    double kappa_term = 0.0;     // kappa |T|^2 (1 - |T|^2)
    double sum_all = 0.0;        // sum over an orthonormal normal frame of |A_e T|^2
    double sum_aux = 0.0;        // same sum restricted to e != H/|H| (0 at minimal points: all directions)
    double pmc_term = 0.0;       // 2 <nabla^perp_T H, eta>, zero on PMC surfaces
};

TLaplacianTerms t_laplacian_terms(const GeomPoint& gp);
// |lhs - (A_eta_sq + kappa_term - sum_all + pmc_term)|.
double t_laplacian_residual(const GeomPoint& gp);
double t_laplacian_residual(const SurfaceSpec& s, double u, double v);

// max over a of the flat norm of nabla^perp_{d_a} H.
double pmc_pointwise(const GeomPoint& gp);
ResidualReport pmc_residual(const SurfaceSpec& s, const Grid& grid = {}, Execution ex = Execution::parallel);

// |alpha|^2 - |A_H|^2 / |H|^2; throws MinimalSurfaceError.
double mu_integrand(const GeomPoint& gp);
// |mu_integrand + 2 sum_{i>1} det A_i|.
double mu_identity_residual(const GeomPoint& gp);

struct MuEstimate {
    double mu = 0.0;             // grid maximum of the integrand
    double cross_check = 0.0;    // |mu + 2 min_grid sum_{i>1} det A_i|
    double argmax_u = 0.0;
    double argmax_v = 0.0;
    int nu = 0;
    int nv = 0;
};

MuEstimate mu_estimate(const SurfaceSpec& s, const Grid& grid = {}, Execution ex = Execution::parallel);

// g-norm of R(d_u, d_v) d_v minus the Gauss equation right-hand side.
double gauss_equation_residual(const GeomPoint& gp);
double gauss_equation_residual(const SurfaceSpec& s, double u, double v);

struct TFieldResiduals {
    double tangent = 0.0;  // max_a |nabla_a T - A_eta d_a|_g
    double normal = 0.0;   // max_a |alpha(d_a, T) + nabla^perp_a eta|
};

TFieldResiduals t_field_residuals(const GeomPoint& gp);

// |trace A_eta - 2 <H, eta>|
double trace_A_eta_residual(const GeomPoint& gp);

// ---------------------------------------------------------------------------
// Identity suite

namespace ids {
inline constexpr const char* codazzi_S = "codazzi_S";
inline constexpr const char* codazzi_S_tilde = "codazzi_S_tilde";
inline constexpr const char* trace_S = "trace_S";
inline constexpr const char* trace_S_tilde = "trace_S_tilde";
inline constexpr const char* simons_eq4_S = "simons_eq4_S";
inline constexpr const char* simons_eq5_S = "simons_eq5_S";
inline constexpr const char* simons_eq6_S = "simons_eq6_S";
inline constexpr const char* simons_eq4_S_tilde = "simons_eq4_S_tilde";
inline constexpr const char* simons_eq5_S_tilde = "simons_eq5_S_tilde";
inline constexpr const char* simons_eq6_S_tilde = "simons_eq6_S_tilde";
inline constexpr const char* s_norm_det_S = "s_norm_det_S";
inline constexpr const char* s_norm_det_S_tilde = "s_norm_det_S_tilde";
inline constexpr const char* metric_change_S = "metric_change_S";
inline constexpr const char* metric_change_S_tilde = "metric_change_S_tilde";
inline constexpr const char* inverse_codazzi_S = "inverse_codazzi_S";
inline constexpr const char* inverse_codazzi_S_tilde = "inverse_codazzi_S_tilde";
inline constexpr const char* ambient_codazzi = "ambient_codazzi";
inline constexpr const char* gauss_equation = "gauss_equation";
inline constexpr const char* curvature_formula = "curvature_formula";
inline constexpr const char* t_laplacian = "t_laplacian";
inline constexpr const char* pmc = "pmc";
inline constexpr const char* t_field_tangent = "t_field_tangent";
inline constexpr const char* t_field_normal = "t_field_normal";
inline constexpr const char* trace_A_eta = "trace_A_eta";
inline constexpr const char* mu_identity = "mu_identity";
inline constexpr const char* constraint = "constraint";
} // namespace ids

// Identity ids in suite order.
const std::vector<std::string>& identity_ids();
const std::map<std::string, double>& default_tolerances();

// Throws InvalidArgument for an unknown id or a non-positive value.
std::map<std::string, double> merge_tolerances(const std::map<std::string, double>& overrides);

// Runs every identity applicable at each grid point: the S~ suite at minimal
// points, the S suite, PMC, curvature formula and mu identity at non-minimal
// points, structural identities everywhere. Identities that apply nowhere are
// omitted; partial applicability is noted in warnings.
std::vector<ResidualReport> run_identity_suite(const SurfaceSpec& s, const Grid& grid = {},
                                               const std::map<std::string, double>& tol_overrides = {},
                                               Execution ex = Execution::parallel);

} // namespace pmc
