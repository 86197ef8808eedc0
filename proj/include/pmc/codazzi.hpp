#pragma once

/**
 * Traceless Codazzi operators on surfaces in M^n(kappa) x R and the
 * identities they satisfy.
 *
 *   S X  = 2 A_H X - kappa <T, X> T + (kappa |T|^2 / 2 - 2 |H|^2) X     (non-minimal)
 *   S~ X = -<T, X> T + (|T|^2 / 2) X                                    (any surface)
 *
 * Operators are (1,1)-tensors in the chart basis, carried as order-2 jets so
 * that covariant derivatives and Laplacians of |S|^2 are available pointwise.
 * Determinant and trace are always the endomorphism ones.
 */

#include "pmc/geometry.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pmc {

inline constexpr double kSimonsFloor = 1e-6;    // |S| below which log|S| identities are skipped
inline constexpr double kSingularFloor = 1e-8;  // |det S| below which the metric change is skipped

enum class FieldKind { S, S_tilde, custom };

struct CodazziField {
    FieldKind kind = FieldKind::S;
    std::string name = "S";
    std::function<Mat2j(const GeomPoint&)> matrix_jet;

    [[nodiscard]] Mat2d matrix_at(const SurfaceSpec& s, double u, double v) const;

    static CodazziField S();
    static CodazziField S_tilde();
    // Re(phi(z) dz^2) raised with the chart metric, phi(z) = sum_k coeffs[k] z^k, z = u + i v.
    // Traceless Codazzi whenever the chart is conformal.
    static CodazziField quadratic_differential(std::vector<std::complex<double>> coeffs);
};

Mat2j operator_S_jet(const GeomPoint& gp);
Mat2d operator_S(const GeomPoint& gp, double kappa);
Mat2j operator_S_tilde_jet(const GeomPoint& gp);
Mat2d operator_S_tilde(const GeomPoint& gp);

// |(g S)_uv - (g S)_vu|
double self_adjoint_defect(const Mat2d& S, const Mat2d& g);

// g-norm of nabla_{d_u}(S d_v) - nabla_{d_v}(S d_u).
double codazzi_residual(const Mat2j& S, const std::array<Mat2j, 2>& gamma, const Mat2d& g);
double codazzi_residual(const GeomPoint& gp, const Mat2j& S);
double codazzi_residual(const SurfaceSpec& s, double u, double v, const CodazziField& field);

struct SimonsResiduals {
    double norm = 0.0;                 // |S|
    double r_eq4 = 0.0;                // | 1/2 Lap |S|^2 - |nabla S|^2 - 2K |S|^2 |
    std::optional<double> r_eq5;       // | |S| Lap |S| - 2K |S|^2 - |grad |S||^2 |
    std::optional<double> r_eq6;       // | Lap log|S| - 2K |
    double grad_S_sq = 0.0;            // |nabla S|^2
    std::optional<double> grad_abs_S_sq; // |grad |S||^2
};

SimonsResiduals simons_residuals(const GeomPoint& gp, const Mat2j& S);
// Throws SingularOperatorError when |S| is below the floor.
SimonsResiduals simons_residuals(const SurfaceSpec& s, double u, double v, const CodazziField& field);

// |trace(S^2) + 2 det S|; S must be traceless and g-self-adjoint to 1e-8.
double s_norm_det_identity(const Mat2d& S, const Mat2d& g);

struct MetricChange {
    Mat2j gS;                      // <S d_a, S d_b>, order 2
    double det_S = 0.0;
    double K = 0.0;
    double K_tilde = 0.0;          // intrinsic curvature of gS
    double residual = 0.0;         // |K_tilde det S - K|
    double inverse_codazzi = 0.0;  // Codazzi residual of S^-1 for the Levi-Civita connection of gS
    double connection_residual = 0.0; // max |Gamma~ - S^-1 nabla(S .)| over components
    bool positive_definite = false;
};

// Throws SingularOperatorError when |det S| <= 1e-8.
MetricChange metric_change(const GeomPoint& gp, const Mat2j& S);
MetricChange metric_change(const SurfaceSpec& s, double u, double v, const CodazziField& field);

} // namespace pmc
