#pragma once

/**
 * Pointwise geometry of an immersed surface in M^n(kappa) x R.
 *
 * evaluate_chart expands the chart to order-4 jets at (u, v) and derives
 * everything else algebraically:
 *
 *   f_a          order 3      tangent vectors
 *   g, g^-1      order 3      first fundamental form
 *   Gamma^c_ab   order 2      Christoffel symbols of g
 *   alpha_ab     order 2      second fundamental form (flat normal vectors)
 *   H            order 2      mean curvature vector
 *   T^a, T_a     order 3      tangent part of d/dt (chart components / lowered)
 *   eta          order 3      normal part of d/dt
 *   K            order 1      intrinsic curvature from g alone
 *
 * Frame-dependent data (the orthonormal normal frame and its shape operators)
 * exist only as values; nothing ever differentiates the frame.
 */

#include "pmc/jet.hpp"
#include "pmc/mat2.hpp"
#include "pmc/surface.hpp"

#include <array>
#include <vector>

namespace pmc {

inline constexpr double kMinimalThreshold = 1e-8;
inline constexpr double kConditioningThreshold = 1e-6;
inline constexpr double kNormalTolerance = 1e-10;

using Vec = std::vector<double>;

struct GeomPoint {
    AmbientModel ambient;
    double u = 0.0;
    double v = 0.0;

    JetVec f;                           // order 4
    std::array<JetVec, 2> df;           // order 3
    Mat2j g;                            // order 3
    Mat2j ginv;                         // order 3
    std::array<Mat2j, 2> gamma;         // gamma[c](a, b) = Gamma^c_ab, order 2
    std::array<std::array<JetVec, 2>, 2> alpha; // order 2
    JetVec H;                           // order 2
    Jet2 H_norm_sq;                     // order 2
    double H_norm = 0.0;
    std::array<Jet2, 2> T;              // chart components T^a, order 3
    std::array<Jet2, 2> T_lower;        // g_ab T^b = <d/dt, f_a>, order 3
    Jet2 T_norm_sq;                     // order 3
    JetVec eta;                         // order 3
    Jet2 K;                             // order 1

    std::vector<Vec> xi;                // orthonormal normal frame, xi[0] = H/|H| when non-minimal
    std::vector<Mat2d> A;               // shape operator of each frame vector, chart basis

    [[nodiscard]] bool minimal() const noexcept { return H_norm < kMinimalThreshold; }
    [[nodiscard]] bool ill_conditioned() const noexcept
    {
        return H_norm >= kMinimalThreshold && H_norm < kConditioningThreshold;
    }
    [[nodiscard]] int codimension() const noexcept { return ambient.n - 1; }

    [[nodiscard]] Mat2d metric() const { return values(g); }
    [[nodiscard]] Vec tangent(int a) const { return values(df[static_cast<std::size_t>(a)]); }
    [[nodiscard]] Vec position() const { return values(f); }
    [[nodiscard]] double t_norm() const;
};

GeomPoint evaluate_chart(const SurfaceSpec& s, double u, double v);

// Intrinsic curvature from a metric and its derivatives (Brioschi's formula).
// Returns a jet of order (input order - 2).
Jet2 gauss_curvature_brioschi(const Mat2j& g);

// Christoffel symbols Gamma^c_ab of a metric given as jets (order - 1).
std::array<Mat2j, 2> christoffel(const Mat2j& g);

// Chart components of R(d_u, d_v) d_v; Christoffel jets of order >= 1.
std::array<double, 2> riemann_uvv(const std::array<Mat2j, 2>& gamma);

// Intrinsic curvature through the Riemann tensor built from Christoffel symbols.
double gauss_curvature_riemann(const Mat2j& g);

// A_xi = g^-1 [<alpha(d_a, d_b), xi>] in the chart basis. xi must be normal.
Mat2d shape_operator(const GeomPoint& gp, const Vec& xi);

// Same, for a normal field given as jets (order 2 result).
Mat2j shape_operator_jet(const GeomPoint& gp, const JetVec& xi);

// Normal part (relative to the surface, inside the product tangent space) of a flat vector.
Vec normal_part(const GeomPoint& gp, const Vec& w);
JetVec normal_part_jet(const GeomPoint& gp, const JetVec& w);

// Smooth normal extension around the chart point of a normal vector xi0:
// the normal part of the projected constant vector xi0.
JetVec extend_normal(const GeomPoint& gp, const Vec& xi0);

// nabla^perp_{d_dir} of a normal field given as jets at the chart point.
Vec normal_connection_derivative(const GeomPoint& gp, const JetVec& field, Var dir);

// g^ab (d_a d_b phi - Gamma^k_ab d_k phi) at the chart point.
double laplace_beltrami(const Jet2& phi, const Mat2j& g);
double laplace_beltrami(const Jet2& phi, const GeomPoint& gp);

// g^ab d_a phi d_b phi at the chart point.
double grad_norm_sq(const Jet2& phi, const Mat2j& g);

// Normal frame rebuilt from explicit frame vectors; used for frame-rotation checks.
double sum_det_aux(const GeomPoint& gp, const std::vector<Vec>& frame);
double sum_det_aux(const GeomPoint& gp);

// |alpha|^2 = g^ac g^bd <alpha_ab, alpha_cd>.
double alpha_norm_sq(const GeomPoint& gp);

// Lowered <alpha_ab, nu> for a flat vector nu.
Mat2d alpha_dot(const GeomPoint& gp, const Vec& nu);

// A_H = g^-1 [<alpha_ab, H>] as jets.
Mat2j shape_operator_H(const GeomPoint& gp);

// g-norm of a tangent vector in chart components.
double tangent_norm(const Mat2d& g, const std::array<double, 2>& x);

// Levi-Civita covariant derivative of a (1,1)-tensor field S (jets, order >= 1):
// (nabla_a S)^c_b = d_a S^c_b + Gamma^c_ad S^d_b - Gamma^d_ab S^c_d.
std::array<Mat2d, 2> covariant_derivative(const Mat2j& S, const std::array<Mat2j, 2>& gamma);

} // namespace pmc
