#pragma once

/**
 * Flat-space models of M^n(kappa) x R.
 *
 *   kappa > 0 : sphere <x, x> = 1/kappa in R^{n+1}, times the t-line   (flat_dim n + 2)
 *   kappa < 0 : upper hyperboloid <x, x> = 1/kappa in R^{1,n}, x_0 > 0 (flat_dim n + 2)
 *   kappa = 0 : R^n x R                                                (flat_dim n + 1)
 *
 * The t-coordinate is always last and never enters the space-form constraint.
 * The Levi-Civita connection of the product is flat differentiation followed
 * by project_to_product_tangent.
 */

#include "pmc/jet.hpp"

#include <span>
#include <vector>

namespace pmc {

struct AmbientModel {
    double kappa = 0.0;
    int n = 2;
    int flat_dim = 3;
    std::vector<int> signature; // one entry per flat coordinate
    int t_index = 2;

    // Number of flat coordinates of the space-form factor (everything but t).
    [[nodiscard]] int space_dim() const noexcept { return flat_dim - 1; }
    [[nodiscard]] bool curved() const noexcept { return kappa != 0.0; }
};

AmbientModel make_ambient(double kappa, int n);

inline constexpr double kConstraintTolerance = 1e-10;

template <typename T>
T flat_inner(const AmbientModel& model, std::span<const T> x, std::span<const T> y);

// Inner product restricted to the space-form coordinates (t dropped).
template <typename T>
T space_inner(const AmbientModel& model, std::span<const T> x, std::span<const T> y);

double flat_inner(const AmbientModel& model, const std::vector<double>& x, const std::vector<double>& y);
Jet2 flat_inner(const AmbientModel& model, const JetVec& x, const JetVec& y);

double constraint_residual(const AmbientModel& model, std::span<const double> p);

// w - kappa <w, p_M> p_M; t-component untouched. Checks that p lies on the model.
std::vector<double> project_to_product_tangent(const AmbientModel& model, std::span<const double> p,
                                               std::span<const double> w);

// Unchecked variants used inside the geometry pipeline.
std::vector<double> project_tangent_unchecked(const AmbientModel& model, std::span<const double> p,
                                              std::span<const double> w);
JetVec project_tangent(const AmbientModel& model, const JetVec& p, const JetVec& w);

// Unit vector of the R-factor.
std::vector<double> vertical_axis(const AmbientModel& model);

} // namespace pmc
