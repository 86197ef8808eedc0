#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include "pmc/geometry.hpp"
#include "pmc/spaceform.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace fixtures {

// Random smooth scalar field, usable with jets and with long double.
struct ScalarField {
    std::array<double, 8> a{};
    template <class T>
    T operator()(const T& u, const T& v) const
    {
        using std::cos;
        using std::exp;
        using std::sin;
        return a[0] * sin(a[1] * u + a[2] * v) + a[3] * exp(a[4] * u * v) + a[5] * u * u * v +
               a[6] * cos(a[7] * v) * u;
    }
};

// Random positive-definite metric field (g11, g12, g22).
struct MetricField {
    std::array<double, 5> b{};
    template <class T>
    std::array<T, 3> operator()(const T& u, const T& v) const
    {
        using std::cos;
        using std::sin;
        return {1.5 + b[0] * sin(b[1] * u + v), 0.4 * b[4] * sin(u * v), 1.5 + b[2] * cos(u - b[3] * v)};
    }
};

inline ScalarField random_scalar_field(std::mt19937& rng)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ScalarField f;
    for (auto& x : f.a) x = dist(rng);
    return f;
}

inline MetricField random_metric_field(std::mt19937& rng)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    MetricField m;
    for (auto& x : m.b) x = 0.5 * dist(rng);
    m.b[4] = dist(rng);
    return m;
}

// frame[0] followed by a random orthogonal recombination of frame[1..].
inline std::vector<pmc::Vec> rotate_aux(const std::vector<pmc::Vec>& frame, std::mt19937& rng)
{
    const std::size_t k = frame.size() - 1;
    std::normal_distribution<double> nd;
    std::vector<std::vector<double>> q(k, std::vector<double>(k));
    for (auto& row : q)
        for (auto& x : row) x = nd(rng);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double d = 0;
            for (std::size_t l = 0; l < k; ++l) d += q[i][l] * q[j][l];
            for (std::size_t l = 0; l < k; ++l) q[i][l] -= d * q[j][l];
        }
        double nn = 0;
        for (double x : q[i]) nn += x * x;
        for (double& x : q[i]) x /= std::sqrt(nn);
    }
    std::vector<pmc::Vec> out{frame[0]};
    for (std::size_t i = 0; i < k; ++i) {
        pmc::Vec w(frame[0].size(), 0.0);
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t c = 0; c < w.size(); ++c) w[c] += q[i][l] * frame[l + 1][c];
        out.push_back(w);
    }
    return out;
}

// Sum over i > 1 of |A_i|^2: the frame form of the mu integrand.
inline double aux_norm_sq(const pmc::GeomPoint& gp, const std::vector<pmc::Vec>& frame)
{
    double acc = 0.0;
    for (std::size_t i = 1; i < frame.size(); ++i) {
        const pmc::Mat2d A = pmc::shape_operator(gp, frame[i]);
        acc += (A * A).trace();
    }
    return acc;
}

// Orbit of a 2-torus of isometries in S^5 x R, padded into M^n; not a hypersurface
// of any totally geodesic factor, so the auxiliary shape operators are nonzero.
inline pmc::SurfaceSpec torus_orbit(int n)
{
    pmc::SurfaceSpec s;
    s.catalog_id = "torus_orbit";
    s.ambient = pmc::make_ambient(1.0, n);
    s.domain = pmc::Domain{0.0, 2 * std::numbers::pi, 0.0, 2 * std::numbers::pi};
    const int space = s.ambient.space_dim();
    s.chart = [space](const pmc::Jet2& u, const pmc::Jet2& v) {
        const double r1 = 0.6, r2 = 0.5, r3 = std::sqrt(1.0 - r1 * r1 - r2 * r2);
        const pmc::Jet2 w = u + 2.0 * v;
        pmc::JetVec x{r1 * cos(u), r1 * sin(u), r2 * cos(v), r2 * sin(v), r3 * cos(w), r3 * sin(w)};
        while (static_cast<int>(x.size()) < space) x.push_back(pmc::Jet2::constant(0.0, u.order()));
        x.push_back(0.2 * u);
        return x;
    };
    return s;
}

} // namespace fixtures
