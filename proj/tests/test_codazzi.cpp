#include "doctest.h"
#include "oracle.hpp"

#include "pmc/catalog.hpp"
#include "pmc/codazzi.hpp"
#include "pmc/errors.hpp"
#include "pmc/geometry.hpp"
#include "pmc/sweep.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace pmc;
using oracle::ld;

namespace {

constexpr double pi = std::numbers::pi;

double max_abs_entry(const Mat2d& m)
{
    return std::max({std::abs(m(0, 0)), std::abs(m(0, 1)), std::abs(m(1, 0)), std::abs(m(1, 1))});
}

double max_codazzi(const SurfaceSpec& s, const CodazziField& f, const Grid& grid)
{
    double worst = 0.0;
    for (const auto& p : grid_points(s.domain, grid)) worst = std::max(worst, codazzi_residual(s, p.u, p.v, f));
    return worst;
}

// S = 2 A_H - kappa T (x) T_flat + (kappa |T|^2 / 2 - 2 |H|^2) I from oracle data.
oracle::M2 oracle_S(const oracle::Local& L, ld kappa)
{
    const auto H = L.H();
    const auto AH = L.shape(H);
    const auto T = L.T();
    const auto Tl = L.T_lower();
    const ld t2 = T[0] * Tl[0] + T[1] * Tl[1];
    const ld h2 = oracle::inner(*L.m, H, H);
    oracle::M2 S{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) S[a][b] = 2 * AH[a][b] - kappa * T[a] * Tl[b] + (a == b ? kappa * t2 / 2 - 2 * h2 : 0);
    return S;
}

CodazziField constant_field(double a, double b)
{
    auto fn = [a, b](const GeomPoint&) {
        Mat2j m;
        m(0, 0) = Jet2::constant(a);
        m(0, 1) = m(1, 0) = Jet2::constant(0.0);
        m(1, 1) = Jet2::constant(b);
        return m;
    };
    return {FieldKind::custom, "constant", fn};
}

} // namespace

TEST_SUITE("codazzi")
{
    TEST_CASE("operator S on the circle cylinder r = pi/4")
    {
        const SurfaceSpec s = instantiate("circle_cylinder", {{"kappa", 1.0}, {"r", pi / 4}});
        const GeomPoint gp = evaluate_chart(s, 1.0, 0.3);
        const Mat2d S = operator_S(gp, 1.0);
        CHECK(std::abs(S.trace()) < 1e-12);
        CHECK(S.det() == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK((S * S).trace() == doctest::Approx(2.0).epsilon(1e-12));
        // principal basis: d_u horizontal, d_v = T
        CHECK(S(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(S(1, 1) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(self_adjoint_defect(S, gp.metric()) < 1e-12);
    }

    TEST_CASE("operator S rejects minimal points")
    {
        const GeomPoint gp = evaluate_chart(instantiate("slice"), 1.0, 1.0);
        CHECK_THROWS_AS((void)operator_S(gp, 1.0), MinimalSurfaceError);
        CHECK_THROWS_AS((void)operator_S_jet(gp), MinimalSurfaceError);
    }

    TEST_CASE("operator S~ examples")
    {
        const GeomPoint sl = evaluate_chart(instantiate("slice", {{"kappa", -1.0}}), 1.0, 1.0);
        CHECK(max_abs_entry(operator_S_tilde(sl)) < 1e-15);

        const GeomPoint vc = evaluate_chart(instantiate("vertical_geodesic_cylinder"), 0.5, 0.2);
        const Mat2d St = operator_S_tilde(vc);
        CHECK(St.det() == doctest::Approx(-0.25).epsilon(1e-13));
        // T = d_v is an eigenvector of eigenvalue -|T|^2/2
        CHECK(St(1, 1) == doctest::Approx(-0.5).epsilon(1e-13));
        CHECK(std::abs(St(0, 1)) < 1e-14);

        // kappa S~ equals the S formula without its H terms
        for (double kappa : {1.0, 2.0}) {
            const SurfaceSpec s = instantiate("cor32_flat_minimal", {{"kappa", kappa}, {"theta", 0.6}});
            const GeomPoint gp = evaluate_chart(s, 0.3, 0.4);
            const Mat2d t = operator_S_tilde(gp);
            const double t2 = gp.t_norm() * gp.t_norm();
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const double formula = -kappa * gp.T[a].value() * gp.T_lower[b].value() + (a == b ? kappa * t2 / 2 : 0.0);
                    CHECK(std::abs(kappa * t(a, b) - formula) < 1e-12);
                }
            }
        }
    }

    TEST_CASE("Codazzi certification on a 33 x 33 grid")
    {
        const Grid grid{33, 33, 0.02};
        const auto timed = [&](const SurfaceSpec& s, const CodazziField& f) {
            const auto t0 = std::chrono::steady_clock::now();
            const double r = max_codazzi(s, f, grid);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            CHECK(secs < 5.0);
            return r;
        };
        CHECK(timed(instantiate("circle_cylinder", {{"kappa", 1.0}, {"r", pi / 4}}), CodazziField::S()) < 1e-9);
        CHECK(timed(instantiate("circle_cylinder", {{"kappa", -1.0}, {"r", 0.3}}), CodazziField::S()) < 1e-9);
        CHECK(timed(instantiate("cor32_flat_minimal"), CodazziField::S_tilde()) < 1e-9);
        CHECK(timed(instantiate("vertical_geodesic_cylinder", {{"kappa", -1.0}}), CodazziField::S_tilde()) < 1e-9);
        CHECK(timed(instantiate("slice"), CodazziField::S_tilde()) < 1e-12);
        CHECK(timed(instantiate("helicoidal_torus"), CodazziField::S()) < 1e-9);
    }

    TEST_CASE("Codazzi residual agrees with a finite-difference covariant derivative")
    {
        struct Case {
            SurfaceSpec s;
            oracle::Chart chart;
            ld kappa;
            bool nonzero;
        };
        const std::vector<Case> cases{
            {instantiate("circle_cylinder", {{"kappa", 1.0}, {"r", pi / 4}}), oracle::circle_cylinder(1, pi / 4), 1, false},
            {instantiate("perturbed_control", {{"kappa", 1.0}, {"delta", 0.1}}), oracle::circle_cylinder(1, pi / 4, 2, 0.1L), 1, true},
            {instantiate("perturbed_control", {{"kappa", -1.0}, {"r", 0.5}, {"delta", 0.2}}),
             oracle::circle_cylinder(-1, 0.5L, 2, 0.2L), -1, true},
        };
        const ld e = 1e-4L;
        for (const auto& c : cases) {
            const auto m = oracle::model(c.kappa, 2);
            const auto field = [&](ld x, ld y) { return oracle::flat(oracle_S(oracle::local(m, c.chart, x, y, e), c.kappa)); };
            const auto metric = [&](ld x, ld y) { return oracle::flat(oracle::local(m, c.chart, x, y, e).g); };
            const double u = 1.3, v = 0.8;
            const double lib = codazzi_residual(c.s, u, v, CodazziField::S());
            const double fd1 = static_cast<double>(oracle::codazzi_fd(field, metric, u, v, 2e-2L));
            const double fd2 = static_cast<double>(oracle::codazzi_fd(field, metric, u, v, 1e-2L));
            if (c.nonzero) {
                CHECK(lib > 1e-3);
                CHECK(fd2 > 1e-3);
                const double e1 = std::abs(lib - fd1), e2 = std::abs(lib - fd2);
                CHECK(e2 < 1e-2 * lib);
                CHECK(std::log2(e1 / e2) > 1.8);
            } else {
                CHECK(lib < 1e-9);
                CHECK(fd2 < 1e-5);
            }
        }
    }

    TEST_CASE("Simons identities on catalog surfaces")
    {
        const auto check_at = [](const SurfaceSpec& s, const CodazziField& f, double expected_norm) {
            for (const auto& p : grid_points(s.domain, Grid{9, 9, 0.05})) {
                const auto r = simons_residuals(s, p.u, p.v, f);
                CHECK(r.norm == doctest::Approx(expected_norm).epsilon(1e-10));
                CHECK(r.r_eq4 < 1e-8);
                REQUIRE(r.r_eq6.has_value());
                CHECK(*r.r_eq6 < 1e-8);
                CHECK(*r.r_eq5 < 1e-8);
            }
        };
        check_at(instantiate("circle_cylinder", {{"kappa", 1.0}, {"r", pi / 4}}), CodazziField::S(), std::sqrt(2.0));
        check_at(instantiate("vertical_geodesic_cylinder"), CodazziField::S_tilde(), 1.0 / std::sqrt(2.0));
        // |S~| = |T|^2 / sqrt 2 with |T| = sin theta
        check_at(instantiate("cor32_flat_minimal", {{"kappa", 1.0}, {"theta", pi / 3}}), CodazziField::S_tilde(),
                 0.75 / std::sqrt(2.0));
    }

    TEST_CASE("Simons on a flat chart with the quadratic differential z dz^2")
    {
        // Chart (2u, 2v): g = 4 I, S = Re(z dz^2) / 4, |S|^2 = (u^2 + v^2) / 8.
        // 1/2 Lap |S|^2 = |nabla S|^2 = 1/16 while |grad |S||^2 = 1/32.
        const SurfaceSpec s = instantiate("conformal_slice", {{"kappa", 0.0}});
        const auto f = CodazziField::quadratic_differential({0.0, 1.0});
        const double u = 0.3, v = -0.4;
        const GeomPoint gp = evaluate_chart(s, u, v);
        const Mat2j S = f.matrix_jet(gp);
        CHECK(codazzi_residual(gp, S) < 1e-14);
        const auto r = simons_residuals(gp, S);
        CHECK(r.norm * r.norm == doctest::Approx((u * u + v * v) / 8).epsilon(1e-13));
        CHECK(r.grad_S_sq == doctest::Approx(1.0 / 16).epsilon(1e-13));
        REQUIRE(r.grad_abs_S_sq.has_value());
        CHECK(*r.grad_abs_S_sq == doctest::Approx(1.0 / 32).epsilon(1e-13));
        CHECK(r.r_eq4 < 1e-14);
        CHECK(*r.r_eq5 < 1e-14);
        CHECK(*r.r_eq6 < 1e-12);
    }

    TEST_CASE("Simons and metric change for holomorphic quadratic differentials on curved slices")
    {
        const auto f = CodazziField::quadratic_differential({{0.3, 0.1}, {0.0, 0.0}, {1.0, -0.5}});
        for (double kappa : {1.0, -1.0}) {
            const SurfaceSpec s = instantiate("conformal_slice", {{"kappa", kappa}});
            for (const auto& p : grid_points(s.domain, Grid{7, 7, 0.05})) {
                const GeomPoint gp = evaluate_chart(s, p.u, p.v);
                const Mat2j S = f.matrix_jet(gp);
                CHECK(codazzi_residual(gp, S) < 1e-10);
                CHECK(std::abs(values(S).trace()) < 1e-13);
                const auto r = simons_residuals(gp, S);
                CHECK(r.r_eq4 < 1e-8);
                if (r.norm > kSimonsFloor) CHECK(*r.r_eq6 < 1e-7);
                if (std::abs(values(S).det()) > kSingularFloor) {
                    const auto mc = metric_change(gp, S);
                    CHECK(mc.residual < 1e-8);
                    CHECK(mc.inverse_codazzi < 1e-8);
                    CHECK(mc.connection_residual < 1e-8);
                    CHECK(mc.K_tilde == doctest::Approx(gauss_curvature_riemann(mc.gS)).epsilon(1e-8));
                }
            }
        }
    }

    TEST_CASE("Simons residuals refuse fields below the floor")
    {
        const SurfaceSpec s = instantiate("slice");
        CHECK_THROWS_AS((void)simons_residuals(s, 1.0, 1.0, CodazziField::S_tilde()), SingularOperatorError);
        const auto r = simons_residuals(evaluate_chart(s, 1.0, 1.0), operator_S_tilde_jet(evaluate_chart(s, 1.0, 1.0)));
        CHECK_FALSE(r.r_eq6.has_value());
    }

    TEST_CASE("norm and determinant of traceless self-adjoint operators")
    {
        Mat2d d;
        d(0, 0) = 1;
        d(1, 1) = -1;
        CHECK(s_norm_det_identity(d, Mat2d::identity()) == 0.0);
        CHECK(s_norm_det_identity(Mat2d{}, Mat2d::identity()) == 0.0);
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int k = 0; k < 50; ++k) {
            Mat2d g;
            g(0, 0) = 1.5 + dist(rng);
            g(1, 1) = 1.5 + dist(rng);
            g(0, 1) = g(1, 0) = 0.4 * dist(rng);
            Mat2d b;
            b(0, 0) = dist(rng);
            b(1, 1) = dist(rng);
            b(0, 1) = b(1, 0) = dist(rng);
            Mat2d S = g.inverse() * b; // g-self-adjoint
            const double half = S.trace() / 2;
            S(0, 0) -= half;
            S(1, 1) -= half;
            CHECK(s_norm_det_identity(S, g) < 1e-12);
        }
    }

    TEST_CASE("metric change on catalog surfaces")
    {
        const auto check = [](const SurfaceSpec& s, const CodazziField& f, double det) {
            for (const auto& p : grid_points(s.domain, Grid{7, 7, 0.05})) {
                const auto mc = metric_change(s, p.u, p.v, f);
                CHECK(mc.det_S == doctest::Approx(det).epsilon(1e-12));
                CHECK(mc.residual < 1e-8);
                CHECK(std::abs(mc.K_tilde) < 1e-8);
                CHECK(mc.positive_definite);
                CHECK(mc.inverse_codazzi < 1e-9);
            }
        };
        check(instantiate("circle_cylinder", {{"kappa", 1.0}, {"r", pi / 4}}), CodazziField::S(), -1.0);
        check(instantiate("vertical_geodesic_cylinder"), CodazziField::S_tilde(), -0.25);

        // constant diag(2, -2) on a flat chart: g_S is a constant multiple of g
        const SurfaceSpec flat = instantiate("conformal_slice", {{"kappa", 0.0}});
        const auto mc = metric_change(flat, 0.2, 0.1, constant_field(2.0, -2.0));
        CHECK(mc.det_S == -4.0);
        CHECK(std::abs(mc.K_tilde) < 1e-14);
        CHECK(values(mc.gS)(0, 0) == doctest::Approx(16.0));

        CHECK_THROWS_AS((void)metric_change(instantiate("slice"), 1.0, 1.0, CodazziField::S_tilde()), SingularOperatorError);
    }
}
