#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "pmc/catalog.hpp"
#include "pmc/errors.hpp"
#include "pmc/identities.hpp"
#include "pmc/spaceform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace pmc;
using oracle::ld;

namespace {

constexpr double pi = std::numbers::pi;

const ResidualReport* find(const std::vector<ResidualReport>& rs, const std::string& id)
{
    for (const auto& r : rs)
        if (r.identity_id == id) return &r;
    return nullptr;
}

struct OracleCase {
    SurfaceSpec s;
    oracle::Chart chart;
    ld kappa;
    int n;
};

std::vector<OracleCase> non_pmc_cases()
{
    return {
        {instantiate("perturbed_control", {{"kappa", 1.0}, {"delta", 0.1}}), oracle::circle_cylinder(1, pi / 4, 2, 0.1L), 1, 2},
        {instantiate("perturbed_control", {{"kappa", -1.0}, {"r", 0.5}, {"delta", 0.2}, {"n", 3.0}}),
         oracle::circle_cylinder(-1, 0.5L, 3, 0.2L), -1, 3},
        {instantiate("perturbed_control", {{"kappa", 2.0}, {"r", 0.4}, {"delta", 0.3}}),
         oracle::circle_cylinder(2, 0.4L, 2, 0.3L), 2, 2},
    };
}

} // namespace

TEST_SUITE("identities")
{
    TEST_CASE("curvature formula: hand expansion on the circle cylinder r = pi/4 in S^2 x R")
    {
        // S = diag(1, -1), det S = -1, |S|^2 = 2, |H| = 1/2, |T| = 1, <S T, T> = -1, K = 0
        const SurfaceSpec s = instantiate("circle_cylinder", {{"kappa", 1.0}, {"r", pi / 4}});
        const auto t = curvature_formula_terms(evaluate_chart(s, 0.9, -0.4));
        CHECK(std::abs(t.kappa_term - 0.0) < 1e-12);
        CHECK(std::abs(t.H_sq - 0.25) < 1e-12);
        CHECK(std::abs(t.S_term - (-1.0)) < 1e-12);
        CHECK(std::abs(t.T4_term - (-0.25)) < 1e-12);
        CHECK(std::abs(t.ST_term - 1.0) < 1e-12);
        CHECK(std::abs(t.aux_det) < 1e-12);
        CHECK(std::abs(t.K) < 1e-12);
        CHECK(std::abs(t.rhs() - t.K) < 1e-12);
    }

    TEST_CASE("curvature formula on the cylinders and on non-PMC surfaces")
    {
        for (const auto& p : std::vector<Params>{{{"kappa", 1.0}, {"r", pi / 4}}, {{"kappa", -1.0}, {"r", 0.3}},
                                                 {{"kappa", 1.0}, {"r", pi / 8}, {"n", 4.0}}}) {
            const SurfaceSpec s = instantiate("circle_cylinder", p);
            for (const auto& g : grid_points(s.domain, Grid{9, 9, 0.02}))
                CHECK(curvature_formula_residual(s, g.u, g.v) < 1e-9);
        }
        // the formula is a pointwise consequence of the Gauss equation
        for (const auto& c : non_pmc_cases()) CHECK(curvature_formula_residual(c.s, 1.1, 0.7) < 1e-9);
        CHECK_THROWS_AS((void)curvature_formula_residual(instantiate("slice"), 1.0, 1.0), MinimalSurfaceError);
    }

    TEST_CASE("ambient Codazzi equation: orientation fixed by a finite-difference oracle")
    {
        const ld e = 1e-4L, h = 1e-2L;
        for (const auto& c : non_pmc_cases()) {
            const auto m = oracle::model(c.kappa, c.n);
            const double u = 1.2, v = 0.6;
            const GeomPoint gp = evaluate_chart(c.s, u, v);
            const auto L = oracle::local(m, c.chart, u, v, e);
            for (const auto& xi0 : gp.xi) {
                const oracle::V x0(xi0.begin(), xi0.end());
                // xi extended off the point as the normal part of the projected constant vector
                const auto xi_at = [&](ld x, ld y) { return oracle::local(m, c.chart, x, y, e).normal_part(x0); };
                const auto A_at = [&](ld x, ld y) {
                    return oracle::flat(oracle::local(m, c.chart, x, y, e).shape(xi_at(x, y)));
                };
                const auto metric = [&](ld x, ld y) { return oracle::flat(oracle::local(m, c.chart, x, y, e).g); };
                const auto gam = oracle::christoffel(metric, u, v, h);
                const auto M = oracle::unflat(A_at(u, v));
                const auto Mu = oracle::unflat(oracle::d1(A_at, u, v, 0, h));
                const auto Mv = oracle::unflat(oracle::d1(A_at, u, v, 1, h));
                const auto Adu = L.shape(L.normal_part(oracle::d1(xi_at, u, v, 0, h)));
                const auto Adv = L.shape(L.normal_part(oracle::d1(xi_at, u, v, 1, h)));
                // lhs = (nabla_u A)(d_v, xi) - (nabla_v A)(d_u, xi)
                std::array<ld, 2> lhs{};
                for (int k = 0; k < 2; ++k) {
                    ld acc = Mu[k][1] - Mv[k][0] - Adu[k][1] + Adv[k][0];
                    for (int j = 0; j < 2; ++j) acc += gam[k][0][j] * M[j][1] - gam[k][1][j] * M[j][0];
                    lhs[k] = acc;
                }
                const auto Tl = L.T_lower();
                const ld coef = c.kappa * oracle::inner(m, x0, L.eta());
                const std::array<ld, 2> rhs{coef * Tl[1], -coef * Tl[0]};
                const auto gnorm = [&](std::array<ld, 2> w) {
                    return std::sqrt(static_cast<double>(L.g[0][0] * w[0] * w[0] + 2 * L.g[0][1] * w[0] * w[1] +
                                                         L.g[1][1] * w[1] * w[1]));
                };
                const double diff = gnorm({lhs[0] - rhs[0], lhs[1] - rhs[1]});
                const double sum = gnorm({lhs[0] + rhs[0], lhs[1] + rhs[1]});
                const double size = gnorm(rhs);
                if (size > 1e-2) CHECK(sum > size); // the opposite orientation is far off
                CHECK(diff < 1e-4);
                CHECK(ambient_codazzi_residual(gp, xi0) < 1e-9);
            }
        }
    }

    TEST_CASE("ambient Codazzi examples")
    {
        const GeomPoint sl = evaluate_chart(instantiate("slice"), 1.0, 1.0);
        for (const auto& xi : sl.xi) CHECK(ambient_codazzi_residual(sl, xi) < 1e-12);
        const SurfaceSpec cc = instantiate("circle_cylinder");
        for (const auto& g : grid_points(cc.domain, Grid{7, 7, 0.02})) CHECK(ambient_codazzi_residual(cc, g.u, g.v, evaluate_chart(cc, g.u, g.v).xi[0]) < 1e-9);
        const GeomPoint c32 = evaluate_chart(instantiate("cor32_flat_minimal"), 0.5, 0.5);
        CHECK(ambient_codazzi_residual(c32) < 1e-8);
    }

    TEST_CASE("Laplacian of |T|^2 needs every normal direction")
    {
        for (const auto& c : non_pmc_cases()) {
            const auto m = oracle::model(c.kappa, c.n);
            const double u = 0.8, v = 1.9;
            const GeomPoint gp = evaluate_chart(c.s, u, v);
            const auto t = t_laplacian_terms(gp);
            // oracle: divergence-form Laplacian of |T|^2 from chart differences
            const ld e = 1e-4L;
            const auto t2 = [&](ld x, ld y) {
                const auto L = oracle::local(m, c.chart, x, y, e);
                const auto T = L.T();
                const auto Tl = L.T_lower();
                return oracle::V{T[0] * Tl[0] + T[1] * Tl[1]};
            };
            const auto metric = [&](ld x, ld y) { return oracle::flat(oracle::local(m, c.chart, x, y, e).g); };
            const double fd = 0.5 * static_cast<double>(oracle::laplace_divergence(t2, metric, u, v, 1e-2L));
            CHECK(std::abs(t.lhs - fd) < 1e-3 * std::max(1.0, std::abs(t.lhs)));
            CHECK(t_laplacian_residual(gp) < 1e-9);
            // dropping A_1 T, the mean-curvature direction, leaves a visible gap
            CHECK(std::abs(t.lhs - (t.A_eta_sq + t.kappa_term - t.sum_aux + t.pmc_term)) > 1e-3);
        }
        // term-by-term zeros
        CHECK(t_laplacian_residual(instantiate("slice"), 1.0, 1.0) < 1e-12);
        CHECK(t_laplacian_residual(instantiate("vertical_geodesic_cylinder"), 1.0, 0.0) < 1e-10);
        CHECK(t_laplacian_residual(instantiate("circle_cylinder"), 1.0, 0.0) < 1e-9);
    }

    TEST_CASE("parallel mean curvature")
    {
        CHECK(pmc_residual(instantiate("circle_cylinder")).max_abs < 1e-9);
        CHECK(pmc_residual(instantiate("helicoidal_torus")).max_abs < 1e-9);
        const auto bad = pmc_residual(instantiate("perturbed_control"));
        CHECK(bad.max_abs > 1e-3);
        CHECK_FALSE(bad.passed);
        CHECK(pmc_residual(instantiate("helicoidal_torus", {{"pitch", 0.3}})).max_abs > 1e-3);
        const auto sl = pmc_residual(instantiate("slice"));
        CHECK(sl.max_abs < 1e-15);
        REQUIRE_FALSE(sl.warnings.empty());
        CHECK(sl.warnings.front().find("minimal") != std::string::npos);
    }

    TEST_CASE("mu vanishes for hypersurfaces and totally geodesic paddings")
    {
        CHECK(mu_estimate(instantiate("circle_cylinder")).mu < 1e-10);
        CHECK(mu_estimate(instantiate("circle_cylinder", {{"kappa", -1.0}, {"r", 0.3}})).mu < 1e-10);
        CHECK(mu_estimate(instantiate("circle_cylinder", {{"n", 4.0}})).mu < 1e-9);
        // Clifford torus: the vertical normal carries no curvature
        CHECK(mu_estimate(instantiate("helicoidal_torus")).mu < 1e-10);
        CHECK(mu_estimate(instantiate("helicoidal_torus", {{"pitch", 0.3}})).mu < 1e-10);
        CHECK(mu_estimate(fixtures::torus_orbit(5)).mu > 1e-2);
        CHECK_THROWS_AS((void)mu_integrand(evaluate_chart(instantiate("cor32_flat_minimal"), 0.1, 0.1)), MinimalSurfaceError);
        const SurfaceSpec ht = fixtures::torus_orbit(6);
        for (const auto& g : grid_points(ht.domain, Grid{6, 6, 0.02}))
            CHECK(mu_identity_residual(evaluate_chart(ht, g.u, g.v)) < 1e-9);
    }

    TEST_CASE("frame invariance of the auxiliary terms")
    {
        std::mt19937 rng(17);
        const std::vector<SurfaceSpec> surfaces{
            fixtures::torus_orbit(5),
            fixtures::torus_orbit(6),
            instantiate("cor32_flat_minimal", {{"n", 4.0}}),
            instantiate("cor32_flat_minimal", {{"n", 5.0}, {"theta", 1.0}}),
            instantiate("circle_cylinder", {{"n", 4.0}}),
            instantiate("perturbed_control", {{"n", 4.0}, {"kappa", -1.0}}),
        };
        for (const auto& s : surfaces) {
            CAPTURE(s.catalog_id);
            const GeomPoint gp = evaluate_chart(s, 0.7 * s.domain.u1 + 0.3 * s.domain.u0, 0.4 * s.domain.v1 + 0.6 * s.domain.v0);
            REQUIRE(gp.xi.size() >= 3);
            const double base_det = sum_det_aux(gp);
            const double base_sq = fixtures::aux_norm_sq(gp, gp.xi);
            if (s.catalog_id != "circle_cylinder" && s.catalog_id != "perturbed_control") CHECK(std::abs(base_det) > 1e-3);
            if (!gp.minimal()) CHECK(std::abs(base_sq - mu_integrand(gp)) < 1e-10);
            for (int k = 0; k < 10; ++k) {
                const auto frame = fixtures::rotate_aux(gp.xi, rng);
                CHECK(std::abs(sum_det_aux(gp, frame) - base_det) < 1e-10);
                CHECK(std::abs(fixtures::aux_norm_sq(gp, frame) - base_sq) < 1e-10);
            }
        }
    }

    TEST_CASE("structural identities on every catalog entry")
    {
        for (const auto& e : catalog_list()) {
            CAPTURE(e.id);
            const SurfaceSpec s = instantiate(e.id);
            for (const auto& g : grid_points(s.domain, Grid{6, 6, 0.05})) {
                const GeomPoint gp = evaluate_chart(s, g.u, g.v);
                CHECK(gauss_equation_residual(gp) < 1e-8);
                CHECK(ambient_codazzi_residual(gp) < 1e-8);
                const auto tf = t_field_residuals(gp);
                CHECK(tf.tangent < 1e-9);
                CHECK(tf.normal < 1e-9);
                CHECK(trace_A_eta_residual(gp) < 1e-10);
                CHECK(t_laplacian_residual(gp) < 1e-9);
            }
        }
        CHECK(gauss_equation_residual(instantiate("slice"), 0.5, 0.5) < 1e-10);
        // high codimension with curved auxiliary directions
        const SurfaceSpec orbit = fixtures::torus_orbit(6);
        for (const auto& g : grid_points(orbit.domain, Grid{5, 5, 0.05})) {
            const GeomPoint gp = evaluate_chart(orbit, g.u, g.v);
            CHECK(std::abs(curvature_formula_terms(gp).aux_det) > 1e-3);
            CHECK(curvature_formula_residual(gp) < 1e-9);
            CHECK(gauss_equation_residual(gp) < 1e-8);
            CHECK(ambient_codazzi_residual(gp) < 1e-8);
            CHECK(t_laplacian_residual(gp) < 1e-9);
            CHECK(mu_identity_residual(gp) < 1e-9);
        }
    }

    TEST_CASE("tolerance overrides")
    {
        CHECK(identity_ids().size() == default_tolerances().size());
        const auto merged = merge_tolerances({{"pmc", 0.5}});
        CHECK(merged.at("pmc") == 0.5);
        CHECK(merged.at("codazzi_S") == default_tolerances().at("codazzi_S"));
        CHECK_THROWS_AS(merge_tolerances({{"nonsense", 1.0}}), InvalidArgument);
        CHECK_THROWS_AS(merge_tolerances({{"pmc", 0.0}}), InvalidArgument);
    }

    TEST_CASE("suite composition follows the minimality class")
    {
        const auto minimal = run_identity_suite(instantiate("slice", {{"kappa", -1.0}}));
        CHECK(find(minimal, ids::codazzi_S) == nullptr);
        CHECK(find(minimal, ids::pmc) == nullptr);
        REQUIRE(find(minimal, ids::codazzi_S_tilde) != nullptr);
        // S~ = 0 on a slice: the log identities are skipped everywhere
        CHECK(find(minimal, ids::simons_eq6_S_tilde) == nullptr);
        const auto& logged = find(minimal, ids::simons_eq4_S_tilde)->warnings;
        REQUIRE(logged.size() == 2);
        CHECK(logged[0] == "simons_eq5_S_tilde skipped at all 1089 points: |S| <= 1e-06");
        CHECK(logged[1] == "simons_eq6_S_tilde skipped at all 1089 points: |S| <= 1e-06");
        for (const auto& r : minimal) CHECK(r.passed);

        const auto cyl = run_identity_suite(instantiate("circle_cylinder"));
        for (const char* id : {ids::codazzi_S, ids::simons_eq4_S, ids::simons_eq6_S, ids::metric_change_S, ids::pmc,
                               ids::curvature_formula, ids::mu_identity, ids::gauss_equation, ids::constraint})
            CHECK(find(cyl, id) != nullptr);
        CHECK(find(cyl, ids::codazzi_S_tilde) == nullptr);
        for (const auto& r : cyl) {
            CHECK(r.passed);
            CHECK(r.nu == 33);
            CHECK(r.nv == 33);
        }
        CHECK(find(run_identity_suite(instantiate("circle_cylinder", {{"kappa", 0.0}})), ids::constraint) == nullptr);
    }

    TEST_CASE("every exact catalog surface passes its full suite")
    {
        for (const auto& e : catalog_list()) {
            if (e.id == "perturbed_control") continue;
            CAPTURE(e.id);
            for (double kappa : {1.0, -1.0}) {
                Params p{{"kappa", kappa}};
                try {
                    (void)resolve_params(e.id, p);
                } catch (const InvalidArgument&) {
                    continue;
                }
                for (const auto& r : run_identity_suite(instantiate(e.id, p), Grid{17, 17, 0.02})) {
                    CAPTURE(r.identity_id);
                    CHECK(r.passed);
                }
            }
        }
    }

    TEST_CASE("negative control")
    {
        const auto rs = run_identity_suite(instantiate("perturbed_control"));
        REQUIRE(find(rs, ids::pmc) != nullptr);
        CHECK(find(rs, ids::pmc)->max_abs > 1e-3);
        CHECK(find(rs, ids::codazzi_S)->max_abs > 1e-3);
        CHECK_FALSE(find(rs, ids::codazzi_S)->passed);
        CHECK(find(rs, ids::gauss_equation)->max_abs < 1e-8);
        CHECK(find(rs, ids::ambient_codazzi)->max_abs < 1e-8);
        CHECK(find(rs, ids::t_laplacian)->passed);
        CHECK(find(rs, ids::curvature_formula)->passed);
    }
}
