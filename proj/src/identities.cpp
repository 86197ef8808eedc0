#include "pmc/identities.hpp"

#include "pmc/errors.hpp"
#include "pmc/spaceform.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace pmc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Var var_of(int a) { return a == 0 ? Var::u : Var::v; }

std::size_t sz(int a) { return static_cast<std::size_t>(a); }

double flat_norm(const AmbientModel& m, const Vec& x) { return std::sqrt(std::max(0.0, flat_inner(m, x, x))); }

std::array<double, 2> t_values(const GeomPoint& gp) { return {gp.T[0].value(), gp.T[1].value()}; }

void require_non_minimal(const GeomPoint& gp, const char* what)
{
    if (!gp.minimal()) return;
    std::ostringstream os;
    os << what << " needs a non-minimal point, |H| = " << gp.H_norm;
    throw MinimalSurfaceError(os.str());
}

Vec combine(double a, const Vec& x, double b, const Vec& y)
{
    Vec out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = a * x[k] + b * y[k];
    return out;
}

// (X ^ Y) W = <Y, W> X - <X, W> Y, all in chart components.
std::array<double, 2> wedge(const Mat2d& g, const std::array<double, 2>& x, const std::array<double, 2>& y,
                            const std::array<double, 2>& w)
{
    const double yw = bilinear(g, y, w);
    const double xw = bilinear(g, x, w);
    return {yw * x[0] - xw * y[0], yw * x[1] - xw * y[1]};
}

} // namespace

ResidualReport make_report(std::string id, const std::vector<GridPoint>& pts, const Grid& grid,
                           const std::vector<double>& values, double tolerance)
{
    ResidualReport r;
    r.identity_id = std::move(id);
    r.nu = grid.nu;
    r.nv = grid.nv;
    r.tolerance = tolerance;
    const Reduction red = reduce_abs(values);
    r.max_abs = red.max_abs;
    r.mean_abs = red.mean_abs;
    if (!pts.empty()) {
        r.argmax_u = pts[red.argmax].u;
        r.argmax_v = pts[red.argmax].v;
    }
    r.passed = red.max_abs <= tolerance;
    if (red.count < values.size()) {
        std::ostringstream os;
        os << "skipped at " << (values.size() - red.count) << " of " << values.size() << " points";
        r.warnings.push_back(os.str());
    }
    return r;
}

double ambient_codazzi_residual(const GeomPoint& gp, const Vec& xi0)
{
    const JetVec xi = extend_normal(gp, xi0);
    const Mat2j A = shape_operator_jet(gp, xi);
    const auto nabla = covariant_derivative(A, gp.gamma);
    const Mat2d A_du = shape_operator(gp, normal_connection_derivative(gp, xi, Var::u));
    const Mat2d A_dv = shape_operator(gp, normal_connection_derivative(gp, xi, Var::v));

    // (nabla_X A)(Y, xi) - (nabla_Y A)(X, xi) with X = d_u, Y = d_v
    std::array<double, 2> lhs{};
    for (int c = 0; c < 2; ++c) {
        lhs[sz(c)] = (nabla[0](c, 1) - A_du(c, 1)) - (nabla[1](c, 0) - A_dv(c, 0));
    }
    const double xe = flat_inner(gp.ambient, xi0, values(gp.eta));
    const double k = gp.ambient.kappa * xe;
    const std::array<double, 2> rhs{k * gp.T_lower[1].value(), -k * gp.T_lower[0].value()};
    return tangent_norm(gp.metric(), {lhs[0] - rhs[0], lhs[1] - rhs[1]});
}

double ambient_codazzi_residual(const SurfaceSpec& s, double u, double v, const Vec& xi)
{
    return ambient_codazzi_residual(evaluate_chart(s, u, v), xi);
}

double ambient_codazzi_residual(const GeomPoint& gp)
{
    double worst = 0.0;
    for (const auto& x : gp.xi) worst = std::max(worst, ambient_codazzi_residual(gp, x));
    return worst;
}

CurvatureFormulaTerms curvature_formula_terms(const GeomPoint& gp)
{
    require_non_minimal(gp, "curvature formula");
    const double kappa = gp.ambient.kappa;
    const double h2 = gp.H_norm_sq.value();
    const double t2 = gp.T_norm_sq.value();
    const Mat2d S = operator_S(gp, kappa);
    const auto T = t_values(gp);
    const double st_t = bilinear(gp.metric(), mat_apply(S, T), T);

    CurvatureFormulaTerms c;
    c.K = gp.K.value();
    c.kappa_term = kappa * (1.0 - t2);
    c.H_sq = h2;
    c.S_term = -(S * S).trace() / (8.0 * h2);
    c.T4_term = -kappa * kappa * t2 * t2 / (16.0 * h2);
    c.ST_term = -kappa * st_t / (4.0 * h2);
    c.aux_det = sum_det_aux(gp);
    return c;
}

double curvature_formula_residual(const GeomPoint& gp)
{
    const auto c = curvature_formula_terms(gp);
    return std::abs(c.K - c.rhs());
}

double curvature_formula_residual(const SurfaceSpec& s, double u, double v)
{
    return curvature_formula_residual(evaluate_chart(s, u, v));
}

TLaplacianTerms t_laplacian_terms(const GeomPoint& gp)
{
    TLaplacianTerms t;
    const Mat2d g = gp.metric();
    const double t2 = gp.T_norm_sq.value();
    t.lhs = 0.5 * laplace_beltrami(gp.T_norm_sq, gp);
    const Mat2d A_eta = values(shape_operator_jet(gp, gp.eta));
    t.A_eta_sq = (A_eta * A_eta).trace();
    t.kappa_term = gp.ambient.kappa * t2 * (1.0 - t2);

    const auto T = t_values(gp);
    for (std::size_t i = 0; i < gp.A.size(); ++i) {
        const auto at = mat_apply(gp.A[i], T);
        const double q = bilinear(g, at, at);
        t.sum_all += q;
        if (i > 0 || gp.minimal()) t.sum_aux += q;
    }

    const Vec dH_u = normal_part(gp, values(derivative(gp.H, Var::u)));
    const Vec dH_v = normal_part(gp, values(derivative(gp.H, Var::v)));
    t.pmc_term = 2.0 * flat_inner(gp.ambient, combine(T[0], dH_u, T[1], dH_v), values(gp.eta));
    return t;
}

double t_laplacian_residual(const GeomPoint& gp)
{
    const auto t = t_laplacian_terms(gp);
    return std::abs(t.lhs - (t.A_eta_sq + t.kappa_term - t.sum_all + t.pmc_term));
}

double t_laplacian_residual(const SurfaceSpec& s, double u, double v)
{
    return t_laplacian_residual(evaluate_chart(s, u, v));
}

double pmc_pointwise(const GeomPoint& gp)
{
    double worst = 0.0;
    for (int a = 0; a < 2; ++a) {
        const Vec d = normal_part(gp, values(derivative(gp.H, var_of(a))));
        worst = std::max(worst, flat_norm(gp.ambient, d));
    }
    return worst;
}

ResidualReport pmc_residual(const SurfaceSpec& s, const Grid& grid, Execution ex)
{
    const auto pts = grid_points(s.domain, grid);
    struct Sample {
        double value = 0.0;
        bool minimal = false;
    };
    const auto samples = sweep(
        pts,
        [&](const GridPoint& p) {
            const GeomPoint gp = evaluate_chart(s, p.u, p.v);
            return Sample{pmc_pointwise(gp), gp.minimal()};
        },
        ex);
    std::vector<double> vals;
    vals.reserve(samples.size());
    std::size_t minimal = 0;
    for (const auto& smp : samples) {
        vals.push_back(smp.value);
        if (smp.minimal) ++minimal;
    }
    ResidualReport r = make_report(ids::pmc, pts, grid, vals, default_tolerances().at(ids::pmc));
    if (minimal > 0) {
        std::ostringstream os;
        os << "minimal at " << minimal << " of " << pts.size() << " points";
        r.warnings.push_back(os.str());
    }
    return r;
}

double mu_integrand(const GeomPoint& gp)
{
    require_non_minimal(gp, "mu integrand");
    const Mat2d AH = values(shape_operator_H(gp));
    return alpha_norm_sq(gp) - (AH * AH).trace() / gp.H_norm_sq.value();
}

double mu_identity_residual(const GeomPoint& gp) { return std::abs(mu_integrand(gp) + 2.0 * sum_det_aux(gp)); }

MuEstimate mu_estimate(const SurfaceSpec& s, const Grid& grid, Execution ex)
{
    const auto pts = grid_points(s.domain, grid);
    const auto samples = sweep(
        pts,
        [&](const GridPoint& p) {
            const GeomPoint gp = evaluate_chart(s, p.u, p.v);
            return std::pair<double, double>{mu_integrand(gp), sum_det_aux(gp)};
        },
        ex);
    MuEstimate m;
    m.nu = grid.nu;
    m.nv = grid.nv;
    double min_det = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (k == 0 || samples[k].first > m.mu) {
            m.mu = samples[k].first;
            m.argmax_u = pts[k].u;
            m.argmax_v = pts[k].v;
        }
        if (k == 0 || samples[k].second < min_det) min_det = samples[k].second;
    }
    m.cross_check = std::abs(m.mu + 2.0 * min_det);
    return m;
}

double gauss_equation_residual(const GeomPoint& gp)
{
    const Mat2d g = gp.metric();
    const auto R = riemann_uvv(gp.gamma);
    const std::array<double, 2> X{1.0, 0.0};
    const std::array<double, 2> Y{0.0, 1.0};
    const auto T = t_values(gp);
    const double xt = gp.T_lower[0].value();
    const double yt = gp.T_lower[1].value();

    const auto w0 = wedge(g, X, Y, Y);
    const auto w1 = wedge(g, X, T, Y);
    const auto w2 = wedge(g, Y, T, Y);
    const double kappa = gp.ambient.kappa;

    const Mat2d ginv = values(gp.ginv);
    const auto shape_of = [&](const JetVec& nu) { return ginv * alpha_dot(gp, values(nu)); };
    const auto a1 = mat_apply(shape_of(gp.alpha[1][1]), X);
    const auto a2 = mat_apply(shape_of(gp.alpha[0][1]), Y);

    std::array<double, 2> diff{};
    for (int c = 0; c < 2; ++c) {
        const double rhs = kappa * (w0[sz(c)] - yt * w1[sz(c)] + xt * w2[sz(c)]) + a1[sz(c)] - a2[sz(c)];
        diff[sz(c)] = R[sz(c)] - rhs;
    }
    return tangent_norm(g, diff);
}

double gauss_equation_residual(const SurfaceSpec& s, double u, double v)
{
    return gauss_equation_residual(evaluate_chart(s, u, v));
}

TFieldResiduals t_field_residuals(const GeomPoint& gp)
{
    TFieldResiduals r;
    const Mat2d g = gp.metric();
    const Mat2d A_eta = values(shape_operator_jet(gp, gp.eta));
    for (int a = 0; a < 2; ++a) {
        // (nabla_a T)^c = d_a T^c + Gamma^c_ad T^d
        std::array<double, 2> d{};
        for (int c = 0; c < 2; ++c) {
            double acc = gp.T[sz(c)].derivative(var_of(a)).value();
            for (int e = 0; e < 2; ++e) acc += gp.gamma[sz(c)](a, e).value() * gp.T[sz(e)].value();
            d[sz(c)] = acc - A_eta(c, a);
        }
        r.tangent = std::max(r.tangent, tangent_norm(g, d));

        const Vec dn = normal_part(gp, values(derivative(gp.eta, var_of(a))));
        Vec at = combine(gp.T[0].value(), values(gp.alpha[sz(a)][0]), gp.T[1].value(), values(gp.alpha[sz(a)][1]));
        for (std::size_t k = 0; k < at.size(); ++k) at[k] += dn[k];
        r.normal = std::max(r.normal, flat_norm(gp.ambient, at));
    }
    return r;
}

double trace_A_eta_residual(const GeomPoint& gp)
{
    const Mat2d A_eta = values(shape_operator_jet(gp, gp.eta));
    return std::abs(A_eta.trace() - 2.0 * flat_inner(gp.ambient, values(gp.H), values(gp.eta)));
}

const std::vector<std::string>& identity_ids()
{
    static const std::vector<std::string> list{
        ids::constraint,        ids::gauss_equation,     ids::ambient_codazzi,    ids::t_field_tangent,
        ids::t_field_normal,    ids::trace_A_eta,        ids::t_laplacian,        ids::pmc,
        ids::codazzi_S,         ids::trace_S,            ids::s_norm_det_S,       ids::simons_eq4_S,
        ids::simons_eq5_S,      ids::simons_eq6_S,       ids::metric_change_S,    ids::inverse_codazzi_S,
        ids::curvature_formula, ids::mu_identity,        ids::codazzi_S_tilde,    ids::trace_S_tilde,
        ids::s_norm_det_S_tilde, ids::simons_eq4_S_tilde, ids::simons_eq5_S_tilde, ids::simons_eq6_S_tilde,
        ids::metric_change_S_tilde, ids::inverse_codazzi_S_tilde,
    };
    return list;
}

const std::map<std::string, double>& default_tolerances()
{
    static const std::map<std::string, double> tol{
        {ids::constraint, 1e-10},
        {ids::gauss_equation, 1e-8},
        {ids::ambient_codazzi, 1e-8},
        {ids::t_field_tangent, 1e-9},
        {ids::t_field_normal, 1e-9},
        {ids::trace_A_eta, 1e-10},
        {ids::t_laplacian, 1e-9},
        {ids::pmc, 1e-9},
        {ids::codazzi_S, 1e-9},
        {ids::codazzi_S_tilde, 1e-9},
        {ids::trace_S, 1e-10},
        {ids::trace_S_tilde, 1e-10},
        {ids::s_norm_det_S, 1e-10},
        {ids::s_norm_det_S_tilde, 1e-10},
        {ids::simons_eq4_S, 1e-7},
        {ids::simons_eq5_S, 1e-7},
        {ids::simons_eq6_S, 1e-7},
        {ids::simons_eq4_S_tilde, 1e-7},
        {ids::simons_eq5_S_tilde, 1e-7},
        {ids::simons_eq6_S_tilde, 1e-7},
        {ids::metric_change_S, 1e-8},
        {ids::metric_change_S_tilde, 1e-8},
        {ids::inverse_codazzi_S, 1e-9},
        {ids::inverse_codazzi_S_tilde, 1e-9},
        {ids::curvature_formula, 1e-9},
        {ids::mu_identity, 1e-9},
    };
    return tol;
}

std::map<std::string, double> merge_tolerances(const std::map<std::string, double>& overrides)
{
    auto tol = default_tolerances();
    for (const auto& [id, value] : overrides) {
        const auto it = tol.find(id);
        if (it == tol.end()) throw InvalidArgument("unknown identity id '" + id + "'");
        if (!(value > 0.0) || !std::isfinite(value)) throw InvalidArgument("tolerance for '" + id + "' must be positive");
        it->second = value;
    }
    return tol;
}

namespace {

constexpr std::size_t kIdentityCount = 26;

struct PointSample {
    std::array<double, kIdentityCount> r;
    PointSample() { r.fill(kNaN); }
};

std::size_t slot(const std::string& id)
{
    const auto& list = identity_ids();
    for (std::size_t k = 0; k < list.size(); ++k)
        if (list[k] == id) return k;
    throw InvalidArgument("unknown identity id '" + id + "'");
}

struct Slots {
    std::size_t codazzi, trace, norm_det, eq4, eq5, eq6, metric, inverse;
};

void operator_suite(PointSample& out, const GeomPoint& gp, const Mat2j& S, const Slots& sl)
{
    const Mat2d sv = values(S);
    out.r[sl.codazzi] = codazzi_residual(gp, S);
    out.r[sl.trace] = std::abs(sv.trace());
    out.r[sl.norm_det] = std::abs((sv * sv).trace() + 2.0 * sv.det());
    const SimonsResiduals sim = simons_residuals(gp, S);
    out.r[sl.eq4] = sim.r_eq4;
    if (sim.r_eq6) {
        out.r[sl.eq5] = *sim.r_eq5;
        out.r[sl.eq6] = *sim.r_eq6;
    }
    if (std::abs(sv.det()) > kSingularFloor) {
        const MetricChange mc = metric_change(gp, S);
        out.r[sl.metric] = mc.residual;
        out.r[sl.inverse] = mc.inverse_codazzi;
    }
}

std::string simons_host(const std::string& id)
{
    if (id == ids::simons_eq5_S || id == ids::simons_eq6_S) return ids::simons_eq4_S;
    if (id == ids::simons_eq5_S_tilde || id == ids::simons_eq6_S_tilde) return ids::simons_eq4_S_tilde;
    return {};
}

std::string fmt_floor()
{
    std::ostringstream os;
    os << kSimonsFloor;
    return os.str();
}

} // namespace

std::vector<ResidualReport> run_identity_suite(const SurfaceSpec& s, const Grid& grid,
                                               const std::map<std::string, double>& tol_overrides, Execution ex)
{
    const auto tol = merge_tolerances(tol_overrides);
    const auto pts = grid_points(s.domain, grid);
    if (identity_ids().size() != kIdentityCount) throw std::logic_error("identity table size mismatch");

    const Slots s_slots{slot(ids::codazzi_S),     slot(ids::trace_S),         slot(ids::s_norm_det_S),
                        slot(ids::simons_eq4_S),  slot(ids::simons_eq5_S),    slot(ids::simons_eq6_S),
                        slot(ids::metric_change_S), slot(ids::inverse_codazzi_S)};
    const Slots st_slots{slot(ids::codazzi_S_tilde),     slot(ids::trace_S_tilde),
                         slot(ids::s_norm_det_S_tilde),  slot(ids::simons_eq4_S_tilde),
                         slot(ids::simons_eq5_S_tilde),  slot(ids::simons_eq6_S_tilde),
                         slot(ids::metric_change_S_tilde), slot(ids::inverse_codazzi_S_tilde)};
    const std::size_t i_constraint = slot(ids::constraint), i_gauss = slot(ids::gauss_equation),
                      i_amb = slot(ids::ambient_codazzi), i_tft = slot(ids::t_field_tangent),
                      i_tfn = slot(ids::t_field_normal), i_tr = slot(ids::trace_A_eta), i_tl = slot(ids::t_laplacian),
                      i_pmc = slot(ids::pmc), i_cf = slot(ids::curvature_formula), i_mu = slot(ids::mu_identity);

    const auto samples = sweep(
        pts,
        [&](const GridPoint& p) {
            PointSample out;
            const GeomPoint gp = evaluate_chart(s, p.u, p.v);
            if (s.ambient.curved()) out.r[i_constraint] = constraint_residual(s.ambient, gp.position());
            out.r[i_gauss] = gauss_equation_residual(gp);
            out.r[i_amb] = ambient_codazzi_residual(gp);
            const auto tf = t_field_residuals(gp);
            out.r[i_tft] = tf.tangent;
            out.r[i_tfn] = tf.normal;
            out.r[i_tr] = trace_A_eta_residual(gp);
            out.r[i_tl] = t_laplacian_residual(gp);
            if (gp.minimal()) {
                operator_suite(out, gp, operator_S_tilde_jet(gp), st_slots);
            } else {
                out.r[i_pmc] = pmc_pointwise(gp);
                operator_suite(out, gp, operator_S_jet(gp), s_slots);
                out.r[i_cf] = curvature_formula_residual(gp);
                out.r[i_mu] = mu_identity_residual(gp);
            }
            return out;
        },
        ex);

    std::vector<ResidualReport> reports;
    const auto& list = identity_ids();
    std::vector<double> vals(samples.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
        std::size_t evaluated = 0;
        for (std::size_t p = 0; p < samples.size(); ++p) {
            vals[p] = samples[p].r[k];
            if (!std::isnan(vals[p])) ++evaluated;
        }
        if (evaluated == 0) {
            // a whole-grid skip below the |S| floor is logged on the family's global Simons report
            const auto host = simons_host(list[k]);
            if (!host.empty())
                for (auto& r : reports)
                    if (r.identity_id == host)
                        r.warnings.push_back(list[k] + " skipped at all " + std::to_string(samples.size()) +
                                             " points: |S| <= " + fmt_floor());
            continue;
        }
        ResidualReport r = make_report(list[k], pts, grid, vals, tol.at(list[k]));
        reports.push_back(std::move(r));
    }
    return reports;
}

} // namespace pmc
