#include "pmc/geometry.hpp"

#include "pmc/errors.hpp"

#include <cmath>
#include <sstream>

namespace pmc {

namespace {

constexpr double kDegenerateMetric = 1e-12;
constexpr double kFrameDiscard = 1e-10;

Jet2 det3(const std::array<std::array<Jet2, 3>, 3>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Var var_of(int a) { return a == 0 ? Var::u : Var::v; }

Vec axpy(Vec y, double a, const Vec& x)
{
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

JetVec axpy(JetVec y, const Jet2& a, const JetVec& x)
{
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

void check_normal(const GeomPoint& gp, const Vec& xi, const char* what)
{
    double scale = 1.0;
    for (double x : xi) scale = std::max(scale, std::abs(x));
    for (int a = 0; a < 2; ++a) {
        const double d = flat_inner(gp.ambient, xi, gp.tangent(a));
        if (std::abs(d) > kNormalTolerance * scale) {
            std::ostringstream os;
            os << what << " is not normal to the surface (<xi, f_" << (a == 0 ? 'u' : 'v') << "> = " << d << ")";
            throw NotNormalError(os.str());
        }
    }
    if (gp.ambient.curved()) {
        const Vec p = gp.position();
        const double d = space_inner<double>(gp.ambient, xi, p);
        if (std::abs(d) > kNormalTolerance * scale) {
            throw NotNormalError(std::string(what) + " is not tangent to the ambient product");
        }
    }
}

// Gram-Schmidt normal frame over the product tangent space.
std::vector<Vec> build_frame(const GeomPoint& gp)
{
    const AmbientModel& m = gp.ambient;
    const Vec p = gp.position();
    const std::size_t dim = static_cast<std::size_t>(m.flat_dim);
    const std::size_t want = static_cast<std::size_t>(m.n - 1);

    std::vector<Vec> basis; // tangent basis followed by frame vectors
    for (int a = 0; a < 2; ++a) {
        Vec w = gp.tangent(a);
        for (const auto& b : basis) w = axpy(w, -flat_inner(m, w, b), b);
        const double nrm = std::sqrt(flat_inner(m, w, w));
        for (auto& x : w) x /= nrm;
        basis.push_back(w);
    }

    std::vector<Vec> frame;
    if (!gp.minimal()) {
        Vec h = values(gp.H);
        for (auto& x : h) x /= gp.H_norm;
        frame.push_back(h);
        basis.push_back(h);
    }

    for (std::size_t k = 0; k < dim && frame.size() < want; ++k) {
        Vec e(dim, 0.0);
        e[k] = 1.0;
        Vec w = project_tangent_unchecked(m, p, e);
        for (int pass = 0; pass < 2; ++pass) {
            w = project_tangent_unchecked(m, p, w);
            for (const auto& b : basis) w = axpy(w, -flat_inner(m, w, b), b);
        }
        const double n2 = flat_inner(m, w, w);
        if (n2 <= kFrameDiscard * kFrameDiscard) continue;
        const double nrm = std::sqrt(n2);
        for (auto& x : w) x /= nrm;
        for (double x : w) {
            if (std::abs(x) > 1e-12) {
                if (x < 0) {
                    for (auto& y : w) y = -y;
                }
                break;
            }
        }
        frame.push_back(w);
        basis.push_back(w);
    }
    if (frame.size() != want) throw NumericalError("could not complete the normal frame");
    return frame;
}

} // namespace

double GeomPoint::t_norm() const { return std::sqrt(std::max(0.0, T_norm_sq.value())); }

std::array<Mat2j, 2> christoffel(const Mat2j& g)
{
    const Mat2j ginv = g.inverse();
    std::array<Mat2j, 2> dg{derivative(g, Var::u), derivative(g, Var::v)};
    // lowered Gamma_{d,ab} = 1/2 (d_a g_bd + d_b g_ad - d_d g_ab)
    std::array<Mat2j, 2> gamma;
    for (int c = 0; c < 2; ++c) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                Jet2 acc(0.0);
                for (int d = 0; d < 2; ++d) {
                    const Jet2 low = 0.5 * (dg[static_cast<std::size_t>(a)](b, d) +
                                            dg[static_cast<std::size_t>(b)](a, d) -
                                            dg[static_cast<std::size_t>(d)](a, b));
                    acc += ginv(c, d) * low;
                }
                gamma[static_cast<std::size_t>(c)](a, b) = acc;
            }
        }
    }
    return gamma;
}

Jet2 gauss_curvature_brioschi(const Mat2j& g)
{
    if (g(0, 0).order() < 2 || g(0, 1).order() < 2 || g(1, 1).order() < 2) {
        throw JetOrderError("intrinsic curvature needs metric jets of order >= 2");
    }
    const Jet2& E = g(0, 0);
    const Jet2& F = g(0, 1);
    const Jet2& G = g(1, 1);
    const Jet2 det = E * G - F * F;
    if (det.value() <= kDegenerateMetric) throw DegenerateMetricError("non-positive metric determinant");

    const Jet2 Eu = E.derivative(Var::u), Ev = E.derivative(Var::v);
    const Jet2 Fu = F.derivative(Var::u), Fv = F.derivative(Var::v);
    const Jet2 Gu = G.derivative(Var::u), Gv = G.derivative(Var::v);
    const Jet2 Evv = Ev.derivative(Var::v);
    const Jet2 Fuv = Fu.derivative(Var::v);
    const Jet2 Guu = Gu.derivative(Var::u);

    const std::array<std::array<Jet2, 3>, 3> m1{{{-0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev},
                                                 {Fv - 0.5 * Gu, E, F},
                                                 {0.5 * Gv, F, G}}};
    const std::array<std::array<Jet2, 3>, 3> m2{{{Jet2(0.0), 0.5 * Ev, 0.5 * Gu},
                                                 {0.5 * Ev, E, F},
                                                 {0.5 * Gu, F, G}}};
    return (det3(m1) - det3(m2)) / det / det;
}

std::array<double, 2> riemann_uvv(const std::array<Mat2j, 2>& gamma)
{
    // R(d_u, d_v) d_v = (d_u Gamma^c_vv - d_v Gamma^c_uv + Gamma^c_ud Gamma^d_vv - Gamma^c_vd Gamma^d_uv) d_c
    std::array<double, 2> R{};
    for (int c = 0; c < 2; ++c) {
        const auto& gc = gamma[static_cast<std::size_t>(c)];
        double acc = gc(1, 1).partial(1, 0) - gc(0, 1).partial(0, 1);
        for (int d = 0; d < 2; ++d) {
            const auto& gd = gamma[static_cast<std::size_t>(d)];
            acc += gc(0, d).value() * gd(1, 1).value() - gc(1, d).value() * gd(0, 1).value();
        }
        R[static_cast<std::size_t>(c)] = acc;
    }
    return R;
}

double gauss_curvature_riemann(const Mat2j& g)
{
    const auto R = riemann_uvv(christoffel(g));
    const Mat2d gv = values(g);
    return (gv(0, 0) * R[0] + gv(0, 1) * R[1]) / gv.det();
}

GeomPoint evaluate_chart(const SurfaceSpec& s, double u, double v)
{
    if (!s.domain.contains(u, v)) {
        std::ostringstream os;
        os << "chart point (" << u << ", " << v << ") outside the domain of " << s.catalog_id;
        throw InvalidArgument(os.str());
    }
    GeomPoint gp;
    gp.ambient = s.ambient;
    gp.u = u;
    gp.v = v;
    const AmbientModel& m = s.ambient;
    const std::size_t t = static_cast<std::size_t>(m.t_index);

    gp.f = s.chart(Jet2::variable(Var::u, u, kMaxJetOrder), Jet2::variable(Var::v, v, kMaxJetOrder));
    if (gp.f.size() != static_cast<std::size_t>(m.flat_dim)) {
        throw InvalidArgument("chart dimension does not match the ambient model");
    }
    if (m.curved()) {
        const Vec p = gp.position();
        if (std::abs(constraint_residual(m, p)) > kConstraintTolerance) {
            throw ConstraintViolationError("chart point is off the space-form model");
        }
    }

    gp.df = {derivative(gp.f, Var::u), derivative(gp.f, Var::v)};
    for (int a = 0; a < 2; ++a) {
        for (int b = a; b < 2; ++b) {
            gp.g(a, b) = flat_inner(m, gp.df[static_cast<std::size_t>(a)], gp.df[static_cast<std::size_t>(b)]);
        }
    }
    gp.g(1, 0) = gp.g(0, 1);
    if (gp.g.det().value() <= kDegenerateMetric) {
        std::ostringstream os;
        os << "degenerate metric at (" << u << ", " << v << ")";
        throw DegenerateMetricError(os.str());
    }
    gp.ginv = gp.g.inverse();
    gp.gamma = christoffel(gp.g);

    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const JetVec fab = derivative(gp.df[static_cast<std::size_t>(b)], var_of(a));
            JetVec w = project_tangent(m, gp.f, fab);
            for (int c = 0; c < 2; ++c) {
                w = axpy(w, -gp.gamma[static_cast<std::size_t>(c)](a, b), gp.df[static_cast<std::size_t>(c)]);
            }
            gp.alpha[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = w;
        }
    }

    gp.H.assign(static_cast<std::size_t>(m.flat_dim), Jet2(0.0));
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            gp.H = axpy(gp.H, 0.5 * gp.ginv(a, b), gp.alpha[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
    }
    gp.H_norm_sq = flat_inner(m, gp.H, gp.H);
    gp.H_norm = std::sqrt(std::max(0.0, gp.H_norm_sq.value()));

    for (int a = 0; a < 2; ++a) gp.T_lower[static_cast<std::size_t>(a)] = gp.df[static_cast<std::size_t>(a)][t];
    gp.T = mat_apply(gp.ginv, gp.T_lower);
    gp.T_norm_sq = gp.T[0] * gp.T_lower[0] + gp.T[1] * gp.T_lower[1];
    gp.eta.assign(static_cast<std::size_t>(m.flat_dim), Jet2(0.0));
    gp.eta[t] = Jet2(1.0);
    for (int a = 0; a < 2; ++a) gp.eta = axpy(gp.eta, -gp.T[static_cast<std::size_t>(a)], gp.df[static_cast<std::size_t>(a)]);

    gp.K = gauss_curvature_brioschi(gp.g);

    gp.xi = build_frame(gp);
    gp.A.reserve(gp.xi.size());
    for (const auto& x : gp.xi) gp.A.push_back(shape_operator(gp, x));
    return gp;
}

Mat2d alpha_dot(const GeomPoint& gp, const Vec& nu)
{
    Mat2d out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            out(a, b) = flat_inner(gp.ambient, values(gp.alpha[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]), nu);
        }
    }
    return out;
}

Mat2d shape_operator(const GeomPoint& gp, const Vec& xi)
{
    check_normal(gp, xi, "shape operator direction");
    return values(gp.ginv) * alpha_dot(gp, xi);
}

Mat2j shape_operator_jet(const GeomPoint& gp, const JetVec& xi)
{
    Mat2j low;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            low(a, b) = flat_inner(gp.ambient, gp.alpha[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], xi);
        }
    }
    return gp.ginv * low;
}

Mat2j shape_operator_H(const GeomPoint& gp) { return shape_operator_jet(gp, gp.H); }

Vec normal_part(const GeomPoint& gp, const Vec& w)
{
    Vec out = project_tangent_unchecked(gp.ambient, gp.position(), w);
    const Mat2d ginv = values(gp.ginv);
    std::array<double, 2> low{};
    for (int a = 0; a < 2; ++a) low[static_cast<std::size_t>(a)] = flat_inner(gp.ambient, out, gp.tangent(a));
    const auto comp = mat_apply(ginv, low);
    for (int a = 0; a < 2; ++a) out = axpy(out, -comp[static_cast<std::size_t>(a)], gp.tangent(a));
    return out;
}

JetVec normal_part_jet(const GeomPoint& gp, const JetVec& w)
{
    JetVec out = project_tangent(gp.ambient, gp.f, w);
    std::array<Jet2, 2> low;
    for (int a = 0; a < 2; ++a) low[static_cast<std::size_t>(a)] = flat_inner(gp.ambient, out, gp.df[static_cast<std::size_t>(a)]);
    const auto comp = mat_apply(gp.ginv, low);
    for (int a = 0; a < 2; ++a) out = axpy(out, -comp[static_cast<std::size_t>(a)], gp.df[static_cast<std::size_t>(a)]);
    return out;
}

JetVec extend_normal(const GeomPoint& gp, const Vec& xi0)
{
    check_normal(gp, xi0, "normal seed");
    JetVec c;
    c.reserve(xi0.size());
    for (double x : xi0) c.emplace_back(x);
    return normal_part_jet(gp, c);
}

Vec normal_connection_derivative(const GeomPoint& gp, const JetVec& field, Var dir)
{
    check_normal(gp, values(field), "field");
    return normal_part(gp, values(derivative(field, dir)));
}

double laplace_beltrami(const Jet2& phi, const Mat2j& g)
{
    if (phi.order() < 2) throw JetOrderError("Laplace-Beltrami needs a jet of order >= 2");
    const auto gamma = christoffel(g);
    const Mat2d ginv = values(g.inverse());
    const std::array<double, 2> d1{phi.partial(1, 0), phi.partial(0, 1)};
    Mat2d hess;
    hess(0, 0) = phi.partial(2, 0);
    hess(0, 1) = phi.partial(1, 1);
    hess(1, 0) = hess(0, 1);
    hess(1, 1) = phi.partial(0, 2);
    double acc = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            double term = hess(a, b);
            for (int k = 0; k < 2; ++k) term -= gamma[static_cast<std::size_t>(k)](a, b).value() * d1[static_cast<std::size_t>(k)];
            acc += ginv(a, b) * term;
        }
    }
    return acc;
}

double laplace_beltrami(const Jet2& phi, const GeomPoint& gp) { return laplace_beltrami(phi, gp.g); }

double grad_norm_sq(const Jet2& phi, const Mat2j& g)
{
    if (phi.order() < 1) throw JetOrderError("gradient needs a jet of order >= 1");
    const std::array<double, 2> d1{phi.partial(1, 0), phi.partial(0, 1)};
    return bilinear(values(g.inverse()), d1, d1);
}

double sum_det_aux(const GeomPoint& gp, const std::vector<Vec>& frame)
{
    double acc = 0.0;
    for (std::size_t i = 1; i < frame.size(); ++i) acc += shape_operator(gp, frame[i]).det();
    return acc;
}

double sum_det_aux(const GeomPoint& gp)
{
    double acc = 0.0;
    for (std::size_t i = 1; i < gp.A.size(); ++i) acc += gp.A[i].det();
    return acc;
}

double alpha_norm_sq(const GeomPoint& gp)
{
    const Mat2d ginv = values(gp.ginv);
    double acc = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    acc += ginv(a, c) * ginv(b, d) *
                           flat_inner(gp.ambient, values(gp.alpha[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]),
                                      values(gp.alpha[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]));
                }
    return acc;
}

double tangent_norm(const Mat2d& g, const std::array<double, 2>& x) { return std::sqrt(std::max(0.0, bilinear(g, x, x))); }

std::array<Mat2d, 2> covariant_derivative(const Mat2j& S, const std::array<Mat2j, 2>& gamma)
{
    std::array<Mat2d, 2> out;
    for (int a = 0; a < 2; ++a) {
        const Mat2d dS = values(derivative(S, var_of(a)));
        for (int c = 0; c < 2; ++c) {
            for (int b = 0; b < 2; ++b) {
                double acc = dS(c, b);
                for (int d = 0; d < 2; ++d) {
                    acc += gamma[static_cast<std::size_t>(c)](a, d).value() * S(d, b).value();
                    acc -= gamma[static_cast<std::size_t>(d)](a, b).value() * S(c, d).value();
                }
                out[static_cast<std::size_t>(a)](c, b) = acc;
            }
        }
    }
    return out;
}

} // namespace pmc
