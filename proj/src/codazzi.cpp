#include "pmc/codazzi.hpp"

#include "pmc/errors.hpp"

#include <cmath>
#include <sstream>

namespace pmc {

namespace {

Mat2j outer_T(const GeomPoint& gp)
{
    Mat2j out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out(a, b) = gp.T[static_cast<std::size_t>(a)] * gp.T_lower[static_cast<std::size_t>(b)];
    return out;
}

Mat2j scaled_identity(const Jet2& s)
{
    Mat2j out;
    out(0, 0) = s;
    out(1, 1) = s;
    out(0, 1) = Jet2::constant(0.0, s.order());
    out(1, 0) = Jet2::constant(0.0, s.order());
    return out;
}

Mat2j sandwich(const Mat2j& S, const Mat2j& g) { return S.transposed() * g * S; }

} // namespace

Mat2j operator_S_jet(const GeomPoint& gp)
{
    if (gp.minimal()) {
        std::ostringstream os;
        os << "operator S needs a non-minimal point, |H| = " << gp.H_norm;
        throw MinimalSurfaceError(os.str());
    }
    const double kappa = gp.ambient.kappa;
    Mat2j S = shape_operator_H(gp) * 2.0;
    S -= outer_T(gp) * kappa;
    S += scaled_identity(0.5 * kappa * gp.T_norm_sq - 2.0 * gp.H_norm_sq);
    return S;
}

Mat2d operator_S(const GeomPoint& gp, double kappa)
{
    if (gp.minimal()) {
        std::ostringstream os;
        os << "operator S needs a non-minimal point, |H| = " << gp.H_norm;
        throw MinimalSurfaceError(os.str());
    }
    Mat2d S = values(shape_operator_H(gp)) * 2.0;
    const Mat2d tt = values(outer_T(gp));
    const double diag = 0.5 * kappa * gp.T_norm_sq.value() - 2.0 * gp.H_norm_sq.value();
    S -= tt * kappa;
    S(0, 0) += diag;
    S(1, 1) += diag;
    return S;
}

Mat2j operator_S_tilde_jet(const GeomPoint& gp)
{
    Mat2j S = outer_T(gp) * -1.0;
    S += scaled_identity(0.5 * gp.T_norm_sq);
    return S;
}

Mat2d operator_S_tilde(const GeomPoint& gp) { return values(operator_S_tilde_jet(gp)); }

CodazziField CodazziField::S() { return {FieldKind::S, "S", operator_S_jet}; }

CodazziField CodazziField::S_tilde() { return {FieldKind::S_tilde, "S_tilde", operator_S_tilde_jet}; }

CodazziField CodazziField::quadratic_differential(std::vector<std::complex<double>> coeffs)
{
    auto fn = [coeffs = std::move(coeffs)](const GeomPoint& gp) {
        const Jet2 z_re = Jet2::variable(Var::u, gp.u, kMaxJetOrder);
        const Jet2 z_im = Jet2::variable(Var::v, gp.v, kMaxJetOrder);
        Jet2 pw_re(1.0), pw_im(0.0), phi_re(0.0), phi_im(0.0);
        for (const auto& c : coeffs) {
            phi_re += c.real() * pw_re - c.imag() * pw_im;
            phi_im += c.real() * pw_im + c.imag() * pw_re;
            const Jet2 next_re = pw_re * z_re - pw_im * z_im;
            const Jet2 next_im = pw_re * z_im + pw_im * z_re;
            pw_re = next_re;
            pw_im = next_im;
        }
        Mat2j q;
        q(0, 0) = phi_re;
        q(0, 1) = -phi_im;
        q(1, 0) = -phi_im;
        q(1, 1) = -phi_re;
        return gp.ginv * q;
    };
    return {FieldKind::custom, "quadratic_differential", std::move(fn)};
}

Mat2d CodazziField::matrix_at(const SurfaceSpec& s, double u, double v) const
{
    return values(matrix_jet(evaluate_chart(s, u, v)));
}

double self_adjoint_defect(const Mat2d& S, const Mat2d& g)
{
    const Mat2d gs = g * S;
    return std::abs(gs(0, 1) - gs(1, 0));
}

double codazzi_residual(const Mat2j& S, const std::array<Mat2j, 2>& gamma, const Mat2d& g)
{
    const auto nabla = covariant_derivative(S, gamma);
    // (nabla_u S) d_v - (nabla_v S) d_u; the torsion-free terms cancel.
    const std::array<double, 2> r{nabla[0](0, 1) - nabla[1](0, 0), nabla[0](1, 1) - nabla[1](1, 0)};
    return tangent_norm(g, r);
}

double codazzi_residual(const GeomPoint& gp, const Mat2j& S)
{
    if (S(0, 0).order() < 1) throw JetOrderError("Codazzi residual needs operator jets of order >= 1");
    return codazzi_residual(S, gp.gamma, gp.metric());
}

double codazzi_residual(const SurfaceSpec& s, double u, double v, const CodazziField& field)
{
    const GeomPoint gp = evaluate_chart(s, u, v);
    return codazzi_residual(gp, field.matrix_jet(gp));
}

SimonsResiduals simons_residuals(const GeomPoint& gp, const Mat2j& S)
{
    if (S(0, 0).order() < 2) throw JetOrderError("Simons residuals need operator jets of order >= 2");
    SimonsResiduals out;
    const double K = gp.K.value();
    const Mat2d g = gp.metric();
    const Mat2d ginv = values(gp.ginv);

    const Jet2 norm_sq = (S * S).trace();
    out.norm = std::sqrt(std::max(0.0, norm_sq.value()));

    const auto nabla = covariant_derivative(S, gp.gamma);
    double grad = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int e = 0; e < 2; ++e)
            for (int b = 0; b < 2; ++b)
                for (int f = 0; f < 2; ++f)
                    for (int c = 0; c < 2; ++c)
                        for (int d = 0; d < 2; ++d) {
                            grad += ginv(a, e) * ginv(b, f) * g(c, d) * nabla[static_cast<std::size_t>(a)](c, b) *
                                    nabla[static_cast<std::size_t>(e)](d, f);
                        }
    out.grad_S_sq = grad;
    out.r_eq4 = std::abs(0.5 * laplace_beltrami(norm_sq, gp.g) - grad - 2.0 * K * norm_sq.value());

    if (out.norm > kSimonsFloor) {
        const Jet2 abs_s = sqrt(norm_sq);
        const double grad_abs = grad_norm_sq(abs_s, gp.g);
        out.grad_abs_S_sq = grad_abs;
        out.r_eq5 = std::abs(abs_s.value() * laplace_beltrami(abs_s, gp.g) - 2.0 * K * norm_sq.value() - grad_abs);
        out.r_eq6 = std::abs(laplace_beltrami(0.5 * log(norm_sq), gp.g) - 2.0 * K);
    }
    return out;
}

SimonsResiduals simons_residuals(const SurfaceSpec& s, double u, double v, const CodazziField& field)
{
    const GeomPoint gp = evaluate_chart(s, u, v);
    SimonsResiduals out = simons_residuals(gp, field.matrix_jet(gp));
    if (!out.r_eq6) {
        std::ostringstream os;
        os << "|S| = " << out.norm << " is below the floor " << kSimonsFloor << "; log|S| is undefined";
        throw SingularOperatorError(os.str());
    }
    return out;
}

double s_norm_det_identity(const Mat2d& S, const Mat2d& g)
{
    constexpr double tol = 1e-8;
    if (std::abs(S.trace()) > tol) throw PreconditionError("operator is not traceless");
    if (self_adjoint_defect(S, g) > tol) throw PreconditionError("operator is not self-adjoint for the metric");
    return std::abs((S * S).trace() + 2.0 * S.det());
}

MetricChange metric_change(const GeomPoint& gp, const Mat2j& S)
{
    if (S(0, 0).order() < 2) throw JetOrderError("metric change needs operator jets of order >= 2");
    MetricChange out;
    out.det_S = S.det().value();
    if (std::abs(out.det_S) <= kSingularFloor) {
        std::ostringstream os;
        os << "operator is singular, det S = " << out.det_S;
        throw SingularOperatorError(os.str());
    }
    out.K = gp.K.value();
    out.gS = sandwich(S, gp.g);
    const Mat2d gs = values(out.gS);
    out.positive_definite = gs(0, 0) > 0 && gs.det() > 0;
    out.K_tilde = gauss_curvature_brioschi(out.gS).value();
    out.residual = std::abs(out.K_tilde * out.det_S - out.K);

    const Mat2j Sinv = S.inverse();
    const auto gamma_tilde = christoffel(out.gS);
    out.inverse_codazzi = codazzi_residual(Sinv, gamma_tilde, gs);

    // Gamma~^c_ab d_c = S^-1 nabla_a (S d_b)
    const auto nabla = covariant_derivative(S, gp.gamma);
    const Mat2d sinv = values(Sinv);
    const Mat2d sv = values(S);
    double worst = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            // nabla_a (S d_b) = (nabla_a S) d_b + S (nabla_a d_b)
            std::array<double, 2> w{};
            for (int d = 0; d < 2; ++d) {
                double acc = nabla[static_cast<std::size_t>(a)](d, b);
                for (int e = 0; e < 2; ++e) acc += sv(d, e) * gp.gamma[static_cast<std::size_t>(e)](a, b).value();
                w[static_cast<std::size_t>(d)] = acc;
            }
            const auto lhs = mat_apply(sinv, w);
            for (int c = 0; c < 2; ++c) {
                worst = std::max(worst, std::abs(lhs[static_cast<std::size_t>(c)] -
                                                 gamma_tilde[static_cast<std::size_t>(c)](a, b).value()));
            }
        }
    }
    out.connection_residual = worst;
    return out;
}

MetricChange metric_change(const SurfaceSpec& s, double u, double v, const CodazziField& field)
{
    const GeomPoint gp = evaluate_chart(s, u, v);
    return metric_change(gp, field.matrix_jet(gp));
}

} // namespace pmc
