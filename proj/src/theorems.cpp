#include "pmc/theorems.hpp"

#include "pmc/errors.hpp"
#include "pmc/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pmc {

namespace {

constexpr const char* kLabel = "consistency on sampled chart";

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    bool init = false;

    void add(double x)
    {
        if (!init) {
            lo = hi = x;
            init = true;
            return;
        }
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    [[nodiscard]] double spread() const { return hi - lo; }
    [[nodiscard]] double max_abs() const { return std::max(std::abs(lo), std::abs(hi)); }
};

Hypothesis non_strict(std::string name, double margin)
{
    return {std::move(name), margin >= -kStrictMargin, margin + 0.0};
}

Hypothesis strict(std::string name, double margin) { return {std::move(name), margin > kStrictMargin, margin + 0.0}; }

Hypothesis sign(std::string name, double margin) { return {std::move(name), margin >= -kSignTolerance, margin + 0.0}; }

Conclusion conclude(std::string claim, double residual)
{
    return {std::move(claim), residual, residual < kConclusionTolerance};
}

bool all_satisfied(const std::vector<Hypothesis>& h)
{
    return std::all_of(h.begin(), h.end(), [](const Hypothesis& x) { return x.satisfied; });
}

std::string fmt(const char* what, double x)
{
    std::ostringstream os;
    os.precision(6);
    os << what << x;
    return os.str();
}

// Data shared by the PMC theorems.
struct PmcSample {
    double K = 0.0;
    double H_sq = 0.0;
    double aux_det = 0.0;
    double mu = 0.0;
    double pmc = 0.0;
};

std::vector<PmcSample> sample_pmc(const SurfaceSpec& s, const Grid& grid, Execution ex)
{
    if (!s.ambient.curved()) throw PreconditionError("the PMC theorems need kappa != 0");
    const auto pts = grid_points(s.domain, grid);
    auto samples = sweep(
        pts,
        [&](const GridPoint& p) {
            const GeomPoint gp = evaluate_chart(s, p.u, p.v);
            if (gp.minimal()) {
                std::ostringstream os;
                os << "the PMC theorems need a non-minimal surface; |H| = " << gp.H_norm << " at (" << p.u << ", "
                   << p.v << ")";
                throw MinimalSurfaceError(os.str());
            }
            PmcSample smp;
            smp.K = gp.K.value();
            smp.H_sq = gp.H_norm_sq.value();
            smp.aux_det = sum_det_aux(gp);
            smp.mu = mu_integrand(gp);
            smp.pmc = pmc_pointwise(gp);
            return smp;
        },
        ex);
    double worst = 0.0;
    for (const auto& smp : samples) worst = std::max(worst, smp.pmc);
    if (worst > kGateTolerance) {
        throw PreconditionError(fmt("surface is not PMC on the chart, max |nabla^perp H| = ", worst));
    }
    return samples;
}

// Shared body of Theorems 3.1 and 1.3; extra(k) is the term added to K in the hypotheses.
template <class Extra>
TheoremVerdict pmc_verdict(TheoremId id, const SurfaceSpec& s, const std::vector<PmcSample>& samples, double eps,
                           double c, Extra extra, const std::string& extra_name)
{
    TheoremVerdict v;
    v.theorem_id = id;
    const double kappa = s.ambient.kappa;
    Range K;
    for (const auto& smp : samples) K.add(smp.K);
    v.hypotheses.push_back(sign("K <= 0", -K.hi));

    if (kappa < 0) {
        if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
        v.branch = "kappa<0";
        double worst = -1e300;
        for (const auto& smp : samples) worst = std::max(worst, smp.K - smp.H_sq - kappa + extra(smp));
        v.hypotheses.push_back(non_strict("K - |H|^2 - kappa" + extra_name + " <= -eps", -eps - worst));
    } else {
        if (!(c >= 0.0 && c < 1.0)) throw InvalidArgument("c must lie in [0, 1)");
        v.branch = "kappa>0";
        double m1 = 1e300;
        double m2 = 1e300;
        for (const auto& smp : samples) {
            m1 = std::min(m1, c * smp.H_sq - (smp.K + extra(smp)));
            m2 = std::min(m2, 4.0 * std::sqrt(1.0 - c) * smp.H_sq - kappa);
        }
        v.hypotheses.push_back(non_strict("K" + extra_name + " <= c |H|^2", m1));
        v.hypotheses.push_back(strict("4 (1 - c)^(1/2) |H|^2 - kappa > 0", m2));
    }
    v.applicable = all_satisfied(v.hypotheses);
    if (v.applicable) v.conclusion_checked.push_back(conclude("K == 0", K.max_abs()));
    v.notes.emplace_back(kLabel);
    return v;
}

} // namespace

std::string to_string(TheoremId id)
{
    switch (id) {
    case TheoremId::thm_1_2: return "1.2";
    case TheoremId::thm_1_3: return "1.3";
    case TheoremId::thm_3_1: return "3.1";
    case TheoremId::corollaries: return "cor";
    }
    return "?";
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::consistent: return "consistent";
    case Outcome::inapplicable: return "inapplicable";
    case Outcome::counterexample_candidate: return "counterexample-candidate";
    }
    return "?";
}

TheoremId parse_theorem_id(const std::string& s)
{
    if (s == "1.2") return TheoremId::thm_1_2;
    if (s == "1.3") return TheoremId::thm_1_3;
    if (s == "3.1") return TheoremId::thm_3_1;
    if (s == "cor") return TheoremId::corollaries;
    throw InvalidArgument("unknown theorem '" + s + "' (expected 1.2, 1.3, 3.1 or cor)");
}

Outcome TheoremVerdict::outcome() const
{
    if (!applicable) return Outcome::inapplicable;
    for (const auto& c : conclusion_checked)
        if (!c.passed) return Outcome::counterexample_candidate;
    return Outcome::consistent;
}

TheoremVerdict check_theorem_1_2(const SurfaceSpec& s, const CodazziField& field, const Grid& grid, double eps,
                                 Execution ex)
{
    struct Sample {
        double K = 0.0;
        double det = 0.0;
        double codazzi = 0.0;
        double trace = 0.0;
    };
    const auto pts = grid_points(s.domain, grid);
    const auto samples = sweep(
        pts,
        [&](const GridPoint& p) {
            const GeomPoint gp = evaluate_chart(s, p.u, p.v);
            const Mat2j S = field.matrix_jet(gp);
            const Mat2d sv = values(S);
            return Sample{gp.K.value(), sv.det(), codazzi_residual(gp, S), std::abs(sv.trace())};
        },
        ex);

    Range K, det, absdet;
    double codazzi = 0.0, trace = 0.0;
    for (const auto& smp : samples) {
        K.add(smp.K);
        det.add(smp.det);
        absdet.add(std::abs(smp.det));
        codazzi = std::max(codazzi, smp.codazzi);
        trace = std::max(trace, smp.trace);
    }
    if (codazzi > kGateTolerance || trace > kGateTolerance) {
        std::ostringstream os;
        os << "field " << field.name << " is not a traceless Codazzi operator on the chart (Codazzi residual "
           << codazzi << ", trace " << trace << ")";
        throw PreconditionError(os.str());
    }

    TheoremVerdict v;
    v.theorem_id = TheoremId::thm_1_2;

    std::vector<Hypothesis> pos{sign("K >= 0", K.lo), non_strict("|det S| <= eps", eps - absdet.hi)};
    std::vector<Hypothesis> neg{sign("K <= 0", -K.hi), strict("eps > 0", eps),
                                non_strict("|det S| >= eps", absdet.lo - eps)};

    const bool pos_ok = all_satisfied(pos);
    const bool neg_ok = all_satisfied(neg);
    const bool use_pos = pos_ok || (!neg_ok && K.lo >= -kSignTolerance);
    v.branch = use_pos ? "K>=0" : "K<=0";
    v.hypotheses = use_pos ? pos : neg;
    v.applicable = use_pos ? pos_ok : neg_ok;
    if (v.applicable) {
        v.conclusion_checked.push_back(conclude("det S constant", det.spread()));
        if (use_pos) {
            double worst = 0.0;
            for (const auto& smp : samples) worst = std::max(worst, std::abs(smp.K * smp.det));
            v.conclusion_checked.push_back(conclude("K det S == 0", worst));
        } else {
            v.conclusion_checked.push_back(conclude("K == 0", K.max_abs()));
        }
    }
    v.notes.emplace_back(kLabel);
    v.notes.push_back("field " + field.name);
    v.notes.emplace_back("the surface is assumed not to be a topological sphere");
    return v;
}

TheoremVerdict check_theorem_3_1(const SurfaceSpec& s, const Grid& grid, double eps, double c, Execution ex)
{
    const auto samples = sample_pmc(s, grid, ex);
    return pmc_verdict(
        TheoremId::thm_3_1, s, samples, eps, c, [](const PmcSample& smp) { return -smp.aux_det; },
        " - sum_{i>1} det A_i");
}

TheoremVerdict check_theorem_1_3(const SurfaceSpec& s, const Grid& grid, double eps, double c, Execution ex)
{
    const auto samples = sample_pmc(s, grid, ex);
    double mu = samples.front().mu;
    for (const auto& smp : samples) mu = std::max(mu, smp.mu);
    TheoremVerdict v = pmc_verdict(
        TheoremId::thm_1_3, s, samples, eps, c, [mu](const PmcSample&) { return 0.5 * mu; }, " + mu/2");
    v.notes.push_back(fmt("mu (grid supremum) = ", mu));
    return v;
}

TheoremVerdict check_corollaries(const SurfaceSpec& s, const Grid& grid, double eps, Execution ex)
{
    if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
    struct Sample {
        double K = 0.0;
        double H = 0.0;
        double t = 0.0;
        double eta = 0.0;
        double class_res = 0.0;
        double s_tilde_res = 0.0;
        double s_res = 0.0;
    };
    const double kappa = s.ambient.kappa;
    const auto pts = grid_points(s.domain, grid);
    const auto samples = sweep(
        pts,
        [&](const GridPoint& p) {
            const GeomPoint gp = evaluate_chart(s, p.u, p.v);
            Sample smp;
            smp.K = gp.K.value();
            smp.H = gp.H_norm;
            smp.t = gp.t_norm();
            const Vec eta = values(gp.eta);
            smp.eta = std::sqrt(std::max(0.0, flat_inner(gp.ambient, eta, eta)));
            const double t2 = gp.T_norm_sq.value();
            smp.class_res = std::abs(alpha_norm_sq(gp) - 2.0 * kappa * (1.0 - t2));
            const Mat2d st = operator_S_tilde(gp);
            const double st2 = (st * st).trace();
            smp.s_tilde_res = std::abs(st2 - 0.5 * t2 * t2);
            // With H = 0 the PMC operator reduces to kappa S~.
            smp.s_res = std::abs(kappa * kappa * st2 - 0.5 * kappa * kappa * t2 * t2);
            return smp;
        },
        ex);

    Range K, t;
    double H = 0.0, eta = 0.0, class_res = 0.0, s_tilde_res = 0.0, s_res = 0.0;
    for (const auto& smp : samples) {
        K.add(smp.K);
        t.add(smp.t);
        H = std::max(H, smp.H);
        eta = std::max(eta, smp.eta);
        class_res = std::max(class_res, smp.class_res);
        s_tilde_res = std::max(s_tilde_res, smp.s_tilde_res);
        s_res = std::max(s_res, smp.s_res);
    }
    if (H >= kMinimalThreshold) throw PreconditionError(fmt("corollaries need a minimal surface, max |H| = ", H));

    TheoremVerdict v;
    v.theorem_id = TheoremId::corollaries;
    v.notes.emplace_back(kLabel);

    const bool k_nonpos = K.hi <= kSignTolerance;
    if (k_nonpos || K.lo < -kSignTolerance) {
        v.branch = "K<=0";
        v.hypotheses.push_back(sign("K <= 0", -K.hi));
        v.hypotheses.push_back(strict("|T| > eps", t.lo - eps));
        v.applicable = all_satisfied(v.hypotheses);
        if (v.applicable) {
            v.conclusion_checked.push_back(conclude("|S~|^2 == |T|^4 / 2", s_tilde_res));
            if (kappa != 0.0) v.conclusion_checked.push_back(conclude("|S|^2 == kappa^2 |T|^4 / 2", s_res));
            v.conclusion_checked.push_back(conclude("K == 0", K.max_abs()));
            v.conclusion_checked.push_back(conclude("|T| constant", t.spread()));
            if (kappa != 0.0) {
                v.conclusion_checked.push_back(
                    conclude("vertical cylinder or flat constant-angle surface: |alpha|^2 == 2 kappa (1 - |T|^2)",
                             class_res));
            }
            if (kappa < 0.0) v.conclusion_checked.push_back(conclude("vertical cylinder: eta == 0", eta));
        }
    } else {
        // The sphere alternative cannot be excluded on a chart, so this branch
        // never claims a conclusion.
        v.branch = "K>=0";
        v.hypotheses.push_back(sign("K >= 0", K.lo));
        v.hypotheses.push_back(strict("|T| > eps", t.lo - eps));
        v.hypotheses.push_back({"not a topological sphere (undecidable on a chart)", false, 0.0});
        v.applicable = all_satisfied(v.hypotheses);
        double worst = 0.0;
        for (const auto& smp : samples) worst = std::max(worst, std::abs(smp.K * smp.t));
        std::ostringstream os;
        os << "topological sphere alternative cannot be excluded on a chart; |T| spread " << t.spread()
           << ", max |K |T|| " << worst;
        v.notes.push_back(os.str());
    }
    return v;
}

} // namespace pmc
