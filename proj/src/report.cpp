#include "pmc/report.hpp"

#include "pmc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pmc {

using nlohmann::json;

json to_json(const ResidualReport& r)
{
    return json{{"identity_id", r.identity_id},
                {"grid", {r.nu, r.nv}},
                {"max_abs", r.max_abs},
                {"mean_abs", r.mean_abs},
                {"argmax", {r.argmax_u, r.argmax_v}},
                {"tolerance", r.tolerance},
                {"passed", r.passed},
                {"warnings", r.warnings}};
}

json to_json(const TheoremVerdict& v)
{
    json hyps = json::array();
    for (const auto& h : v.hypotheses) hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}, {"margin", h.margin}});
    json concl = json::array();
    for (const auto& c : v.conclusion_checked)
        concl.push_back({{"claim", c.claim}, {"residual", c.residual}, {"passed", c.passed}});
    return json{{"theorem_id", to_string(v.theorem_id)},
                {"branch", v.branch},
                {"hypotheses", hyps},
                {"conclusion_checked", concl},
                {"applicable", v.applicable},
                {"outcome", to_string(v.outcome())},
                {"notes", v.notes}};
}

json to_json(const CatalogEntry& e)
{
    json params = json::array();
    for (const auto& p : e.params)
        params.push_back({{"name", p.name}, {"default", p.default_value}, {"range", p.range}});
    json expected = json::object();
    for (const auto& [k, val] : e.expected(resolve_params(e.id, {}))) expected[k] = val;
    return json{{"id", e.id},
                {"description", e.description},
                {"params", params},
                {"ambient_rule", e.ambient_rule},
                {"minimal", e.minimal},
                {"pmc", e.pmc},
                {"expected_at_defaults", expected}};
}

json surface_json(const SurfaceSpec& s)
{
    json params = json::object();
    for (const auto& [k, val] : s.params) params[k] = val;
    return json{{"id", s.catalog_id},
                {"params", params},
                {"ambient", {{"kappa", s.ambient.kappa}, {"n", s.ambient.n}}},
                {"domain", {{"u0", s.domain.u0}, {"u1", s.domain.u1}, {"v0", s.domain.v0}, {"v1", s.domain.v1}}}};
}

json grid_json(const Grid& g) { return json{{"nu", g.nu}, {"nv", g.nv}, {"margin", g.margin}}; }

json make_report(const SurfaceSpec& s, const Grid& grid, const std::vector<ResidualReport>& results,
                 const std::vector<TheoremVerdict>& verdicts)
{
    json res = json::array();
    for (const auto& r : results) res.push_back(to_json(r));
    json ver = json::array();
    for (const auto& v : verdicts) ver.push_back(to_json(v));
    return json{{"surface", surface_json(s)}, {"grid", grid_json(grid)}, {"results", res}, {"verdicts", ver},
                {"version", kVersion}};
}

FieldQuantity parse_field_quantity(const std::string& s)
{
    if (s == "K") return FieldQuantity::K;
    if (s == "normT") return FieldQuantity::normT;
    if (s == "normS") return FieldQuantity::normS;
    if (s == "detS") return FieldQuantity::detS;
    if (s == "mu_integrand") return FieldQuantity::mu_integrand;
    throw InvalidArgument("unknown quantity '" + s + "' (expected K, normT, normS, detS or mu_integrand)");
}

std::vector<double> sample_field(const SurfaceSpec& s, const std::vector<GridPoint>& pts, FieldQuantity q,
                                 bool tilde, Execution ex)
{
    return sweep(
        pts,
        [&](const GridPoint& p) {
            const GeomPoint gp = evaluate_chart(s, p.u, p.v);
            switch (q) {
            case FieldQuantity::K: return gp.K.value();
            case FieldQuantity::normT: return gp.t_norm();
            case FieldQuantity::normS:
            case FieldQuantity::detS: {
                const Mat2d S = tilde ? operator_S_tilde(gp) : operator_S(gp, s.ambient.kappa);
                return q == FieldQuantity::detS ? S.det() : std::sqrt(std::max(0.0, (S * S).trace()));
            }
            case FieldQuantity::mu_integrand: return mu_integrand(gp);
            }
            return 0.0;
        },
        ex);
}

void write_csv(std::ostream& os, const std::vector<GridPoint>& pts, const std::vector<double>& values)
{
    if (pts.size() != values.size()) throw InvalidArgument("point and value counts differ");
    os << "u,v,value\n";
    char buf[128];
    for (std::size_t k = 0; k < pts.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", pts[k].u, pts[k].v, values[k]);
        os << buf;
    }
}

} // namespace pmc
