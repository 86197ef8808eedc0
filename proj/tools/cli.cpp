#include "cli.hpp"

#include "pmc/catalog.hpp"
#include "pmc/errors.hpp"
#include "pmc/identities.hpp"
#include "pmc/report.hpp"
#include "pmc/theorems.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace pmc::cli {

namespace {

struct RunConfig {
    std::string surface_id;
    std::vector<std::string> params;
    std::vector<std::string> tolerances;
    int grid = 0;
    int nu = kDefaultGridSize;
    int nv = kDefaultGridSize;
    double margin = kDefaultMargin;
    std::string output;
    std::string format = "json";
    bool serial = false;
};

void add_run_options(CLI::App* cmd, RunConfig& cfg, bool with_tol)
{
    cmd->add_option("--surface", cfg.surface_id, "catalog id")->required();
    cmd->add_option("--param", cfg.params, "surface parameter name=value (repeatable)");
    if (with_tol) cmd->add_option("--tol", cfg.tolerances, "tolerance override identity=value (repeatable)");
    cmd->add_option("--grid", cfg.grid, "grid points per direction (sets nu and nv)");
    cmd->add_option("--nu", cfg.nu, "grid points along u");
    cmd->add_option("--nv", cfg.nv, "grid points along v");
    cmd->add_option("--margin", cfg.margin, "fraction of the chart excluded at each edge");
    cmd->add_option("--output,-o", cfg.output, "output file (default stdout)");
    cmd->add_flag("--serial", cfg.serial, "use the serial reference sweep");
}

Grid make_grid(const RunConfig& cfg)
{
    Grid g{cfg.nu, cfg.nv, cfg.margin};
    if (cfg.grid != 0) g.nu = g.nv = cfg.grid;
    validate_grid(g);
    return g;
}

Params make_params(const RunConfig& cfg)
{
    Params p;
    for (const auto& a : cfg.params) parse_assignment(a, p);
    return p;
}

Execution execution(const RunConfig& cfg) { return cfg.serial ? Execution::serial : Execution::parallel; }

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text)
{
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file '" + cfg.output + "'");
    f << text;
}

std::string fmt17(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int cmd_catalog(const std::string& format, const std::string& id, std::ostream& out)
{
    std::vector<const CatalogEntry*> entries;
    if (id.empty()) {
        for (const auto& e : catalog_list()) entries.push_back(&e);
    } else {
        entries.push_back(&catalog_entry(id));
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto* e : entries) arr.push_back(to_json(*e));
        out << arr.dump(2) << '\n';
        return ok;
    }
    for (const auto* e : entries) {
        out << e->id << "  (" << e->ambient_rule << ")\n  " << e->description << '\n';
        out << "  minimal: " << (e->minimal ? "yes" : "no") << ", pmc: " << (e->pmc ? "yes" : "no") << '\n';
        for (const auto& p : e->params)
            out << "  param " << std::left << std::setw(8) << p.name << " default " << fmt17(p.default_value)
                << "  range " << p.range << '\n';
        for (const auto& [k, v] : e->expected(resolve_params(e->id, {})))
            out << "  expect " << std::left << std::setw(24) << k << ' ' << fmt17(v) << '\n';
        out << '\n';
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Grid grid = make_grid(cfg);
    std::map<std::string, double> tol;
    for (const auto& t : cfg.tolerances) parse_assignment(t, tol);
    const SurfaceSpec s = instantiate(cfg.surface_id, make_params(cfg));
    const auto reports = run_identity_suite(s, grid, tol, execution(cfg));

    bool all_passed = true;
    for (const auto& r : reports) {
        if (!r.passed) {
            all_passed = false;
            err << "FAIL " << r.identity_id << ": max " << r.max_abs << " > tol " << r.tolerance << '\n';
        }
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "identity_id,max_abs,mean_abs,argmax_u,argmax_v,tolerance,passed\n";
        for (const auto& r : reports) {
            os << r.identity_id << ',' << fmt17(r.max_abs) << ',' << fmt17(r.mean_abs) << ',' << fmt17(r.argmax_u)
               << ',' << fmt17(r.argmax_v) << ',' << fmt17(r.tolerance) << ',' << (r.passed ? "true" : "false")
               << '\n';
        }
        emit(cfg, out, os.str());
    } else {
        emit(cfg, out, make_report(s, grid, reports, {}).dump(2) + "\n");
    }
    return all_passed ? ok : failed;
}

int cmd_field(const RunConfig& cfg, const std::string& quantity, bool tilde, std::ostream& out)
{
    const Grid grid = make_grid(cfg);
    const FieldQuantity q = parse_field_quantity(quantity);
    const SurfaceSpec s = instantiate(cfg.surface_id, make_params(cfg));
    const auto pts = grid_points(s.domain, grid);
    const auto values = sample_field(s, pts, q, tilde, execution(cfg));
    std::ostringstream os;
    write_csv(os, pts, values);
    emit(cfg, out, os.str());
    return ok;
}

int cmd_hypothesis(const RunConfig& cfg, const std::string& theorem, double eps, double c, bool tilde,
                   std::ostream& out)
{
    const Grid grid = make_grid(cfg);
    const TheoremId id = parse_theorem_id(theorem);
    const SurfaceSpec s = instantiate(cfg.surface_id, make_params(cfg));
    const Execution ex = execution(cfg);
    TheoremVerdict v;
    switch (id) {
    case TheoremId::thm_1_2:
        v = check_theorem_1_2(s, tilde ? CodazziField::S_tilde() : CodazziField::S(), grid, eps, ex);
        break;
    case TheoremId::thm_1_3: v = check_theorem_1_3(s, grid, eps, c, ex); break;
    case TheoremId::thm_3_1: v = check_theorem_3_1(s, grid, eps, c, ex); break;
    case TheoremId::corollaries: v = check_corollaries(s, grid, eps, ex); break;
    }
    emit(cfg, out, make_report(s, grid, {}, {v}).dump(2) + "\n");
    return v.outcome() == Outcome::counterexample_candidate ? failed : ok;
}

} // namespace

void parse_assignment(const std::string& text, std::map<std::string, double>& out)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
        throw InvalidArgument("expected name=value, got '" + text + "'");
    const std::string name = text.substr(0, eq);
    const std::string value = text.substr(eq + 1);
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size()) throw InvalidArgument("'" + value + "' is not a number");
    out[name] = x;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Residual checks for traceless Codazzi operators and PMC surfaces in M^n(kappa) x R"};
    app.name("pmc_verify");
    app.require_subcommand(1);

    std::string cat_format = "text";
    std::string cat_id;
    auto* cat = app.add_subcommand("catalog", "list the built-in surfaces");
    cat->add_option("--format", cat_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cat->add_option("--id", cat_id, "show a single entry");

    RunConfig vcfg;
    auto* ver = app.add_subcommand("verify", "run the identity suite on a surface");
    add_run_options(ver, vcfg, true);
    ver->add_option("--format", vcfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    RunConfig fcfg;
    std::string quantity;
    bool ftilde = false;
    auto* fld = app.add_subcommand("field", "sample a scalar field as CSV");
    add_run_options(fld, fcfg, false);
    fld->add_option("--quantity", quantity, "K, normT, normS, detS or mu_integrand")->required();
    fld->add_flag("--tilde", ftilde, "use the minimal-surface operator S~ for normS and detS");

    RunConfig hcfg;
    std::string theorem;
    double eps = 0.1;
    double c = 0.0;
    bool htilde = false;
    auto* hyp = app.add_subcommand("hypothesis", "evaluate a theorem checker");
    add_run_options(hyp, hcfg, false);
    hyp->add_option("--theorem", theorem, "1.2, 1.3, 3.1 or cor")->required();
    hyp->add_option("--eps", eps, "epsilon of the hypotheses");
    hyp->add_option("--c", c, "c of the kappa > 0 hypotheses");
    hyp->add_flag("--tilde", htilde, "use S~ for theorem 1.2");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_arguments;
    }

    try {
        if (cat->parsed()) return cmd_catalog(cat_format, cat_id, out);
        if (ver->parsed()) return cmd_verify(vcfg, out, err);
        if (fld->parsed()) return cmd_field(fcfg, quantity, ftilde, out);
        if (hyp->parsed()) return cmd_hypothesis(hcfg, theorem, eps, c, htilde, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return bad_arguments;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return numerical_error;
    }
    return bad_arguments;
}

} // namespace pmc::cli
