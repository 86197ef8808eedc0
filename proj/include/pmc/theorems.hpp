#pragma once

// Hypothesis evaluators and conclusion checks for the Klotz-Osserman type
// statements on a sampled chart. A chart can falsify a global statement but
// never confirm it, so verdicts read "consistent", "inapplicable" or
// "counterexample-candidate".

#include "pmc/codazzi.hpp"
#include "pmc/sweep.hpp"

#include <string>
#include <vector>

namespace pmc {

inline constexpr double kConclusionTolerance = 1e-8;  // K == 0, constancy, K det S == 0
inline constexpr double kSignTolerance = 1e-8;        // K >= 0, K <= 0
inline constexpr double kStrictMargin = 1e-10;        // slack required by a strict inequality
inline constexpr double kGateTolerance = 1e-8;        // Codazzi and PMC gates

enum class TheoremId { thm_1_2, thm_1_3, thm_3_1, corollaries };

enum class Outcome { consistent, inapplicable, counterexample_candidate };

std::string to_string(TheoremId id);
std::string to_string(Outcome o);
// Accepts "1.2", "1.3", "3.1", "cor".
TheoremId parse_theorem_id(const std::string& s);

struct Hypothesis {
    std::string name;
    bool satisfied = false;
    double margin = 0.0; // signed slack: >= 0 (or > 0 for strict inequalities) when satisfied
};

struct Conclusion {
    std::string claim;
    double residual = 0.0;
    bool passed = false;
};

struct TheoremVerdict {
    TheoremId theorem_id = TheoremId::thm_1_2;
    std::string branch;
    std::vector<Hypothesis> hypotheses;
    std::vector<Conclusion> conclusion_checked; // evaluated only when applicable
    bool applicable = false;
    std::vector<std::string> notes;

    [[nodiscard]] Outcome outcome() const;
};

// Traceless Codazzi operator S with K >= 0, |det S| <= eps or K <= 0, |det S| >= eps > 0.
// Throws PreconditionError when the field fails the traceless Codazzi gate.
TheoremVerdict check_theorem_1_2(const SurfaceSpec& s, const CodazziField& field, const Grid& grid, double eps,
                                 Execution ex = Execution::parallel);

// Non-minimal PMC surfaces with K <= 0 and kappa != 0; the pointwise sum of
// det A_i over the auxiliary normal directions enters the hypotheses.
// Throws MinimalSurfaceError at minimal points and PreconditionError for
// kappa = 0 or a failed PMC gate; InvalidArgument for eps <= 0 (kappa < 0)
// or c outside [0, 1) (kappa > 0).
TheoremVerdict check_theorem_3_1(const SurfaceSpec& s, const Grid& grid, double eps, double c,
                                 Execution ex = Execution::parallel);

// Same structure with the grid supremum mu replacing the pointwise term.
TheoremVerdict check_theorem_1_3(const SurfaceSpec& s, const Grid& grid, double eps, double c,
                                 Execution ex = Execution::parallel);

// Minimal surfaces: K <= 0 and |T| > eps imply K == 0 and |T| constant, with the
// classification check |alpha|^2 = 2 kappa (1 - |T|^2); for kappa < 0 the surface
// must be a vertical cylinder (eta == 0). The K >= 0 alternative is never applicable:
// its hypotheses and a note are reported. Throws PreconditionError on non-minimal
// input, InvalidArgument for eps <= 0.
TheoremVerdict check_corollaries(const SurfaceSpec& s, const Grid& grid, double eps,
                                 Execution ex = Execution::parallel);

} // namespace pmc
