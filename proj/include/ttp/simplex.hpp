#pragma once

#include <vector>

#include "ttp/model.hpp"
#include "ttp/numeric.hpp"

namespace ttp {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

const char* to_string(LpStatus s);

enum class PivotRule {
    SmallestIndex,      // Bland's rule throughout; the slow-but-safe option
    LargestViolation,   // steepest reduced cost; falls back to Bland on long
                        // degenerate runs, which keeps termination guaranteed
};

struct SimplexOptions {
    enum class Mode { Float, Exact } mode = Mode::Float;
    double tol = 1e-7;         // feasibility / reduced-cost tolerance in float mode
    long max_iterations = 500000;
    PivotRule rule = PivotRule::LargestViolation;

    static SimplexOptions float_mode() { return {}; }
    static SimplexOptions exact_mode() {
        SimplexOptions o;
        o.mode = Mode::Exact;
        return o;
    }
};

struct LpResult {
    LpStatus status = LpStatus::IterationLimit;
    double objective = 0.0;
    Rational objective_exact;            // filled in exact mode
    std::vector<double> primal;          // structural variables
    std::vector<Rational> primal_exact;  // filled in exact mode
    long iterations = 0;
    bool exact = false;
};

/// Two-phase bounded-variable primal simplex over the model's rows with all
/// variables in [0, 1]. Float mode runs on doubles; exact mode keeps every
/// tableau row as an integer vector with a row denominator, so all pivots
/// are exact and Optimal means exactly feasible and exactly optimal.
LpResult solve_simplex(const Model& model, const SimplexOptions& options = {});

/// Largest row violation of the result against the model (exact arithmetic
/// for exact results, doubles otherwise). Used as a post-check.
double max_row_residual(const Model& model, const LpResult& result);

}  // namespace ttp
