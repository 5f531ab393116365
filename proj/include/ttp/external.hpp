#pragma once

#include <optional>
#include <string>

#include "ttp/model.hpp"
#include "ttp/simplex.hpp"

namespace ttp {

/// Result of shelling out to a user-configured LP solver. `skipped` is set
/// when no command is configured; callers treat that as a clean no-op.
struct ExternalLpResult {
    bool skipped = false;
    LpStatus status = LpStatus::Optimal;
    double objective = 0.0;
};

/// Returns the configured command template: the explicit argument if
/// nonempty, otherwise the TTP_EXT_SOLVER environment variable.
std::string external_solver_command(const std::string& explicit_template);

/// Exports the model as LP text, substitutes {input}/{output} in the
/// command template, runs it, and scrapes status and objective from the
/// output file. Used purely as a cross-check oracle.
ExternalLpResult solve_external(const Model& model, const std::string& command_template,
                                const std::string& work_dir);

/// Extracts (status, objective) from solver output text; exposed for tests.
std::optional<std::pair<LpStatus, double>> parse_solver_output(const std::string& text);

}  // namespace ttp
