#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ttp/schedule.hpp"

namespace ttp {

enum class Sense { LessEqual, Equal, GreaterEqual };

/// One linear constraint over the global column layout. Terms are sorted
/// by column and never store zero coefficients; the tag identifies the row
/// uniquely, as "family[indices]".
struct Row {
    std::string tag;
    Sense sense = Sense::LessEqual;
    Rational rhs;
    std::vector<std::pair<int, Rational>> terms;
};

struct BuildOptions {
    bool mirrored = false;
    bool no_repeaters = false;
    /// Cap on consecutive home (resp. away) matches; enables the window rows.
    std::optional<int> streak_cap;

    bool lifted_away_away = false;   // stronger rows replacing the away-away links
    bool lifted_home_away = false;   // stronger rows replacing home-away and away-home links
    bool flow_bounds = false;        // leave/enter every foreign venue at least once
    bool flow_bounds_home = false;   // leave/enter the own venue at least once
    bool home_flow = false;          // slot-coupled bounds on leaving/entering home
    bool flow_equations = false;     // foreign-venue flow bounds as equations
    bool streak_flow = false;        // departures/returns forced by the streak cap; needs streak_cap
    bool keep_unlifted = false;      // keep the replaced base rows alongside lifted ones
};

/// The play/travel program: minimize travelled distance subject to the
/// round-robin structure and travel-linking rows. All variables live in
/// [0, 1]; `integral` marks them binary.
struct Model {
    int n;
    Layout layout;
    std::string name;
    std::vector<Rational> objective;  // per column
    std::vector<Row> rows;
    bool integral = true;

    int num_vars() const { return layout.total_vars(); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    long num_nonzeros() const;

    std::string var_name(int col) const;  // x_k_i_j / y_t_i_j
    /// Row counts keyed by tag family (the part before '[').
    std::map<std::string, int> family_counts() const;
};

Model build_model(const Instance& inst, const BuildOptions& opts);

/// Drops integrality; bounds stay [0, 1]. Idempotent.
Model relax(Model m);

// Variant rows.
void add_mirrored(Model& m);
void add_no_repeaters(Model& m);
void add_streak_caps(Model& m, int cap);

// Strengthening rows.
void add_lifted_away_away(Model& m);
void add_lifted_home_away(Model& m);
void add_lifted_away_home(Model& m);
void add_flow_bounds(Model& m, bool include_home_venue);
void add_home_venue_flow_bounds(Model& m);
void add_home_flow(Model& m);
void add_flow_equations(Model& m);
void add_streak_flow(Model& m, int cap);

/// Integer view of a row for fast exact evaluation; throws if any
/// coefficient or the right-hand side is not an integer.
struct IntRow {
    Sense sense;
    long rhs;
    std::vector<std::pair<int, long>> terms;
};
IntRow to_int_row(const Row& row);
long eval_int_row(const IntRow& row, std::span<const std::uint8_t> point);
bool int_row_satisfied(const IntRow& row, std::span<const std::uint8_t> point);

}  // namespace ttp
