#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ttp/model.hpp"

namespace ttp {

/// Writes CPLEX-style LP text: objective, rows named by their tags,
/// explicit [0,1] bounds, a Binaries section when the model is integral.
/// Deterministic ordering, so repeated exports are byte-identical.
void export_lp(const Model& m, const std::string& path);

/// Writes fixed-layout MPS with the same names; integral models declare
/// the columns inside INTORG/INTEND markers.
void export_mps(const Model& m, const std::string& path);

/// Minimal LP-format reader covering the subset export_lp writes; used to
/// round-trip exports and to sanity-check files handed to external solvers.
struct LpFileRow {
    std::string name;
    Sense sense;
    double rhs;
    std::vector<std::pair<std::string, double>> terms;
};

struct LpFileData {
    bool minimize = true;
    std::vector<std::pair<std::string, double>> objective;
    std::vector<LpFileRow> rows;
    std::map<std::string, std::pair<double, double>> bounds;
    std::set<std::string> binaries;
    std::set<std::string> variables;

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_vars() const { return variables.size(); }
};

LpFileData parse_lp(const std::string& path);

}  // namespace ttp
