#pragma once

#include <optional>

#include "ttp/construct.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

/// Variant restrictions applied when searching for the best schedule.
struct VariantFilter {
    bool mirrored = false;
    bool no_repeaters = false;
    int streak_cap = 0;  // 0 = unrestricted

    bool admits(const Tournament& t) const;
};

struct EnumeratedOptimum {
    Rational best;
    std::optional<Tournament> schedule;  // first optimal schedule in enumeration order
    long feasible_count = 0;
};

/// Exact optimum over all tournaments passing the filter, by exhaustive
/// enumeration. Only n = 4 instances are supported.
EnumeratedOptimum enumeration_optimum(const Instance& inst, const VariantFilter& filter);

}  // namespace ttp
