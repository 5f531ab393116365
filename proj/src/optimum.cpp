#include "ttp/optimum.hpp"

#include <stdexcept>

namespace ttp {

bool VariantFilter::admits(const Tournament& t) const {
    if (mirrored && !is_mirrored(t)) return false;
    if (no_repeaters && has_repeater(t)) return false;
    if (streak_cap > 0 && longest_streak(t) > streak_cap) return false;
    return true;
}

EnumeratedOptimum enumeration_optimum(const Instance& inst, const VariantFilter& filter) {
    if (inst.team_count() != 4) {
        throw std::invalid_argument("exhaustive optimum is available for n = 4 only");
    }
    EnumeratedOptimum out{Rational(0), std::nullopt, 0};
    enumerate_tournaments(4, [&](const Tournament& t) {
        if (!filter.admits(t)) return;
        ++out.feasible_count;
        Rational d = total_distance(t, inst);
        if (!out.schedule || d < out.best) {
            out.best = d;
            out.schedule = t;
        }
    });
    if (!out.schedule) throw std::runtime_error("no tournament satisfies the requested restrictions");
    return out;
}

}  // namespace ttp
