#include "ttp/numeric.hpp"

#include <cmath>
#include <cstdio>

namespace ttp {

std::string rational_to_text(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", q.get_d());
    return buf;
}

std::string percent_to_text(double percent) {
    double scaled = percent * 10.0;
    double rounded = percent >= 0 ? std::floor(scaled + 0.5) : std::ceil(scaled - 0.5);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", rounded / 10.0);
    return buf;
}

}  // namespace ttp
