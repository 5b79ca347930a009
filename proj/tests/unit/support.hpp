#pragma once

#include <algorithm>
#include <cmath>

namespace pftest {

inline double rel_dev(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace pftest
