// Floating-point phase sums. Cross-check path only: the test suites use
// this to confirm the exact collapse results numerically. No invariant
// computation includes this header.

#pragma once

#include "abtv/rational_angle.hpp"

#include <complex>
#include <numbers>
#include <vector>

namespace abtv {

inline std::complex<double> unit_phase(const RationalAngle& a) {
    const double theta =
        a.num().convert_to<double>() / a.den().convert_to<double>();
    return std::polar(1.0, 2.0 * std::numbers::pi * theta);
}

/// sum of e^{2 pi i theta} over the given angles, in double precision.
inline std::complex<double> phase_sum_numeric(const std::vector<RationalAngle>& angles) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& a : angles) acc += unit_phase(a);
    return acc;
}

}  // namespace abtv
