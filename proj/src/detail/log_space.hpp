#pragma once

#include <cmath>
#include <limits>

#include "incgamneg/double_double.hpp"
#include "incgamneg/types.hpp"

// Log-space assembly of signed magnitudes.  Every additive piece of the
// evaluator is produced as sign * exp(w) with w accumulated in double-double,
// so that a single rounding applies per piece and range excursions are
// classified instead of propagating infs/zeros silently.

namespace incgamneg::detail {

inline constexpr double kLnOverflow = 709.782712893384;    // ln(DBL_MAX)
inline constexpr double kLnUnderflow = -708.3964185322641; // ln(2^-1022)

struct SignedExp {
    double value;
    Status status;
};

inline SignedExp signed_exp(dd::DoubleDouble w, double sign) {
    if (sign == 0.0) return {0.0, Status::Ok};
    double s = sign > 0.0 ? 1.0 : -1.0;
    if (w.hi > kLnOverflow)
        return {s * std::numeric_limits<double>::max(), Status::Overflow};
    if (w.hi < kLnUnderflow) return {s * 0.0, Status::Underflow};
    double v = s * std::exp(w.hi) * (1.0 + w.lo);
    if (std::isinf(v))
        return {s * std::numeric_limits<double>::max(), Status::Overflow};
    if (v == 0.0 || std::fabs(v) < std::numeric_limits<double>::min())
        return {s * 0.0, Status::Underflow};
    return {v, Status::Ok};
}

/// Combine two additive pieces into a final value/status.
inline void combine_pieces(const SignedExp& p1, const SignedExp& p2,
                           double& value, Status& status) {
    if (p1.status == Status::Overflow || p2.status == Status::Overflow) {
        double s = p1.status == Status::Overflow ? p1.value : p2.value;
        value = std::copysign(std::numeric_limits<double>::max(), s);
        status = Status::Overflow;
        return;
    }
    double v = p1.value + p2.value;
    if (std::isinf(v)) {
        value = std::copysign(std::numeric_limits<double>::max(), v);
        status = Status::Overflow;
        return;
    }
    if (v == 0.0 || std::fabs(v) < std::numeric_limits<double>::min()) {
        double s = std::fabs(p1.value) >= std::fabs(p2.value) ? p1.value : p2.value;
        value = std::copysign(0.0, s == 0.0 ? 1.0 : s);
        status = Status::Underflow;
        return;
    }
    value = v;
    status = Status::Ok;
}

inline dd::DoubleDouble dd_pi() {
    return {3.141592653589793116, 1.2246467991473531772e-16};
}

}  // namespace incgamneg::detail
