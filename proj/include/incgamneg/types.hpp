#pragma once

#include <cmath>
#include <stdexcept>

namespace incgamneg {

/// Range classification of a computed value.  Overflow/underflow of
/// gamma*(a,z) inside the advertised domain is an expected outcome, not an
/// error: the function itself leaves double range for large |a|.
enum class Status { Ok, Overflow, Underflow };

/// Which branch of the computational scheme produced (or would produce)
/// the value.
enum class Method {
    SeriesPos,     // power series, a > 0
    SeriesNegEps,  // eps-extracted series, a = -n + eps
    ExactNegInt,   // gamma*(-n, z) = z^n
    UaeDirect,     // uniform asymptotic expansion
    UaeRecursion,  // UAE at a lifted parameter + backward recursion
    Poincare,      // large-|z| expansion, a > 0
};

const char* to_string(Status s);
const char* to_string(Method m);

/// Evaluation point (a, z) with z < 0.  x = -z is the positive argument all
/// internal formulas work with; the sign flip is exact.
struct EvalPoint {
    double a;
    double z;

    EvalPoint(double a_, double z_) : a(a_), z(z_) {
        if (!std::isfinite(a) || !std::isfinite(z))
            throw std::domain_error("EvalPoint: a and z must be finite");
        if (z >= 0.0)
            throw std::domain_error("EvalPoint: z must be negative");
    }

    double x() const { return -z; }
};

struct EvalResult {
    double value = 0.0;
    Status status = Status::Ok;
    Method method = Method::SeriesPos;
    int terms_used = 0;
};

/// Tuning knobs of the computational scheme.  The region thresholds
/// (z_poincare, a_series_floor, z_series_wall, z_uae_wall) follow the
/// published scheme; the expansion orders and switches were calibrated
/// against the double-double oracle (see tests/acceptance_main.cpp).
struct Config {
    double rel_tol = 5e-14;
    double z_poincare = -50.0;     // a>0: Poincare for z <= z_poincare
    double a_series_floor = -5.0;  // a<0 series region: a >= a_series_floor ...
    double z_series_wall = -1.5;   // ... or z >= z_series_wall
    double z_uae_wall = -100.0;    // within it: recursion path for z < z_uae_wall
    double eta_switch = 2.1;       // |eta| boundary between the two T paths
    int n_small_eta = 64;          // order N of the backward alpha recursion
    int n_c_coeffs = 34;           // highest C_n of the large-eta expansion
    double uae_start_min = 6.0;    // recursion path lifts a at least this high
    double a_lift_min = 32.0;      // lift ceiling for small-a large-eta points
    double poincare_a_guard = 0.9; // Poincare needs a <= guard * |z|
};

}  // namespace incgamneg
