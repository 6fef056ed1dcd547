#pragma once

#include <span>

#include "incgamneg/double_double.hpp"

namespace incgamneg {

/// log |Gamma(a)| plus the sign of Gamma(a).
struct SignedLogGamma {
    double log_abs;
    int sign;  // -1 or +1
};

/// Exact split a = -n + eps with integer n >= 0 and |eps| <= 0.5
/// (ties toward eps = +0.5).  The subtraction eps = a + n is exact.
struct NearIntegerSplit {
    long n;
    double eps;
};

/// Precomputed immutable tables consumed by the expansion code: the d_n of
/// the eta power series, the reciprocal-Gamma* coefficients, and the
/// closed-form C_n numerators.  Built once, never mutated.
struct CoeffTables {
    std::span<const double> d;
    std::span<const double> gamma_recip;
    int n_c_max;  // highest available C_n
};

const CoeffTables& default_coeff_tables();

/// FNV-1a checksum over the embedded tables, recomputed at runtime.
/// Matches the constant stamped into the generated file.
bool coeff_tables_checksum_ok();

/// Signed log-gamma for any non-pole real a (reflection for a < 0).
/// Throws std::domain_error at nonpositive integers.
SignedLogGamma gamma_signed_log(double a);

/// Double-double log Gamma(a), a > 0.  Backs the log-space exponent
/// assembly of the evaluator and the oracles.
dd::DoubleDouble log_gamma_dd(double a);

/// Scaled gamma Gamma*(a) = sqrt(a/(2 pi)) e^a a^-a Gamma(a), a > 0.
/// >= 1, monotonically -> 1 as a -> infinity.
double gamma_star(double a);

/// First n_max+1 coefficients of 1/Gamma*(a) ~ sum gamma_n / a^n.
/// gamma_0 = 1, gamma_1 = -1/12, gamma_2 = 1/288, ...
std::span<const double> recip_gamma_star_coeffs(int n_max);

/// Near-integer decomposition of a <= 0.25 (see NearIntegerSplit).
NearIntegerSplit near_integer_decompose(double a);

struct SinCosPi {
    double sin_pi;
    double cos_pi;
};

/// sin(pi x), cos(pi x) with exact argument reduction: exact zeros at
/// integers resp. half-integers, correct signs everywhere.
SinCosPi trig_pi(double x);

}  // namespace incgamneg
