#pragma once

#include <array>
#include <cstdint>
#include <span>

// Numeric tables produced offline by tools/gen_coeffs.py in exact rational
// arithmetic (see that script for derivations and self-checks).

namespace incgamneg::tables {

inline constexpr int kNumD = 67;       // d_0 .. d_66
inline constexpr int kNumGammaRecip = 17;
inline constexpr int kNumC = 35;       // C_0 .. C_34

struct StirlingTerm {
    int k;          // power of 1/x (odd)
    double hi;      // S_k = B_{k+1}/((k+1) k), double-double split
    double lo;
};

extern const std::uint64_t kChecksum;
extern const std::array<double, kNumD> kD;
extern const std::array<double, kNumGammaRecip> kGammaRecip;
extern const std::array<StirlingTerm, 20> kStirling;

// Numerator polynomial of the lambda-part of C_n, degree 2n:
//   C_n(eta) = N_n(u)/u^(2n+1) + (-1)^(n+1) (2n-1)!!/eta^(2n+1),  u = lambda-1.
std::span<const double> cn_numerator_u(int n);       // powers of u
std::span<const double> cn_numerator_lambda(int n);  // powers of lambda

extern const double k_pi_hi, k_pi_lo;
extern const double k_pi_half_hi, k_pi_half_lo;
extern const double k_two_pi_hi, k_two_pi_lo;
extern const double k_ln2_hi, k_ln2_lo;
extern const double k_inv_pi_hi, k_inv_pi_lo;
extern const double k_half_ln_two_pi_hi, k_half_ln_two_pi_lo;
extern const double k_sqrt_pi_hi, k_sqrt_pi_lo;

}  // namespace incgamneg::tables
