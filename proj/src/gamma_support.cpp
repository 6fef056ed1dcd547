#include "incgamneg/gamma_support.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>

#include "generated/uae_tables.hpp"

namespace incgamneg {

using dd::DD;

const CoeffTables& default_coeff_tables() {
    static const CoeffTables t{
        {tables::kD.data(), tables::kD.size()},
        {tables::kGammaRecip.data(), tables::kGammaRecip.size()},
        tables::kNumC - 1,
    };
    return t;
}

bool coeff_tables_checksum_ok() {
    std::uint64_t h = 0xCBF29CE484222325ull;
    auto feed = [&h](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xFFu;
            h *= 0x100000001B3ull;
        }
    };
    for (double v : tables::kD) feed(v);
    for (double v : tables::kGammaRecip) feed(v);
    for (const auto& t : tables::kStirling) {
        feed(t.hi);
        feed(t.lo);
    }
    for (int n = 0; n < tables::kNumC; ++n)
        for (double v : tables::cn_numerator_u(n)) feed(v);
    for (int n = 0; n < tables::kNumC; ++n)
        for (double v : tables::cn_numerator_lambda(n)) feed(v);
    const double consts[] = {
        tables::k_pi_hi, tables::k_pi_lo,
        tables::k_pi_half_hi, tables::k_pi_half_lo,
        tables::k_two_pi_hi, tables::k_two_pi_lo,
        tables::k_ln2_hi, tables::k_ln2_lo,
        tables::k_inv_pi_hi, tables::k_inv_pi_lo,
        tables::k_half_ln_two_pi_hi, tables::k_half_ln_two_pi_lo,
        tables::k_sqrt_pi_hi, tables::k_sqrt_pi_lo,
    };
    for (double v : consts) feed(v);
    return h == tables::kChecksum;
}

dd::DoubleDouble log_gamma_dd(double a) {
    if (a <= 0.0) throw std::domain_error("log_gamma_dd: requires a > 0");
    return dd::log_gamma(DD(a));
}

SinCosPi trig_pi(double x) {
    if (std::fabs(x) >= 9.007199254740992e15) {
        // every double this large is an even integer
        return {0.0, 1.0};
    }
    double m = std::nearbyint(x);
    double f = x - m;  // exact, |f| <= 0.5
    double par = std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0;
    double s, c;
    if (f == 0.0) {
        s = 0.0;
        c = 1.0;
    } else if (f == 0.5 || f == -0.5) {
        s = std::copysign(1.0, f);
        c = 0.0;
    } else {
        // pi*f in double-double, then first-order correction of the tail
        DD pf = dd::add(dd::two_prod(tables::k_pi_hi, f), tables::k_pi_lo * f);
        double sh = std::sin(pf.hi);
        double ch = std::cos(pf.hi);
        s = sh + pf.lo * ch;
        c = ch - pf.lo * sh;
    }
    return {par * s, par * c};
}

NearIntegerSplit near_integer_decompose(double a) {
    if (a > 0.25) throw std::domain_error("near_integer_decompose: requires a <= 0.25");
    double n = std::floor(-a + 0.5);  // ties go up so that eps = +0.5
    if (n < 0.0) n = 0.0;
    double eps = a + n;  // exact: operands within a factor 2
    return {static_cast<long>(n), eps};
}

SignedLogGamma gamma_signed_log(double a) {
    if (a > 0.0) {
        DD lg = dd::log_gamma(DD(a));
        return {lg.hi + lg.lo, +1};
    }
    if (a == std::floor(a))
        throw std::domain_error("gamma_signed_log: pole at nonpositive integer");
    // reflection: Gamma(a) Gamma(1-a) = pi / sin(pi a)
    SinCosPi sc = trig_pi(a);
    DD lg1ma = dd::log_gamma(DD(1.0 - a));
    DD res = dd::sub(dd::log(DD(tables::k_pi_hi, tables::k_pi_lo)),
                     dd::add(dd::log(DD(std::fabs(sc.sin_pi))), lg1ma));
    return {res.hi + res.lo, sc.sin_pi > 0.0 ? +1 : -1};
}

double gamma_star(double a) {
    if (a <= 0.0) throw std::domain_error("gamma_star: requires a > 0");
    if (a >= 8.0) {
        // Stirling series of log Gamma*(a); no cancellation
        double inv = 1.0 / a;
        double inv2 = inv * inv;
        double p = inv;
        double s = 0.0;
        for (const auto& t : tables::kStirling) {
            double term = p * t.hi;
            s += term;
            if (std::fabs(term) < 1e-20) break;
            p *= inv2;
        }
        return std::exp(s);
    }
    // log Gamma* = log Gamma(a) + a - (a - 1/2) log a - log(2 pi)/2,
    // assembled in double-double (the terms cancel to O(1/a))
    DD w = dd::log_gamma(DD(a));
    w = dd::add(w, a);
    w = dd::sub(w, dd::mul(dd::log(DD(a)), dd::sub(DD(a), 0.5)));
    w = dd::sub(w, DD(tables::k_half_ln_two_pi_hi, tables::k_half_ln_two_pi_lo));
    return std::exp(w.hi) * (1.0 + w.lo);
}

std::span<const double> recip_gamma_star_coeffs(int n_max) {
    if (n_max < 0 || n_max >= tables::kNumGammaRecip)
        throw std::domain_error("recip_gamma_star_coeffs: n_max out of range");
    return {tables::kGammaRecip.data(), static_cast<std::size_t>(n_max + 1)};
}

}  // namespace incgamneg
