#include "incgamneg/double_double.hpp"

#include <limits>

#include "generated/uae_tables.hpp"

namespace incgamneg::dd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

inline DD const_ln2() { return {tables::k_ln2_hi, tables::k_ln2_lo}; }
inline DD const_half_ln_two_pi() {
    return {tables::k_half_ln_two_pi_hi, tables::k_half_ln_two_pi_lo};
}
}  // namespace

DD sqrt(DD a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    double x = std::sqrt(a.hi);
    // one Newton step on x = sqrt(a): x' = x + (a - x^2)/(2x)
    DD x2 = two_prod(x, x);
    DD r = sub(a, x2);
    return add(DD(x), r.hi / (2.0 * x));
}

DD exp(DD a) {
    if (a.hi > 710.0) return {kInf, 0.0};
    if (a.hi < -746.0) return {0.0, 0.0};
    // a = m ln2 + r, |r| <= ln2/2; exp(r) by Taylor on r/64, squared back.
    double m = std::nearbyint(a.hi / tables::k_ln2_hi);
    DD r = sub(a, mul(const_ln2(), m));
    r = mul(r, 1.0 / 64.0);
    // Taylor sum, |r| < 0.0055: 12 terms reach ~1e-35
    DD sum(1.0);
    DD term(1.0);
    for (int k = 1; k <= 12; ++k) {
        term = mul(term, r);
        term = mul(term, 1.0 / k);
        sum = add(sum, term);
    }
    for (int i = 0; i < 6; ++i) sum = mul(sum, sum);
    int mi = static_cast<int>(m);
    return {std::ldexp(sum.hi, mi), std::ldexp(sum.lo, mi)};
}

DD log(DD a) {
    // Newton iteration on exp(y) = a from the double seed.
    double y0 = std::log(a.hi);
    DD y(y0);
    for (int i = 0; i < 2; ++i) {
        DD e = exp(y);
        y = add(y, sub(div(a, e), 1.0));
    }
    return y;
}

DD sin_small(DD a) {
    DD sum = a;
    DD term = a;
    DD a2 = mul(a, a);
    for (int k = 1; k <= 16; ++k) {
        term = mul(term, a2);
        term = mul(term, -1.0 / ((2.0 * k) * (2.0 * k + 1.0)));
        sum = add(sum, term);
    }
    return sum;
}

DD cos_small(DD a) {
    DD sum(1.0);
    DD term(1.0);
    DD a2 = mul(a, a);
    for (int k = 1; k <= 16; ++k) {
        term = mul(term, a2);
        term = mul(term, -1.0 / ((2.0 * k - 1.0) * (2.0 * k)));
        sum = add(sum, term);
    }
    return sum;
}

DD sinh(DD a) {
    if (std::fabs(a.hi) < 0.5) {
        DD sum = a;
        DD term = a;
        DD a2 = mul(a, a);
        for (int k = 1; k <= 14; ++k) {
            term = mul(term, a2);
            term = mul(term, 1.0 / ((2.0 * k) * (2.0 * k + 1.0)));
            sum = add(sum, term);
        }
        return sum;
    }
    DD e = exp(a);
    return mul(sub(e, div(1.0, e)), 0.5);
}

DD cosh(DD a) {
    DD e = exp(a);
    return mul(add(e, div(1.0, e)), 0.5);
}

DD pow_int(DD base, long n) {
    if (n == 0) return DD(1.0);
    bool invert = n < 0;
    unsigned long k = invert ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    DD acc(1.0);
    DD b = base;
    while (k) {
        if (k & 1ul) acc = mul(acc, b);
        b = mul(b, b);
        k >>= 1;
    }
    return invert ? div(1.0, acc) : acc;
}

DD log_gamma(DD x) {
    // Lift into the Stirling region, then
    //   log Gamma(y) = (y - 1/2) log y - y + log(2 pi)/2 + S(y).
    constexpr double kStirlingMin = 20.0;
    DD shift(0.0);
    DD y = x;
    while (y.hi < kStirlingMin) {
        shift = add(shift, log(y));
        y = add(y, 1.0);
    }
    DD ly = log(y);
    DD res = mul(sub(y, 0.5), ly);
    res = sub(res, y);
    res = add(res, const_half_ln_two_pi());
    DD inv = div(1.0, y);
    DD inv2 = mul(inv, inv);
    DD p = inv;
    DD s(0.0);
    for (const auto& t : tables::kStirling) {
        s = add(s, mul(p, DD(t.hi, t.lo)));
        p = mul(p, inv2);
        if (std::fabs(p.hi * 1e-3) < 1e-40) break;
    }
    res = add(res, s);
    return sub(res, shift);
}

}  // namespace incgamneg::dd
