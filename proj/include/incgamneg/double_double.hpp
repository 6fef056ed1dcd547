#pragma once

#include <cmath>

// Compact double-double arithmetic (~31 significant digits).  The basic
// error-free transformations follow the usual TwoSum/TwoProd constructions
// with an FMA product.  Exponent range is that of double; no wider.
//
// This backs the verification oracles and the log-space exponent assembly
// of the main evaluator.

namespace incgamneg::dd {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi; }
};

using DD = DoubleDouble;

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// requires |a| >= |b| (or a == 0)
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD renorm(double hi, double lo) { return quick_two_sum(hi, lo); }

inline DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    double lo = s.lo + t.hi;
    DD r = quick_two_sum(s.hi, lo);
    lo = r.lo + t.lo;
    return quick_two_sum(r.hi, lo);
}

inline DD add(DD a, double b) {
    DD s = two_sum(a.hi, b);
    return quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD neg(DD a) { return {-a.hi, -a.lo}; }
inline DD sub(DD a, DD b) { return add(a, neg(b)); }
inline DD sub(DD a, double b) { return add(a, -b); }
inline DD sub(double a, DD b) { return add(neg(b), a); }

inline DD mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline DD mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD div(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return add(q, q3);
}

inline DD div(DD a, double b) { return div(a, DD(b)); }
inline DD div(double a, DD b) { return div(DD(a), b); }

inline DD operator+(DD a, DD b) { return add(a, b); }
inline DD operator+(DD a, double b) { return add(a, b); }
inline DD operator+(double a, DD b) { return add(b, a); }
inline DD operator-(DD a) { return neg(a); }
inline DD operator-(DD a, DD b) { return sub(a, b); }
inline DD operator-(DD a, double b) { return sub(a, b); }
inline DD operator-(double a, DD b) { return sub(a, b); }
inline DD operator*(DD a, DD b) { return mul(a, b); }
inline DD operator*(DD a, double b) { return mul(a, b); }
inline DD operator*(double a, DD b) { return mul(b, a); }
inline DD operator/(DD a, DD b) { return div(a, b); }
inline DD operator/(DD a, double b) { return div(a, DD(b)); }
inline DD operator/(double a, DD b) { return div(DD(a), b); }

inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b) { return b < a; }

inline DD fabs(DD a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? neg(a) : a; }

DD sqrt(DD a);
DD exp(DD a);       // overflows to +inf / underflows to 0 like double
DD log(DD a);       // a > 0
DD sin_small(DD a); // |a| <= pi/2 + eps; no argument reduction
DD cos_small(DD a);
DD sinh(DD a);
DD cosh(DD a);
DD pow_int(DD base, long n);

/// log Gamma(x) for x > 0, to full double-double accuracy.
DD log_gamma(DD x);

}  // namespace incgamneg::dd
