#pragma once

#include <cmath>
#include <cstdint>

namespace beattykit {

// Unevaluated double-double: value = hi + lo with |lo| <= ulp(hi)/2.
// Used for phase arguments theta*n where a plain double loses the
// fractional part long before n reaches 1e8.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul_d(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

// Fractional part in [0, 1).  Exact floor on the hi limb (Sterbenz),
// then a carry fix for the lo limb.
inline double dd_frac(dd a) {
    double f = a.hi - std::floor(a.hi);
    double r = f + a.lo;
    r -= std::floor(r);
    if (r >= 1.0) r -= 1.0;
    if (r < 0.0) r += 1.0;
    return r;
}

}  // namespace beattykit
