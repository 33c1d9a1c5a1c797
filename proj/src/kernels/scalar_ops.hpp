#pragma once

#include <cstddef>

// Per-element reference arithmetic shared by the scalar kernels and the
// remainder loops of the SIMD kernels.
namespace infcomp::kernels::detail {

struct Pair {
    double re;
    double im;
};

inline Pair mul(Pair a, Pair b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// Left-to-right binary powering, exponent >= 1.
inline Pair power(Pair w, unsigned exponent) {
    unsigned bit = 1U << (31 - __builtin_clz(exponent));
    Pair acc = w;
    for (bit >>= 1; bit != 0; bit >>= 1) {
        acc = mul(acc, acc);
        if (exponent & bit) {
            acc = mul(acc, w);
        }
    }
    return acc;
}

inline void add_monomial_one(double &re, double &im, double cre, double cim, unsigned exponent) {
    const Pair p = power({re, im}, exponent);
    const Pair t = mul({cre, cim}, p);
    re = re + t.re;
    im = im + t.im;
}

inline void apply_polynomial_one(double &re, double &im, const double *cre, const double *cim, std::size_t n) {
    Pair acc{cre[n - 1], cim[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = mul(acc, {re, im});
        acc.re = acc.re + cre[k];
        acc.im = acc.im + cim[k];
    }
    re = acc.re;
    im = acc.im;
}

} // namespace infcomp::kernels::detail
