#include "infcomp/kernels.hpp"

#include "scalar_ops.hpp"

#include <immintrin.h>
#include <vector>

namespace infcomp::kernels::avx2 {

namespace {

struct Vec {
    __m256d re;
    __m256d im;
};

inline Vec mul(Vec a, Vec b) {
    return {_mm256_sub_pd(_mm256_mul_pd(a.re, b.re), _mm256_mul_pd(a.im, b.im)),
            _mm256_add_pd(_mm256_mul_pd(a.re, b.im), _mm256_mul_pd(a.im, b.re))};
}

inline Vec power(Vec w, unsigned exponent) {
    unsigned bit = 1U << (31 - __builtin_clz(exponent));
    Vec acc = w;
    for (bit >>= 1; bit != 0; bit >>= 1) {
        acc = mul(acc, acc);
        if (exponent & bit) {
            acc = mul(acc, w);
        }
    }
    return acc;
}

constexpr std::size_t kLanes = 4;

} // namespace

void add_monomial(std::span<double> re, std::span<double> im, Complex c, unsigned exponent) {
    const Vec cv{_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())};
    const std::size_t n = re.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const Vec w{_mm256_loadu_pd(re.data() + i), _mm256_loadu_pd(im.data() + i)};
        const Vec t = mul(cv, power(w, exponent));
        _mm256_storeu_pd(re.data() + i, _mm256_add_pd(w.re, t.re));
        _mm256_storeu_pd(im.data() + i, _mm256_add_pd(w.im, t.im));
    }
    for (; i < n; ++i) {
        detail::add_monomial_one(re[i], im[i], c.real(), c.imag(), exponent);
    }
}

void apply_polynomial(std::span<double> re, std::span<double> im, std::span<const Complex> coeffs) {
    const std::size_t terms = coeffs.size();
    std::vector<double> cre(terms), cim(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        cre[k] = coeffs[k].real();
        cim[k] = coeffs[k].imag();
    }
    const std::size_t n = re.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const Vec w{_mm256_loadu_pd(re.data() + i), _mm256_loadu_pd(im.data() + i)};
        Vec acc{_mm256_set1_pd(cre[terms - 1]), _mm256_set1_pd(cim[terms - 1])};
        for (std::size_t k = terms - 1; k-- > 0;) {
            acc = mul(acc, w);
            acc.re = _mm256_add_pd(acc.re, _mm256_set1_pd(cre[k]));
            acc.im = _mm256_add_pd(acc.im, _mm256_set1_pd(cim[k]));
        }
        _mm256_storeu_pd(re.data() + i, acc.re);
        _mm256_storeu_pd(im.data() + i, acc.im);
    }
    for (; i < n; ++i) {
        detail::apply_polynomial_one(re[i], im[i], cre.data(), cim.data(), terms);
    }
}

} // namespace infcomp::kernels::avx2
