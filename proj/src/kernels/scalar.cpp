#include "infcomp/kernels.hpp"

#include "scalar_ops.hpp"

#include <vector>

namespace infcomp::kernels::scalar {

void add_monomial(std::span<double> re, std::span<double> im, Complex c, unsigned exponent) {
    for (std::size_t i = 0; i < re.size(); ++i) {
        detail::add_monomial_one(re[i], im[i], c.real(), c.imag(), exponent);
    }
}

void apply_polynomial(std::span<double> re, std::span<double> im, std::span<const Complex> coeffs) {
    std::vector<double> cre(coeffs.size()), cim(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        cre[k] = coeffs[k].real();
        cim[k] = coeffs[k].imag();
    }
    for (std::size_t i = 0; i < re.size(); ++i) {
        detail::apply_polynomial_one(re[i], im[i], cre.data(), cim.data(), coeffs.size());
    }
}

} // namespace infcomp::kernels::scalar
