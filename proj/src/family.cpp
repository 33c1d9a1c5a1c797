#include "infcomp/family.hpp"

#include "infcomp/error.hpp"

#include <cmath>
#include <string>

namespace infcomp {

Complex ipow(Complex z, std::size_t n) {
    Complex result{1.0, 0.0};
    Complex base = z;
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n != 0) {
            base *= base;
        }
    }
    return result;
}

FactorFamily FactorFamily::geometric(Complex s, unsigned exponent) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) || !(std::abs(s) > 1.0)) {
        throw ValidationError("geometric family needs |s| > 1");
    }
    if (exponent < 2) {
        throw ValidationError("family exponent r0 must be at least 2");
    }
    return FactorFamily(GeometricParams{s, exponent});
}

FactorFamily FactorFamily::power_law(double p, unsigned exponent) {
    if (!std::isfinite(p) || !(p > 0.0)) {
        throw ValidationError("power_law family needs p > 0");
    }
    if (exponent < 2) {
        throw ValidationError("family exponent r0 must be at least 2");
    }
    return FactorFamily(PowerLawParams{p, exponent});
}

FactorFamily FactorFamily::explicit_list(std::vector<TruncatedSeries> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i].is_normalized()) {
            throw ValidationError("explicit factor " + std::to_string(i + 1) +
                                  " is not normalized (need c_0 = 0, c_1 = 1)");
        }
        for (const Complex &c : factors[i].coeffs()) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                throw ValidationError("explicit factor " + std::to_string(i + 1) + " has a non-finite coefficient");
            }
        }
    }
    return FactorFamily(ExplicitParams{std::move(factors)});
}

FamilyKind FactorFamily::kind() const noexcept {
    switch (params_.index()) {
    case 0:
        return FamilyKind::explicit_list;
    case 1:
        return FamilyKind::geometric;
    default:
        return FamilyKind::power_law;
    }
}

Complex FactorFamily::coefficient(std::size_t n) const {
    if (n == 0) {
        throw ValidationError("factor index is 1-based");
    }
    if (const auto *g = std::get_if<GeometricParams>(&params_)) {
        // Powers of 1/s underflow to zero instead of overflowing.
        return ipow(1.0 / g->s, n);
    }
    if (const auto *pl = std::get_if<PowerLawParams>(&params_)) {
        return Complex{std::pow(static_cast<double>(n), -pl->p), 0.0};
    }
    throw ValidationError("coefficient() is only defined for closed-form families");
}

unsigned FactorFamily::exponent() const {
    if (const auto *g = std::get_if<GeometricParams>(&params_)) {
        return g->exponent;
    }
    if (const auto *pl = std::get_if<PowerLawParams>(&params_)) {
        return pl->exponent;
    }
    throw ValidationError("exponent() is only defined for closed-form families");
}

std::size_t FactorFamily::explicit_length() const noexcept {
    if (const auto *e = std::get_if<ExplicitParams>(&params_)) {
        return e->factors.size();
    }
    return 0;
}

TruncatedSeries FactorFamily::factor(std::size_t n) const {
    if (n == 0) {
        throw ValidationError("factor index is 1-based");
    }
    if (const auto *e = std::get_if<ExplicitParams>(&params_)) {
        return n <= e->factors.size() ? e->factors[n - 1] : TruncatedSeries::identity();
    }
    std::vector<Complex> coeffs(exponent() + 1);
    coeffs[1] = 1.0;
    coeffs[exponent()] = coefficient(n);
    return TruncatedSeries(std::move(coeffs));
}

} // namespace infcomp
