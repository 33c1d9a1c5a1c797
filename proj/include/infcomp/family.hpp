#pragma once

#include "infcomp/series.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace infcomp {

/// f_n(z) = z + z^exponent / s^n, |s| > 1.
struct GeometricParams {
    Complex s;
    unsigned exponent = 2;
};

/// f_n(z) = z + z^exponent / n^p, p > 0.
struct PowerLawParams {
    double p = 0.0;
    unsigned exponent = 2;
};

/// f_1..f_K given as jets; f_n = z for n > K.
struct ExplicitParams {
    std::vector<TruncatedSeries> factors;
};

enum class FamilyKind { explicit_list, geometric, power_law };

/// The factor sequence {f_n}, n >= 1, every member normalized.
class FactorFamily {
  public:
    static FactorFamily geometric(Complex s, unsigned exponent = 2);
    static FactorFamily power_law(double p, unsigned exponent);
    static FactorFamily explicit_list(std::vector<TruncatedSeries> factors);

    FamilyKind kind() const noexcept;
    const std::variant<ExplicitParams, GeometricParams, PowerLawParams> &params() const noexcept { return params_; }

    /// f_n as a jet; n is 1-based.
    TruncatedSeries factor(std::size_t n) const;

    /// Closed-form families only: f_n = z + coefficient(n) z^exponent().
    bool is_monomial() const noexcept { return kind() != FamilyKind::explicit_list; }
    Complex coefficient(std::size_t n) const;
    unsigned exponent() const;

    /// Number of listed factors for explicit families, 0 otherwise.
    std::size_t explicit_length() const noexcept;

  private:
    explicit FactorFamily(std::variant<ExplicitParams, GeometricParams, PowerLawParams> params)
        : params_(std::move(params)) {}

    std::variant<ExplicitParams, GeometricParams, PowerLawParams> params_;
};

/// z^n by binary powering.
Complex ipow(Complex z, std::size_t n);

} // namespace infcomp
