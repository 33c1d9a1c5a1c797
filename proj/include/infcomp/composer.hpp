#pragma once

#include "infcomp/convergence.hpp"
#include "infcomp/family.hpp"
#include "infcomp/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace infcomp {

struct ComposerOptions {
    /// Largest number of factors eval_certified / limit_series may compose.
    std::size_t max_factors = 1'000'000;
};

/// How a certified evaluation was carried out.
///
/// The tail f_{m1}..f_N is evaluated inside its certified disk of radius r1;
/// the head f_1..f_{m1-1} is applied exactly and its Lipschitz bound carries
/// the tail truncation error outward.
struct EvalPlan {
    double r1 = 0.0;
    std::size_t m1 = 1;
    std::size_t N = 1;
    /// Jet degree used for the head; 0 means the product-of-derivative-majorants bound.
    std::size_t head_degree = 0;
    double epsilon = 0.0;
    double head_lipschitz = 1.0;
    double tail_error = 0.0;
};

struct EvalResult {
    Complex value;
    double error_bound = 0.0;
    EvalPlan plan;
};

/// f_d(f_{d+1}(...f_N(z)...)), innermost first, no truncation.
Complex compose_pointwise(const FactorFamily &family, std::size_t d, std::size_t N, Complex z);

/// Same composition over a batch of points through the dispatched SIMD kernels.
/// Results are bitwise identical to the single-point overload.
std::vector<Complex> compose_pointwise(const FactorFamily &family, std::size_t d, std::size_t N,
                                       std::span<const Complex> points);

/// Bound on |H'(w)| for |w| <= radius, H = f_1 o ... o f_{m1-1}.
///
/// Multiplies per-factor derivative majorants hat(f_n)'(rho_n) where
/// rho_{m1-1} = radius and rho_n = hat(f_{n+1})(rho_{n+1}). Returns 1 for m1 = 1.
double head_lipschitz_on_disk(const FactorFamily &family, std::size_t m1, double radius);

/// head_lipschitz_on_disk over the tail image disk, radius twice
/// majorant_bound(cert, m1, infinity, r1).
double head_lipschitz(const FactorFamily &family, const ConvergenceCertificate &cert, std::size_t m1, double r1);

/// Plan valid for every |z| <= radius: split point, factor count, bounds.
EvalPlan plan_evaluation(const FactorFamily &family, const ConvergenceCertificate &cert, double radius,
                         double epsilon, const ComposerOptions &options = {});

/// Value of the infinite composition at z with |value - F(z)| <= error_bound <= epsilon.
EvalResult eval_certified(const FactorFamily &family, Complex z, double epsilon, const ComposerOptions &options = {});

struct LimitSeriesReport {
    TruncatedSeries series = TruncatedSeries::identity();
    /// Last factor composed.
    std::size_t factors_used = 0;
    /// Largest coefficient change at the final step.
    double last_change = 0.0;
    /// True when the remaining tail is empty, so the jet is exact.
    bool exact = false;
};

/// Degree-D jet at 0 of the infinite composition, composed until every
/// coefficient moves by less than epsilon between successive factors.
LimitSeriesReport limit_series_report(const FactorFamily &family, std::size_t degree, double epsilon,
                                      const ComposerOptions &options = {});
TruncatedSeries limit_series(const FactorFamily &family, std::size_t degree, double epsilon,
                             const ComposerOptions &options = {});

} // namespace infcomp
