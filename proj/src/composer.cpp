#include "infcomp/composer.hpp"

#include "infcomp/error.hpp"
#include "infcomp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace infcomp {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void apply_factor(const FactorFamily &family, std::size_t n, std::span<double> re, std::span<double> im) {
    if (family.is_monomial()) {
        const Complex c = family.coefficient(n);
        if (c != Complex{}) {
            kernels::add_monomial(re, im, c, family.exponent());
        }
        return;
    }
    if (n > family.explicit_length()) {
        return;
    }
    const auto &f = std::get<ExplicitParams>(family.params()).factors[n - 1];
    kernels::apply_polynomial(re, im, f.coeffs());
}

} // namespace

std::vector<Complex> compose_pointwise(const FactorFamily &family, std::size_t d, std::size_t N,
                                       std::span<const Complex> points) {
    if (d == 0) {
        throw ValidationError("compose_pointwise: factor indices are 1-based");
    }
    if (d > N) {
        throw ValidationError("compose_pointwise: need d <= N");
    }
    std::vector<double> re(points.size()), im(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        re[i] = points[i].real();
        im[i] = points[i].imag();
    }
    // Explicit families are the identity past their list.
    std::size_t top = N;
    if (!family.is_monomial()) {
        top = std::min(N, family.explicit_length());
    }
    for (std::size_t n = top; n >= d && n > 0; --n) {
        apply_factor(family, n, re, im);
    }
    std::vector<Complex> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        out[i] = Complex{re[i], im[i]};
    }
    return out;
}

Complex compose_pointwise(const FactorFamily &family, std::size_t d, std::size_t N, Complex z) {
    return compose_pointwise(family, d, N, std::span<const Complex>(&z, 1)).front();
}

double head_lipschitz_on_disk(const FactorFamily &family, std::size_t m1, double radius) {
    if (m1 == 0) {
        throw ValidationError("head_lipschitz: m1 must be at least 1");
    }
    if (!(radius >= 0.0)) {
        throw ValidationError("head_lipschitz: radius must be non-negative");
    }
    double lipschitz = 1.0;
    double rho = radius;
    for (std::size_t n = m1 - 1; n >= 1; --n) {
        const TruncatedSeries f = family.factor(n);
        lipschitz *= eval_majorant(derivative(f), rho);
        if (n > 1) {
            rho = eval_majorant(f, rho);
        }
        if (!std::isfinite(lipschitz) || !std::isfinite(rho)) {
            throw OverflowError("cannot certify head: derivative majorant overflows");
        }
    }
    return lipschitz;
}

double head_lipschitz(const FactorFamily &family, const ConvergenceCertificate &cert, std::size_t m1, double r1) {
    if (m1 == 1) {
        return 1.0;
    }
    const double image = majorant_bound(cert, m1, kUnbounded, r1);
    return head_lipschitz_on_disk(family, m1, 2.0 * image);
}

EvalPlan plan_evaluation(const FactorFamily &family, const ConvergenceCertificate &cert, double radius,
                         double epsilon, const ComposerOptions &options) {
    if (!(epsilon > 0.0)) {
        throw ValidationError("epsilon must be positive");
    }
    if (!(radius >= 0.0) || !std::isfinite(radius)) {
        throw ValidationError("evaluation radius must be finite and non-negative");
    }
    EvalPlan plan;
    plan.epsilon = epsilon;
    if (cert.is_degenerate()) {
        plan.r1 = radius;
        return plan;
    }
    plan.r1 = std::max(radius, cert.safe_radius());
    plan.m1 = plan_split(cert, plan.r1);
    plan.head_lipschitz = head_lipschitz(family, cert, plan.m1, plan.r1);

    auto bound_at = [&](std::size_t n) { return plan.head_lipschitz * truncation_error(cert, plan.m1, n); };
    auto fits = [&](std::size_t n) { return bound_at(n) <= epsilon; };

    std::size_t n = plan.m1;
    if (!fits(n)) {
        std::size_t lo = n;
        std::size_t hi = std::max<std::size_t>(2 * n, n + 1);
        while (!fits(hi)) {
            if (hi >= options.max_factors) {
                if (fits(options.max_factors)) {
                    hi = options.max_factors;
                    break;
                }
                throw BudgetError("budget exceeded: epsilon " + std::to_string(epsilon) + " needs more than " +
                                  std::to_string(options.max_factors) + " factors");
            }
            lo = hi;
            hi = std::min(2 * hi, options.max_factors);
        }
        while (hi - lo > 1) {
            const std::size_t mid = lo + (hi - lo) / 2;
            (fits(mid) ? hi : lo) = mid;
        }
        n = hi;
    }
    if (n > options.max_factors) {
        throw BudgetError("budget exceeded: head alone needs more than " + std::to_string(options.max_factors) +
                          " factors");
    }
    plan.N = n;
    plan.tail_error = truncation_error(cert, plan.m1, n);
    return plan;
}

EvalResult eval_certified(const FactorFamily &family, Complex z, double epsilon, const ComposerOptions &options) {
    if (!finite(z)) {
        throw ValidationError("evaluation point must be finite");
    }
    const ConvergenceCertificate cert = certify(family);
    EvalResult result;
    result.plan = plan_evaluation(family, cert, std::abs(z), epsilon, options);
    if (cert.is_degenerate()) {
        result.value = z;
        return result;
    }
    result.value = compose_pointwise(family, 1, result.plan.N, z);
    if (!finite(result.value)) {
        throw OverflowError("composition value overflows binary64");
    }
    result.error_bound = result.plan.head_lipschitz * result.plan.tail_error;
    return result;
}

LimitSeriesReport limit_series_report(const FactorFamily &family, std::size_t degree, double epsilon,
                                      const ComposerOptions &options) {
    if (degree < 1) {
        throw ValidationError("limit_series: degree must be at least 1");
    }
    if (!(epsilon > 0.0)) {
        throw ValidationError("limit_series: epsilon must be positive");
    }
    const ConvergenceCertificate cert = certify(family);
    LimitSeriesReport report;
    report.series = TruncatedSeries::identity().resized(degree);
    if (cert.is_degenerate()) {
        report.exact = true;
        return report;
    }
    for (std::size_t n = 1; n <= options.max_factors; ++n) {
        TruncatedSeries next = compose(report.series, family.factor(n).resized(std::max<std::size_t>(degree, 1)), degree);
        double change = 0.0;
        for (std::size_t k = 0; k <= degree; ++k) {
            change = std::max(change, std::abs(next[k] - report.series[k]));
        }
        report.series = std::move(next);
        report.factors_used = n;
        report.last_change = change;
        if (!std::isfinite(change)) {
            throw OverflowError("limit_series: coefficients overflow");
        }
        if (cert.alpha_from(n + 1) == 0.0) {
            report.exact = true;
            return report;
        }
        // An identity factor moves nothing and proves nothing.
        if (cert.cn(n) > 0.0 && change < epsilon) {
            return report;
        }
    }
    throw BudgetError("limit_series: coefficients did not stabilize within " + std::to_string(options.max_factors) +
                      " factors");
}

TruncatedSeries limit_series(const FactorFamily &family, std::size_t degree, double epsilon,
                             const ComposerOptions &options) {
    return limit_series_report(family, degree, epsilon, options).series;
}

} // namespace infcomp
