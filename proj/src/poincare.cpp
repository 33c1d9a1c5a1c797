#include "infcomp/poincare.hpp"

#include "infcomp/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace infcomp {

namespace {

constexpr int kMaxBudgetRounds = 16;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// e^z - 1 without cancellation near 0.
Complex expm1(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    const double half_sin = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y)};
}

} // namespace

PoincareSpec::PoincareSpec(Complex s, std::optional<double> base_radius)
    : s_(s), base_radius_(0.0), family_(FactorFamily::geometric(s, 2)) {
    const double limit = (std::abs(s) - 1.0) / 4.0;
    base_radius_ = base_radius.value_or(limit);
    if (!(base_radius_ > 0.0) || base_radius_ > limit) {
        throw ValidationError("Poincare base radius must lie in (0, (|s|-1)/4]");
    }
}

PoincareResult poincare_eval(const PoincareSpec &spec, Complex z, double epsilon, const ComposerOptions &options) {
    if (!finite(z)) {
        throw ValidationError("evaluation point must be finite");
    }
    if (!(epsilon > 0.0)) {
        throw ValidationError("epsilon must be positive");
    }
    const double modulus = std::abs(spec.s());
    const Complex inverse = 1.0 / spec.s();

    unsigned depth = 0;
    if (std::abs(z) > spec.base_radius()) {
        depth = static_cast<unsigned>(std::ceil(std::log(std::abs(z) / spec.base_radius()) / std::log(modulus)));
    }
    Complex w = z * ipow(inverse, depth);
    while (std::abs(w) > spec.base_radius()) {
        ++depth;
        w = z * ipow(inverse, depth);
    }

    double base_epsilon = epsilon;
    for (int round = 0; round < kMaxBudgetRounds; ++round) {
        PoincareResult result;
        result.depth = depth;
        result.base = eval_certified(spec.family(), w, base_epsilon, options);
        Complex u = result.base.value;
        double err = result.base.error_bound;
        for (unsigned j = 0; j < depth; ++j) {
            err = modulus * err * (1.0 + 2.0 * std::abs(u) + err);
            u = spec.step(u);
            if (!finite(u) || !std::isfinite(err)) {
                throw OverflowError("Poincare continuation overflows binary64 after " + std::to_string(j + 1) +
                                    " of " + std::to_string(depth) + " steps");
            }
        }
        if (err <= epsilon) {
            result.value = u;
            result.error_bound = err;
            return result;
        }
        // Shrink in proportion to the overshoot, with margin for the quadratic term.
        base_epsilon *= 0.5 * epsilon / err;
        if (!(base_epsilon > 0.0)) {
            break;
        }
    }
    throw BudgetError("Poincare error budget not reachable at this point");
}

double functional_residual(const PoincareSpec &spec, Complex z, double epsilon, const ComposerOptions &options) {
    const Complex outer = poincare_eval(spec, spec.s() * z, epsilon, options).value;
    const Complex inner = poincare_eval(spec, z, epsilon, options).value;
    return std::abs(outer - spec.step(inner));
}

Complex oracle_h(int index, Complex z) {
    switch (index) {
    case 1:
        return 0.5 * expm1(2.0 * z);
    case 2: {
        // sin(a + pi/6) - sin(pi/6) = 2 cos(a/2 + pi/6) sin(a/2)
        const Complex half = z / std::numbers::sqrt3;
        return 2.0 * std::cos(half + std::numbers::pi / 6.0) * std::sin(half);
    }
    case 3: {
        // (cosh(2w) - 1)/2 = sinh(w)^2; even in w, so the root's branch is irrelevant.
        const Complex sh = std::sinh(std::sqrt(z));
        return sh * sh;
    }
    default:
        throw ValidationError("oracle index must be 1, 2 or 3");
    }
}

Complex oracle_multiplier(int index) {
    switch (index) {
    case 1:
        return 2.0;
    case 2:
        return -2.0;
    case 3:
        return 4.0;
    default:
        throw ValidationError("oracle index must be 1, 2 or 3");
    }
}

double lemma31_residual(int index, Complex z) {
    const Complex sigma = oracle_multiplier(index);
    const Complex h = oracle_h(index, z);
    return std::abs(oracle_h(index, sigma * z) - sigma * (h + h * h));
}

Complex uniqueness_probe(const PoincareSpec &spec, std::size_t N, Complex z, ProbeOracle oracle) {
    if (N < 1) {
        throw ValidationError("uniqueness_probe: N must be at least 1");
    }
    int index = 0;
    switch (oracle) {
    case ProbeOracle::automatic:
        for (int i = 1; i <= 3; ++i) {
            if (spec.s() == oracle_multiplier(i)) {
                index = i;
            }
        }
        break;
    case ProbeOracle::identity:
        break;
    case ProbeOracle::h1:
        index = 1;
        break;
    case ProbeOracle::h2:
        index = 2;
        break;
    case ProbeOracle::h3:
        index = 3;
        break;
    }
    if (index != 0 && spec.s() != oracle_multiplier(index)) {
        throw ValidationError("uniqueness_probe: closed form h_" + std::to_string(index) +
                              " does not solve the functional equation for this s");
    }
    const Complex scale = ipow(spec.s(), N);
    const Complex inner = index == 0 ? z : scale * oracle_h(index, z / scale);
    return compose_pointwise(spec.family(), 1, N, inner);
}

} // namespace infcomp
