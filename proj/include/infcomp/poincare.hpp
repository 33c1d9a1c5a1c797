#pragma once

#include "infcomp/composer.hpp"
#include "infcomp/series.hpp"

#include <cstddef>
#include <optional>

namespace infcomp {

/// F(z) = lim_N (z + z^2/s) o (z + z^2/s^2) o ... o (z + z^2/s^N), which
/// satisfies F(sz) = s F(z) + s F(z)^2.
class PoincareSpec {
  public:
    /// Throws ValidationError unless |s| > 1 and 0 < base_radius <= (|s|-1)/4.
    explicit PoincareSpec(Complex s, std::optional<double> base_radius = std::nullopt);

    Complex s() const noexcept { return s_; }
    /// Radius inside which F is evaluated directly from the composition.
    double base_radius() const noexcept { return base_radius_; }
    const FactorFamily &family() const noexcept { return family_; }

    /// u -> s (u + u^2).
    Complex step(Complex u) const noexcept { return s_ * (u + u * u); }

  private:
    Complex s_;
    double base_radius_;
    FactorFamily family_;
};

struct PoincareResult {
    Complex value;
    double error_bound = 0.0;
    /// Functional-equation steps applied after the direct evaluation.
    unsigned depth = 0;
    /// Direct evaluation at z / s^depth.
    EvalResult base;
};

/// F(z) with |value - F(z)| <= error_bound <= epsilon (truncation error only).
///
/// Points outside the base disk are pulled back to w = z/s^k, evaluated
/// directly, then pushed forward k times through u -> s(u + u^2). The base
/// tolerance shrinks until the error carried through the forward steps,
/// e' = |s| e (1 + 2|u| + e), fits in epsilon.
PoincareResult poincare_eval(const PoincareSpec &spec, Complex z, double epsilon, const ComposerOptions &options = {});

/// |F(sz) - s F(z) - s F(z)^2| with both sides evaluated to epsilon.
double functional_residual(const PoincareSpec &spec, Complex z, double epsilon, const ComposerOptions &options = {});

/// Closed forms solving the functional equation for s = 2, -2, 4:
/// h_1 = (e^{2z} - 1)/2, h_2 = sin(2z/sqrt(3) + pi/6) - 1/2, h_3 = (cosh(2 sqrt z) - 1)/2.
Complex oracle_h(int index, Complex z);

/// The s value whose Poincare function is h_index.
Complex oracle_multiplier(int index);

/// |h_i(sigma z) - sigma (h_i(z) + h_i(z)^2)|, sigma = 2, -2, 4.
double lemma31_residual(int index, Complex z);

enum class ProbeOracle {
    automatic, // the closed form matching s when there is one, otherwise identity
    identity,  // f(z) = z, the N -> infinity asymptote of s^N f(z/s^N)
    h1,
    h2,
    h3,
};

/// (R_{n=1}^{N} (z + z^2/s^n)) applied to s^N f(z/s^N) for the chosen f.
///
/// For an exact solution f this reproduces f(z) for every N; with the
/// identity it is the N-factor partial composition, converging to F(z).
Complex uniqueness_probe(const PoincareSpec &spec, std::size_t N, Complex z,
                         ProbeOracle oracle = ProbeOracle::automatic);

} // namespace infcomp
