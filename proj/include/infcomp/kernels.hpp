#pragma once

#include "infcomp/series.hpp"

#include <optional>
#include <span>

// Batched factor application over structure-of-arrays points.
//
// Each routine exists as a scalar reference and as SIMD variants. Variants use
// the same IEEE operations in the same order as the reference (no FMA), so
// results are bitwise identical whichever path runs.
namespace infcomp::kernels {

enum class Isa { scalar, avx2 };

const char *isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
/// Best instruction set the running CPU supports.
Isa detected_isa() noexcept;
/// detected_isa() unless overridden by set_isa_override or INFCOMP_ISA=scalar|avx2.
Isa active_isa() noexcept;
/// Pins the dispatch target; nullopt restores detection. Throws if unavailable.
void set_isa_override(std::optional<Isa> isa);

/// w <- w + c * w^exponent for every point.
void add_monomial(std::span<double> re, std::span<double> im, Complex c, unsigned exponent);
/// w <- sum_k coeffs[k] w^k for every point, Horner order.
void apply_polynomial(std::span<double> re, std::span<double> im, std::span<const Complex> coeffs);

namespace scalar {
void add_monomial(std::span<double> re, std::span<double> im, Complex c, unsigned exponent);
void apply_polynomial(std::span<double> re, std::span<double> im, std::span<const Complex> coeffs);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define INFCOMP_HAVE_AVX2_KERNELS 1
namespace avx2 {
void add_monomial(std::span<double> re, std::span<double> im, Complex c, unsigned exponent);
void apply_polynomial(std::span<double> re, std::span<double> im, std::span<const Complex> coeffs);
} // namespace avx2
#endif

} // namespace infcomp::kernels
