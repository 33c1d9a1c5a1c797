#include "infcomp/error.hpp"
#include "infcomp/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace infcomp::kernels {

namespace {

// -1: no override, otherwise the Isa value.
std::atomic<int> g_override{-1};

std::optional<Isa> env_override() noexcept {
    const char *value = std::getenv("INFCOMP_ISA");
    if (value == nullptr) {
        return std::nullopt;
    }
    if (std::strcmp(value, "scalar") == 0) {
        return Isa::scalar;
    }
    if (std::strcmp(value, "avx2") == 0 && isa_available(Isa::avx2)) {
        return Isa::avx2;
    }
    return std::nullopt;
}

} // namespace

const char *isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#ifdef INFCOMP_HAVE_AVX2_KERNELS
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa detected_isa() noexcept { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() noexcept {
    const int forced = g_override.load(std::memory_order_relaxed);
    if (forced >= 0) {
        return static_cast<Isa>(forced);
    }
    static const std::optional<Isa> from_env = env_override();
    return from_env.value_or(detected_isa());
}

void set_isa_override(std::optional<Isa> isa) {
    if (isa && !isa_available(*isa)) {
        throw ValidationError(std::string("instruction set not available: ") + isa_name(*isa));
    }
    g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void add_monomial(std::span<double> re, std::span<double> im, Complex c, unsigned exponent) {
    switch (active_isa()) {
#ifdef INFCOMP_HAVE_AVX2_KERNELS
    case Isa::avx2:
        avx2::add_monomial(re, im, c, exponent);
        return;
#endif
    default:
        scalar::add_monomial(re, im, c, exponent);
    }
}

void apply_polynomial(std::span<double> re, std::span<double> im, std::span<const Complex> coeffs) {
    switch (active_isa()) {
#ifdef INFCOMP_HAVE_AVX2_KERNELS
    case Isa::avx2:
        avx2::apply_polynomial(re, im, coeffs);
        return;
#endif
    default:
        scalar::apply_polynomial(re, im, coeffs);
    }
}

} // namespace infcomp::kernels
