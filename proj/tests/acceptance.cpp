// Acceptance gate: runs every criterion of the self-check suite and prints
// one PASS/FAIL line per criterion. Exit status is non-zero on any failure.

#include "infcomp/kernels.hpp"
#include "infcomp/verify.hpp"

#include <cstdio>

int main() {
    std::printf("kernel instruction set: %s\n", infcomp::kernels::isa_name(infcomp::kernels::active_isa()));
    int failures = 0;
    for (const auto &check : infcomp::verify::checks()) {
        const auto r = check.run();
        std::printf("[%s] %2d %-34s max=%.3e tol=%.1e (%.3f s)  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.max_residual, r.tolerance, r.seconds, r.detail.c_str());
        failures += r.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failures, infcomp::verify::checks().size());
    return failures == 0 ? 0 : 1;
}
