#include "infcomp/convergence.hpp"

#include "infcomp/error.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

namespace infcomp {

namespace {

// Beyond this many terms partial_sum falls back to the tail bound.
constexpr std::size_t kDirectSumLimit = std::size_t{1} << 20;
constexpr std::size_t kSplitScanLimit = 64;
constexpr std::size_t kSplitIndexCap = std::size_t{1} << 62;

void require_index(std::size_t n, const char *what) {
    if (n == 0) {
        throw ValidationError(std::string(what) + ": indices are 1-based");
    }
}

} // namespace

double cn_of(const TruncatedSeries &f) {
    if (!f.is_normalized()) {
        throw ValidationError("cn_of: factor is not normalized");
    }
    double best = 0.0;
    for (std::size_t r = 2; r <= f.degree(); ++r) {
        const double mag = std::abs(f[r]);
        if (mag == 0.0) {
            continue;
        }
        const double c = r == 2 ? mag : std::pow(mag, 1.0 / static_cast<double>(r - 1));
        best = std::max(best, c);
    }
    return best;
}

ConvergenceCertificate certify(const FactorFamily &family) {
    ConvergenceCertificate cert;
    cert.kind_ = family.kind();
    switch (family.kind()) {
    case FamilyKind::explicit_list: {
        const auto &factors = std::get<ExplicitParams>(family.params()).factors;
        cert.cn_.reserve(factors.size());
        for (const auto &f : factors) {
            cert.cn_.push_back(cn_of(f));
        }
        cert.suffix_.assign(factors.size() + 1, 0.0);
        for (std::size_t i = factors.size(); i-- > 0;) {
            cert.suffix_[i] = cert.suffix_[i + 1] + cert.cn_[i];
        }
        cert.tail_formula_ = "explicit: alpha_m = sum_{n=m}^{K} C_n (exact, zero beyond K)";
        break;
    }
    case FamilyKind::geometric: {
        const auto &g = std::get<GeometricParams>(family.params());
        cert.modulus_ = std::abs(g.s);
        cert.power_ = 1.0 / static_cast<double>(g.exponent - 1);
        cert.tail_formula_ = g.exponent == 2 ? "geometric: alpha_m = |s|^(1-m) / (|s|-1)"
                                             : "geometric: alpha_m = rho^m / (1-rho), rho = |s|^(-1/(r0-1))";
        break;
    }
    case FamilyKind::power_law: {
        const auto &pl = std::get<PowerLawParams>(family.params());
        cert.power_ = pl.p / static_cast<double>(pl.exponent - 1);
        if (!(cert.power_ > 1.0)) {
            throw CertificationError("divergent family: sum of C_n = n^(-p/(r0-1)) diverges for p/(r0-1) <= 1 "
                                     "(convergence hypothesis violated)");
        }
        cert.tail_formula_ = "power_law: alpha_m <= m^(-q) + m^(1-q)/(q-1), q = p/(r0-1)";
        break;
    }
    }
    return cert;
}

double ConvergenceCertificate::cn(std::size_t n) const {
    require_index(n, "cn");
    switch (kind_) {
    case FamilyKind::explicit_list:
        return n <= cn_.size() ? cn_[n - 1] : 0.0;
    case FamilyKind::geometric:
        return std::pow(modulus_, -static_cast<double>(n) * power_);
    case FamilyKind::power_law:
        return std::pow(static_cast<double>(n), -power_);
    }
    return 0.0;
}

double ConvergenceCertificate::alpha_from(std::size_t m) const {
    require_index(m, "alpha_from");
    switch (kind_) {
    case FamilyKind::explicit_list:
        return m <= cn_.size() ? suffix_[m - 1] : 0.0;
    case FamilyKind::geometric: {
        if (power_ == 1.0) {
            return std::pow(modulus_, 1.0 - static_cast<double>(m)) / (modulus_ - 1.0);
        }
        const double rho = std::pow(modulus_, -power_);
        return std::pow(modulus_, -static_cast<double>(m) * power_) / (1.0 - rho);
    }
    case FamilyKind::power_law: {
        const double md = static_cast<double>(m);
        return std::pow(md, -power_) + std::pow(md, 1.0 - power_) / (power_ - 1.0);
    }
    }
    return 0.0;
}

double ConvergenceCertificate::safe_radius() const {
    const double a = alpha();
    return a == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / (4.0 * a);
}

double ConvergenceCertificate::partial_sum(std::size_t d, std::size_t m) const {
    require_index(d, "partial_sum");
    if (m < d) {
        return 0.0;
    }
    if (m == kUnbounded || m - d >= kDirectSumLimit) {
        return alpha_from(d);
    }
    if (kind_ == FamilyKind::explicit_list) {
        if (d > cn_.size()) {
            return 0.0;
        }
        m = std::min(m, cn_.size());
    }
    double sum = 0.0;
    // Smallest terms first.
    for (std::size_t n = m + 1; n-- > d;) {
        sum += cn(n);
    }
    return sum;
}

double majorant_bound(const ConvergenceCertificate &cert, std::size_t d, std::size_t m, double r) {
    require_index(d, "majorant_bound");
    if (m < d) {
        throw ValidationError("majorant_bound: need d <= m");
    }
    if (!(r >= 0.0)) {
        throw ValidationError("majorant_bound: radius must be non-negative");
    }
    const double sum = cert.partial_sum(d, m);
    if (!(r * sum < 1.0)) {
        throw ValidationError("majorant_bound: radius outside certified disk");
    }
    return r / (1.0 - r * sum);
}

double cauchy_diff_bound(const ConvergenceCertificate &cert, std::size_t start, std::size_t M, std::size_t N) {
    require_index(start, "cauchy_diff_bound");
    if (M < start) {
        throw ValidationError("cauchy_diff_bound: need M >= start");
    }
    if (N <= M) {
        throw ValidationError("cauchy_diff_bound: need N > M");
    }
    const double a = cert.alpha_from(start);
    const double sum = cert.partial_sum(M + 1, N);
    if (a == 0.0 || sum == 0.0) {
        return 0.0;
    }
    return kBoundSafety * sum / (a * a);
}

double truncation_error(const ConvergenceCertificate &cert, std::size_t start, std::size_t M) {
    require_index(start, "truncation_error");
    if (M < start) {
        throw ValidationError("truncation_error: need M >= start");
    }
    const double a = cert.alpha_from(start);
    const double tail = M == kUnbounded ? 0.0 : cert.alpha_from(M + 1);
    if (a == 0.0 || tail == 0.0) {
        return 0.0;
    }
    return kBoundSafety * tail / (a * a);
}

std::size_t plan_split(const ConvergenceCertificate &cert, double r1) {
    if (!(r1 > 0.0)) {
        throw ValidationError("plan_split: radius must be positive");
    }
    const double target = 1.0 / (4.0 * r1);
    auto fits = [&](std::size_t m) { return cert.alpha_from(m) <= target; };

    for (std::size_t m = 1; m <= kSplitScanLimit; ++m) {
        if (fits(m)) {
            return m;
        }
    }
    std::size_t lo = kSplitScanLimit; // known not to fit
    std::size_t hi = 2 * kSplitScanLimit;
    while (!fits(hi)) {
        if (hi >= kSplitIndexCap) {
            throw BudgetError("plan_split: radius too large for this family's tail decay");
        }
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        (fits(mid) ? hi : lo) = mid;
    }
    return hi;
}

} // namespace infcomp
