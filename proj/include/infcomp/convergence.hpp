#pragma once

#include "infcomp/family.hpp"
#include "infcomp/series.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace infcomp {

/// Stands for m = infinity in majorant_bound.
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Relative inflation applied to every certified error bound this module emits.
inline constexpr double kBoundSafety = 1.0000001;

/// max over r >= 2 of |c_r|^(1/(r-1)); 0 for the identity. Throws on non-normalized input.
double cn_of(const TruncatedSeries &f);

/// Provable upper bounds on the sums of C_n for one family.
///
/// alpha() bounds sum_{n>=1} C_n, alpha_from(m) bounds the tail sum_{n>=m} C_n.
/// Geometric tails are closed forms, power-law tails use the integral
/// comparison m^-q + m^(1-q)/(q-1), explicit lists are exact finite sums.
class ConvergenceCertificate {
  public:
    double cn(std::size_t n) const;
    double alpha() const { return alpha_from(1); }
    double alpha_from(std::size_t m) const;
    /// 1/(4 alpha); infinite for a family of identities.
    double safe_radius() const;
    /// Upper bound on sum_{n=d}^{m} C_n; m may be kUnbounded.
    double partial_sum(std::size_t d, std::size_t m) const;
    /// True when every C_n is zero.
    bool is_degenerate() const { return alpha() == 0.0; }
    const std::string &tail_formula() const noexcept { return tail_formula_; }

  private:
    friend ConvergenceCertificate certify(const FactorFamily &family);
    ConvergenceCertificate() = default;

    FamilyKind kind_ = FamilyKind::explicit_list;
    double modulus_ = 0.0;   // |s|
    double power_ = 1.0;     // C_n = modulus^(-n*power) for geometric, n^(-power) for power law
    std::vector<double> cn_; // explicit: C_1..C_K
    std::vector<double> suffix_; // explicit: suffix_[m-1] = sum_{n=m}^{K} C_n, size K+1
    std::string tail_formula_;
};

/// Throws CertificationError when sum C_n diverges.
ConvergenceCertificate certify(const FactorFamily &family);

/// r / (1 - r * sum_{n=d}^{m} C_n): bound on the majorant composition at |z| = r.
double majorant_bound(const ConvergenceCertificate &cert, std::size_t d, std::size_t m, double r);

/// (1/alpha_start^2) * sum_{n=M+1}^{N} C_n, valid on |z| <= 1/(4 alpha_start),
/// where alpha_start = alpha_from(start) and F_k composes factors start..k.
double cauchy_diff_bound(const ConvergenceCertificate &cert, std::size_t start, std::size_t M, std::size_t N);

/// Limit N -> infinity of cauchy_diff_bound: bound on |F_inf - F_M|.
double truncation_error(const ConvergenceCertificate &cert, std::size_t start, std::size_t M);

/// Smallest m1 >= 1 with alpha_from(m1) <= 1/(4 r1).
std::size_t plan_split(const ConvergenceCertificate &cert, double r1);

} // namespace infcomp
