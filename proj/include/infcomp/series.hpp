#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace infcomp {

using Complex = std::complex<double>;

/// Degree-D jet a_0 + a_1 z + ... + a_D z^D of an analytic function.
///
/// Immutable once built. Every operation that could raise the degree takes
/// an explicit output degree and truncates there.
class TruncatedSeries {
  public:
    /// Throws ValidationError on an empty coefficient list.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    /// The unit element of composition, z.
    static TruncatedSeries identity();
    static TruncatedSeries constant(Complex value);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    Complex operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }

    /// a_0 = 0 and a_1 = 1 exactly.
    bool is_normalized() const noexcept;
    /// Every coefficient real and non-negative.
    bool is_majorant() const noexcept;

    /// Copy with degree exactly `degree`: truncated, or zero-padded.
    TruncatedSeries resized(std::size_t degree) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

  private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries make_series(std::vector<Complex> coeffs);

/// Coefficientwise modulus: sum |a_k| z^k.
TruncatedSeries hat(const TruncatedSeries &f);

/// Product truncated at out_degree.
TruncatedSeries multiply(const TruncatedSeries &f, const TruncatedSeries &g, std::size_t out_degree);

/// Jet of f(g(z)) at out_degree. Requires g(0) = 0 and out_degree >= 1.
///
/// Horner on series: acc = a_D, then acc = acc * g + a_k down to k = 0, each
/// product truncated. Coefficients below the truncation degree are exact
/// polynomials in the inputs.
TruncatedSeries compose(const TruncatedSeries &f, const TruncatedSeries &g, std::size_t out_degree);

/// Horner evaluation, highest coefficient first.
Complex eval(const TruncatedSeries &f, Complex z);

/// hat(f) evaluated at r >= 0.
double eval_majorant(const TruncatedSeries &f, double r);

/// Formal derivative; a degree-0 input gives the zero constant.
TruncatedSeries derivative(const TruncatedSeries &f);

} // namespace infcomp
