#include "infcomp/series.hpp"

#include "infcomp/error.hpp"

#include <cmath>
#include <utility>

namespace infcomp {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw ValidationError("series needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::identity() { return TruncatedSeries({Complex{0.0}, Complex{1.0}}); }

TruncatedSeries TruncatedSeries::constant(Complex value) { return TruncatedSeries({value}); }

bool TruncatedSeries::is_normalized() const noexcept {
    return coeffs_.size() >= 2 && coeffs_[0] == Complex{0.0} && coeffs_[1] == Complex{1.0};
}

bool TruncatedSeries::is_majorant() const noexcept {
    for (const Complex &c : coeffs_) {
        if (c.imag() != 0.0 || !(c.real() >= 0.0)) {
            return false;
        }
    }
    return true;
}

TruncatedSeries TruncatedSeries::resized(std::size_t degree) const {
    std::vector<Complex> out(degree + 1);
    for (std::size_t k = 0; k <= degree && k < coeffs_.size(); ++k) {
        out[k] = coeffs_[k];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries make_series(std::vector<Complex> coeffs) { return TruncatedSeries(std::move(coeffs)); }

TruncatedSeries hat(const TruncatedSeries &f) {
    std::vector<Complex> out;
    out.reserve(f.degree() + 1);
    for (const Complex &c : f.coeffs()) {
        out.emplace_back(std::abs(c), 0.0);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries multiply(const TruncatedSeries &f, const TruncatedSeries &g, std::size_t out_degree) {
    std::vector<Complex> out(out_degree + 1);
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    for (std::size_t i = 0; i < a.size() && i <= out_degree; ++i) {
        if (a[i] == Complex{}) {
            continue;
        }
        const std::size_t jmax = std::min(b.size() - 1, out_degree - i);
        for (std::size_t j = 0; j <= jmax; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries compose(const TruncatedSeries &f, const TruncatedSeries &g, std::size_t out_degree) {
    if (out_degree < 1) {
        throw ValidationError("compose: out_degree must be at least 1");
    }
    if (g[0] != Complex{}) {
        throw ValidationError("compose: inner series has a non-zero constant term");
    }
    const auto a = f.coeffs();
    // Terms a_k g^k with k > out_degree vanish below the truncation degree.
    std::size_t top = std::min(f.degree(), out_degree);
    std::vector<Complex> acc(out_degree + 1);
    acc[0] = a[top];
    TruncatedSeries result(std::move(acc));
    for (std::size_t k = top; k-- > 0;) {
        TruncatedSeries next = multiply(result, g, out_degree);
        std::vector<Complex> c(next.coeffs().begin(), next.coeffs().end());
        c[0] += a[k];
        result = TruncatedSeries(std::move(c));
    }
    return result;
}

Complex eval(const TruncatedSeries &f, Complex z) {
    const auto a = f.coeffs();
    Complex acc = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        acc = acc * z + a[k];
    }
    return acc;
}

double eval_majorant(const TruncatedSeries &f, double r) {
    if (!(r >= 0.0)) {
        throw ValidationError("eval_majorant: radius must be non-negative");
    }
    const auto a = f.coeffs();
    double acc = std::abs(a.back());
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        acc = acc * r + std::abs(a[k]);
    }
    return acc;
}

TruncatedSeries derivative(const TruncatedSeries &f) {
    if (f.degree() == 0) {
        return TruncatedSeries::constant(Complex{});
    }
    std::vector<Complex> out(f.degree());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = static_cast<double>(k + 1) * f[k + 1];
    }
    return TruncatedSeries(std::move(out));
}

} // namespace infcomp
