#include "infcomp/verify.hpp"

#include "infcomp/composer.hpp"
#include "infcomp/convergence.hpp"
#include "infcomp/poincare.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace infcomp::verify {

namespace {

// Relative slack for comparisons that are exact in real arithmetic.
constexpr double kRoundingSlack = 1e-12;

template <class T> std::vector<T> poly_mul(const std::vector<T> &a, const std::vector<T> &b) {
    std::vector<T> out(a.size() + b.size() - 1, T{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

template <class T>
std::vector<T> brute_force(const std::vector<T> &f, const std::vector<T> &g, std::size_t out_degree) {
    std::vector<T> sum{T{}};
    std::vector<T> power{T{1}};
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (sum.size() < power.size()) {
            sum.resize(power.size(), T{});
        }
        for (std::size_t i = 0; i < power.size(); ++i) {
            sum[i] += f[k] * power[i];
        }
        power = poly_mul(power, g);
    }
    sum.resize(out_degree + 1, T{});
    return sum;
}

CheckResult finish(int id, std::string name, double worst, double tolerance, bool extra_ok, std::string detail,
                   std::chrono::steady_clock::time_point start) {
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    r.max_residual = worst;
    r.tolerance = tolerance;
    r.passed = extra_ok && worst <= tolerance;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.detail = std::move(detail);
    return r;
}

CheckResult closed_form_check(int id, const std::string &name, int index, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const FactorFamily family = FactorFamily::geometric(oracle_multiplier(index), 2);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex z = sample_disk(rng, 1.0);
        const EvalResult r = eval_certified(family, z, 1e-9);
        worst = std::max(worst, std::abs(r.value - oracle_h(index, z)));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "100 points |z| <= 1, epsilon 1e-9, runtime limit 2 s";
    return finish(id, name, worst, 1e-8, seconds <= 2.0, detail.str(), start);
}

CheckResult limit_series_check() {
    const auto start = std::chrono::steady_clock::now();
    const TruncatedSeries jet = limit_series(FactorFamily::geometric(2.0, 2), 12, 1e-13);
    const std::vector<double> expected = exp_jet_reference(12);
    double worst = 0.0;
    for (std::size_t k = 1; k <= 12; ++k) {
        worst = std::max(worst, std::abs(jet[k] - expected[k]));
    }
    return finish(4, "limit_series_coefficients", worst, 1e-10, true, "s = 2, degree 12 vs 2^(k-1)/k!", start);
}

// Twenty families shared by the Cauchy and majorant checks.
std::vector<FactorFamily> seeded_families() {
    std::mt19937_64 rng(0xCA0C41);
    std::uniform_real_distribution<double> total(0.1, 0.9);
    std::vector<FactorFamily> out;
    for (int i = 0; i < 20; ++i) {
        const double t = total(rng);
        out.push_back(random_explicit_family(rng, 10, 4, t));
    }
    return out;
}

CheckResult cauchy_check() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xC0FFEE);
    double worst_ratio = 0.0;
    std::size_t violations = 0;
    std::size_t comparisons = 0;
    for (const FactorFamily &family : seeded_families()) {
        const ConvergenceCertificate cert = certify(family);
        for (int p = 0; p < 50; ++p) {
            const Complex z = sample_disk(rng, cert.safe_radius());
            std::vector<Complex> partial(11);
            for (std::size_t n = 1; n <= 10; ++n) {
                partial[n] = compose_pointwise(family, 1, n, z);
            }
            for (std::size_t M = 1; M < 10; ++M) {
                for (std::size_t N = M + 1; N <= 10; ++N) {
                    const double diff = std::abs(partial[N] - partial[M]);
                    const double bound = cauchy_diff_bound(cert, 1, M, N);
                    ++comparisons;
                    if (diff > bound) {
                        ++violations;
                    }
                    if (bound > 0.0) {
                        worst_ratio = std::max(worst_ratio, diff / bound);
                    }
                }
            }
        }
    }
    std::ostringstream detail;
    detail << comparisons << " comparisons, " << violations << " violations; residual is max |F_N - F_M| / bound";
    return finish(5, "cauchy_difference_bound", worst_ratio, 1.0, violations == 0, detail.str(), start);
}

CheckResult majorant_check() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 point_rng(0xBEEF);
    double worst_ratio = 0.0;
    std::size_t violations = 0;
    std::size_t comparisons = 0;
    for (const FactorFamily &family : seeded_families()) {
        const ConvergenceCertificate cert = certify(family);
        const std::size_t K = family.explicit_length();
        for (std::size_t d = 1; d <= K; ++d) {
            for (std::size_t m = d; m <= K; ++m) {
                const double sum = cert.partial_sum(d, m);
                const double disk = sum > 0.0 ? 0.999 / sum : 10.0;
                for (int p = 0; p < 50; ++p) {
                    const Complex z = sample_disk(point_rng, disk);
                    const double r = std::abs(z);
                    const Complex value = compose_pointwise(family, d, m, z);
                    const double bound = majorant_bound(cert, d, m, r);
                    const double slack = kRoundingSlack * bound;
                    comparisons += 2;
                    if (std::abs(value) > bound + slack) {
                        ++violations;
                    }
                    if (std::abs(value - z) > (bound - r) + slack) {
                        ++violations;
                    }
                    if (bound > 0.0) {
                        worst_ratio = std::max(worst_ratio, std::abs(value) / bound);
                    }
                }
            }
        }
    }
    std::ostringstream detail;
    detail << comparisons << " comparisons, " << violations << " violations; residual is max |R f_n(z)| / bound";
    return finish(6, "majorant_bound", worst_ratio, 1.0 + kRoundingSlack, violations == 0, detail.str(), start);
}

CheckResult functional_equation_check() {
    const auto start = std::chrono::steady_clock::now();
    const Complex multipliers[] = {{2.0, 0.0}, {-2.0, 0.0}, {4.0, 0.0}, {1.5, 1.5}};
    std::mt19937_64 rng(0xF00D);
    double worst = 0.0;
    for (const Complex s : multipliers) {
        const PoincareSpec spec(s);
        for (int i = 0; i < 50; ++i) {
            worst = std::max(worst, functional_residual(spec, sample_disk(rng, 2.0), 1e-10));
        }
    }
    return finish(7, "functional_equation", worst, 1e-7, true, "50 points |z| <= 2 per s in {2, -2, 4, 1.5+1.5i}",
                  start);
}

CheckResult continuation_check() {
    const auto start = std::chrono::steady_clock::now();
    const PoincareResult r = poincare_eval(PoincareSpec(2.0), 3.0, 1e-6);
    const double exact = 0.5 * std::expm1(6.0);
    const double rel = std::abs(r.value - exact) / exact;
    std::ostringstream detail;
    detail << "s = 2, z = 3, continuation depth " << r.depth << " (need >= 3)";
    return finish(8, "continuation_reach", rel, 1e-4, r.depth >= 3, detail.str(), start);
}

CheckResult closed_form_identity_check() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0x5EED);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex z = sample_disk(rng, 1.0);
        for (int index = 1; index <= 3; ++index) {
            worst = std::max(worst, lemma31_residual(index, z));
        }
    }
    return finish(9, "closed_form_functional_identities", worst, 1e-12, true, "100 points |z| <= 1, h_1 h_2 h_3",
                  start);
}

CheckResult composition_jet_check() {
    const auto start = std::chrono::steady_clock::now();
    constexpr std::size_t kDegree = 6;
    std::mt19937_64 rng(0x0DDBA11);
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<std::size_t> deg(2, 4);
    std::size_t exact_mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto draw = [&] {
            std::vector<std::int64_t> c(deg(rng) + 1, 0);
            c[1] = 1;
            for (std::size_t k = 2; k < c.size(); ++k) {
                c[k] = small(rng);
            }
            return c;
        };
        const auto f = draw();
        const auto g = draw();
        const auto expected = brute_force_compose(f, g, kDegree);
        auto to_series = [](const std::vector<std::int64_t> &c) {
            std::vector<Complex> out(c.begin(), c.end());
            return TruncatedSeries(std::move(out));
        };
        const TruncatedSeries got = compose(to_series(f), to_series(g), kDegree);
        for (std::size_t k = 0; k <= kDegree; ++k) {
            if (got[k] != Complex(static_cast<double>(expected[k]), 0.0)) {
                ++exact_mismatches;
            }
        }
    }
    double worst = 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        auto draw = [&] {
            std::vector<Complex> c(deg(rng) + 1);
            c[1] = 1.0;
            for (std::size_t k = 2; k < c.size(); ++k) {
                c[k] = std::polar(unit(rng), 2.0 * std::numbers::pi * unit(rng));
            }
            return c;
        };
        const auto f = draw();
        const auto g = draw();
        const auto expected = brute_force_compose(f, g, kDegree);
        const TruncatedSeries got = compose(TruncatedSeries(f), TruncatedSeries(g), kDegree);
        for (std::size_t k = 0; k <= kDegree; ++k) {
            worst = std::max(worst, std::abs(got[k] - expected[k]));
        }
    }
    std::ostringstream detail;
    detail << "100 integer pairs: " << exact_mismatches
           << " inexact coefficients; 100 complex pairs: residual is max coefficient error";
    return finish(10, "composition_jet_oracle", worst, 1e-12, exact_mismatches == 0, detail.str(), start);
}

CheckResult uniqueness_check() {
    const auto start = std::chrono::steady_clock::now();
    const PoincareSpec spec(2.0);
    const Complex z = 0.5;
    const Complex exact = oracle_h(1, z);
    const std::size_t depths[] = {5, 10, 20};
    double errors[3];
    for (int i = 0; i < 3; ++i) {
        errors[i] = std::abs(uniqueness_probe(spec, depths[i], z, ProbeOracle::identity) - exact);
    }
    const bool monotone = errors[0] > errors[1] && errors[1] > errors[2];
    // With the exact solution inside, the probe reproduces h_1 for every N.
    double consistency = 0.0;
    for (const std::size_t n : depths) {
        consistency = std::max(consistency, std::abs(uniqueness_probe(spec, n, z, ProbeOracle::h1) - exact));
    }
    std::ostringstream detail;
    detail << "identity probe errors N=5: " << errors[0] << ", N=10: " << errors[1] << ", N=20: " << errors[2]
           << (monotone ? " (decreasing)" : " (NOT decreasing)") << "; h_1 probe consistency " << consistency;
    return finish(11, "uniqueness_probe_convergence", errors[2], 1e-6, monotone && consistency <= 1e-12,
                  detail.str(), start);
}

} // namespace

Complex sample_disk(std::mt19937_64 &rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(r, theta);
}

FactorFamily random_explicit_family(std::mt19937_64 &rng, std::size_t max_factors, std::size_t max_degree,
                                    double total_c) {
    std::uniform_int_distribution<std::size_t> count(1, max_factors);
    std::uniform_int_distribution<std::size_t> degree(2, max_degree);
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const std::size_t K = count(rng);
    std::vector<double> weights(K);
    double sum = 0.0;
    for (double &w : weights) {
        w = weight(rng);
        sum += w;
    }
    std::vector<TruncatedSeries> factors;
    for (std::size_t n = 0; n < K; ++n) {
        const double cn = total_c * weights[n] / sum;
        const std::size_t D = degree(rng);
        std::uniform_int_distribution<std::size_t> pick(2, D);
        const std::size_t extremal = pick(rng);
        std::vector<Complex> coeffs(D + 1);
        coeffs[1] = 1.0;
        for (std::size_t r = 2; r <= D; ++r) {
            const double share = r == extremal ? 1.0 : unit(rng);
            // Scale slightly below C^(r-1) so cn_of never rounds above the target.
            const double modulus = share * std::pow(cn, static_cast<double>(r - 1)) * (1.0 - 1e-12);
            coeffs[r] = std::polar(modulus, 2.0 * std::numbers::pi * unit(rng));
        }
        factors.emplace_back(std::move(coeffs));
    }
    return FactorFamily::explicit_list(std::move(factors));
}

std::vector<std::int64_t> brute_force_compose(const std::vector<std::int64_t> &f, const std::vector<std::int64_t> &g,
                                              std::size_t out_degree) {
    return brute_force(f, g, out_degree);
}

std::vector<Complex> brute_force_compose(const std::vector<Complex> &f, const std::vector<Complex> &g,
                                         std::size_t out_degree) {
    return brute_force(f, g, out_degree);
}

std::vector<double> exp_jet_reference(std::size_t degree) {
    std::vector<double> out(degree + 1, 0.0);
    double term = 1.0; // k = 1
    for (std::size_t k = 1; k <= degree; ++k) {
        out[k] = term;
        term = term * 2.0 / static_cast<double>(k + 1);
    }
    return out;
}

const std::vector<Check> &checks() {
    static const std::vector<Check> all = {
        {1, "closed_form_exp_s2", [] { return closed_form_check(1, "closed_form_exp_s2", 1, 101); }},
        {2, "closed_form_sin_s_minus2", [] { return closed_form_check(2, "closed_form_sin_s_minus2", 2, 102); }},
        {3, "closed_form_sinh_s4", [] { return closed_form_check(3, "closed_form_sinh_s4", 3, 103); }},
        {4, "limit_series_coefficients", limit_series_check},
        {5, "cauchy_difference_bound", cauchy_check},
        {6, "majorant_bound", majorant_check},
        {7, "functional_equation", functional_equation_check},
        {8, "continuation_reach", continuation_check},
        {9, "closed_form_functional_identities", closed_form_identity_check},
        {10, "composition_jet_oracle", composition_jet_check},
        {11, "uniqueness_probe_convergence", uniqueness_check},
    };
    return all;
}

std::vector<CheckResult> run_all() {
    std::vector<CheckResult> out;
    for (const Check &c : checks()) {
        out.push_back(c.run());
    }
    return out;
}

} // namespace infcomp::verify
