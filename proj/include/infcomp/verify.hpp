#pragma once

#include "infcomp/family.hpp"
#include "infcomp/series.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

// Self-check suite shared by the `verify` command and the acceptance tests.
// The reference values come from independent routes (closed forms,
// brute-force expansion, recurrences), never from the code under test.
namespace infcomp::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    /// Worst observed value of the checked quantity (residual, error or bound ratio).
    double max_residual = 0.0;
    /// Threshold max_residual is compared against.
    double tolerance = 0.0;
    double seconds = 0.0;
    std::string detail;
};

struct Check {
    int id;
    std::string name;
    std::function<CheckResult()> run;
};

/// Every check, in id order.
const std::vector<Check> &checks();
std::vector<CheckResult> run_all();

// -- sampling and reference routes, also used by the unit tests -----------

/// Uniform point in the closed disk |z| <= radius.
Complex sample_disk(std::mt19937_64 &rng, double radius);

/// Explicit family of 1..max_factors factors, degree 2..max_degree, sum C_n = total_c.
FactorFamily random_explicit_family(std::mt19937_64 &rng, std::size_t max_factors, std::size_t max_degree,
                                    double total_c);

/// Full product and substitution f(g) = sum a_k g^k with no truncation, then cut at out_degree.
std::vector<std::int64_t> brute_force_compose(const std::vector<std::int64_t> &f, const std::vector<std::int64_t> &g,
                                              std::size_t out_degree);
std::vector<Complex> brute_force_compose(const std::vector<Complex> &f, const std::vector<Complex> &g,
                                         std::size_t out_degree);

/// 2^{k-1}/k! for k = 0..degree (0 at k = 0) by the ratio recurrence t_{k+1} = 2 t_k/(k+1).
std::vector<double> exp_jet_reference(std::size_t degree);

} // namespace infcomp::verify
