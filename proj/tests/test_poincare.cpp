#include "infcomp/error.hpp"
#include "infcomp/poincare.hpp"
#include "infcomp/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace infcomp;

TEST_CASE("PoincareSpec validation") {
    CHECK_THROWS_AS(PoincareSpec(1.0), ValidationError);
    CHECK_THROWS_AS(PoincareSpec(Complex(0.5, 0.5)), ValidationError);
    CHECK_THROWS_AS(PoincareSpec(2.0, 0.3), ValidationError);
    CHECK_THROWS_AS(PoincareSpec(2.0, 0.0), ValidationError);
    const PoincareSpec spec(2.0);
    CHECK(spec.base_radius() == 0.25);
    CHECK(PoincareSpec(2.0, 0.1).base_radius() == 0.1);
    CHECK(spec.step(1.0) == Complex(4.0));
}

TEST_CASE("poincare_eval examples") {
    const PoincareSpec two(2.0);
    CHECK(poincare_eval(two, 0.0, 1e-9).value == Complex(0.0));

    const auto far = poincare_eval(two, 3.0, 1e-9);
    const double exact = 0.5 * std::expm1(6.0); // 201.214396...
    CHECK(far.depth >= 3);
    CHECK(far.error_bound <= 1e-9);
    CHECK(std::abs(far.value - exact) <= far.error_bound + 1e-13 * exact);

    const auto alt = poincare_eval(PoincareSpec(-2.0), 0.5, 1e-9);
    CHECK(std::abs(alt.value - 0.3916374416827052) < 1e-9);
}

TEST_CASE("poincare_eval reports overflow instead of infinities") {
    CHECK_THROWS_AS(poincare_eval(PoincareSpec(2.0), 1000.0, 1e-6), OverflowError);
    CHECK_THROWS_AS(poincare_eval(PoincareSpec(2.0), 1.0, -1.0), ValidationError);
}

TEST_CASE("functional_residual examples") {
    CHECK(functional_residual(PoincareSpec(2.0), 0.0, 1e-10) == 0.0);
    CHECK(functional_residual(PoincareSpec(2.0), 0.1, 1e-10) <= 1e-8);
    CHECK(functional_residual(PoincareSpec(4.0), 0.2, 1e-10) <= 1e-8);
}

TEST_CASE("property: functional equation holds on the disk |z| <= 2") {
    std::mt19937_64 rng(51);
    for (const Complex s : {Complex(2.0), Complex(-2.0), Complex(4.0), Complex(1.5, 1.5), Complex(0.0, -3.0)}) {
        const PoincareSpec spec(s);
        for (int i = 0; i < 50; ++i) {
            REQUIRE(functional_residual(spec, verify::sample_disk(rng, 2.0), 1e-10) <= 1e-7);
        }
    }
}

TEST_CASE("property: direct and one-step continued values agree inside the base disk") {
    std::mt19937_64 rng(52);
    for (const Complex s : {Complex(2.0), Complex(-2.0), Complex(1.5, 1.5)}) {
        const PoincareSpec spec(s);
        const auto family = spec.family();
        for (int i = 0; i < 50; ++i) {
            const Complex z = verify::sample_disk(rng, spec.base_radius());
            const auto direct = eval_certified(family, z, 1e-10);
            const auto pulled = eval_certified(family, z / s, 1e-10);
            const Complex u = pulled.value;
            const double e = pulled.error_bound;
            const double carried = std::abs(s) * e * (1.0 + 2.0 * std::abs(u) + e);
            REQUIRE(std::abs(direct.value - spec.step(u)) <= direct.error_bound + carried + 1e-15);
        }
    }
}

TEST_CASE("property: continued values match the closed forms") {
    std::mt19937_64 rng(53);
    for (int index = 1; index <= 3; ++index) {
        const PoincareSpec spec(oracle_multiplier(index));
        for (int i = 0; i < 100; ++i) {
            const Complex z = verify::sample_disk(rng, 1.0);
            REQUIRE(std::abs(poincare_eval(spec, z, 1e-9).value - oracle_h(index, z)) <= 1e-8);
        }
    }
}

TEST_CASE("oracle_h closed forms") {
    for (int i = 1; i <= 3; ++i) {
        CHECK(oracle_h(i, 0.0) == Complex(0.0));
    }
    CHECK(std::abs(oracle_h(1, 1.0) - 3.1945280494653248) < 1e-15);
    const double quarter_pi_sq = std::numbers::pi * std::numbers::pi / 4.0;
    CHECK(std::abs(oracle_h(3, -quarter_pi_sq) - Complex(-1.0)) < 1e-15);
    // h_2 through the textbook formula
    const Complex z(0.3, -0.4);
    const Complex textbook = std::sin(2.0 * z / std::sqrt(3.0) + std::numbers::pi / 6.0) - 0.5;
    CHECK(std::abs(oracle_h(2, z) - textbook) < 1e-15);
    // h_3 through (cosh(2 sqrt z) - 1)/2
    const Complex w(1.3, 0.7);
    CHECK(std::abs(oracle_h(3, w) - (std::cosh(2.0 * std::sqrt(w)) - 1.0) / 2.0) < 1e-14);
    // Derivative at 0 is 1.
    for (int i = 1; i <= 3; ++i) {
        CHECK(std::abs(oracle_h(i, 1e-8) / 1e-8 - 1.0) < 1e-7);
    }
    CHECK_THROWS_AS(oracle_h(4, 0.0), ValidationError);
}

TEST_CASE("lemma31_residual") {
    CHECK(lemma31_residual(1, 0.0) == 0.0);
    CHECK(lemma31_residual(2, 0.3) <= 1e-13);
    CHECK(lemma31_residual(3, Complex(1.0, 1.0)) <= 1e-12);
}

TEST_CASE("uniqueness_probe") {
    const PoincareSpec two(2.0);
    CHECK(uniqueness_probe(two, 7, 0.0) == Complex(0.0));
    CHECK(std::abs(uniqueness_probe(two, 40, 0.5) - 0.8591409142295225) < 1e-12);
    CHECK(std::abs(uniqueness_probe(PoincareSpec(4.0), 30, 0.5) - 0.5890917783042856) < 1e-12);
    CHECK(std::abs(uniqueness_probe(PoincareSpec(-2.0), 30, 0.5) - oracle_h(2, 0.5)) < 1e-12);

    CHECK_THROWS_AS(uniqueness_probe(PoincareSpec(3.0), 10, 0.5, ProbeOracle::h1), ValidationError);
    CHECK_THROWS_AS(uniqueness_probe(two, 0, 0.5), ValidationError);

    // Unmatched s falls back to the identity probe, i.e. the partial composition.
    const PoincareSpec three(3.0);
    CHECK(uniqueness_probe(three, 12, 0.5) == compose_pointwise(three.family(), 1, 12, 0.5));
}

TEST_CASE("property: identity probe converges geometrically in N") {
    const PoincareSpec two(2.0);
    const Complex z = 0.5;
    const Complex exact = oracle_h(1, z);
    double previous = std::numeric_limits<double>::infinity();
    for (const std::size_t n : {5, 10, 20, 40}) {
        const double err = std::abs(uniqueness_probe(two, n, z, ProbeOracle::identity) - exact);
        CHECK(err < previous);
        if (std::isfinite(previous) && n < 40) {
            // Doubling N roughly squares the error ratio 2^-N.
            CHECK(err < previous * 0.1);
        }
        previous = err;
    }
    CHECK(previous < 1e-11);
}
