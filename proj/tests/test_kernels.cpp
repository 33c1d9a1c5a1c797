#include "infcomp/composer.hpp"
#include "infcomp/error.hpp"
#include "infcomp/kernels.hpp"
#include "infcomp/verify.hpp"

#include <doctest.h>

#include <cstring>
#include <random>

using namespace infcomp;
namespace k = infcomp::kernels;

namespace {

struct Points {
    std::vector<double> re, im;
};

Points random_points(std::mt19937_64 &rng, std::size_t n, double radius) {
    Points p;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex z = verify::sample_disk(rng, radius);
        p.re.push_back(z.real());
        p.im.push_back(z.imag());
    }
    return p;
}

bool same_bits(const std::vector<double> &a, const std::vector<double> &b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct IsaGuard {
    ~IsaGuard() { k::set_isa_override(std::nullopt); }
};

} // namespace

TEST_CASE("scalar reference kernels") {
    std::vector<double> re{2.0, 0.0, 1.0};
    std::vector<double> im{0.0, 0.0, 1.0};
    k::scalar::add_monomial(re, im, 0.5, 2);
    // 2 + 4/2 = 4; 0 stays 0; (1+i) + (2i)/2 = 1 + 2i
    CHECK(re == std::vector<double>{4.0, 0.0, 1.0});
    CHECK(im == std::vector<double>{0.0, 0.0, 2.0});

    std::vector<double> pre{2.0};
    std::vector<double> pim{0.0};
    const std::vector<Complex> coeffs{1.0, 0.0, 3.0};
    k::scalar::apply_polynomial(pre, pim, coeffs);
    CHECK(pre[0] == 13.0);
    CHECK(pim[0] == 0.0);
}

TEST_CASE("dispatch reports and pins the instruction set") {
    IsaGuard guard;
    CHECK(k::isa_available(k::Isa::scalar));
    CHECK(k::isa_available(k::detected_isa()));
    k::set_isa_override(k::Isa::scalar);
    CHECK(k::active_isa() == k::Isa::scalar);
    k::set_isa_override(std::nullopt);
    if (!k::isa_available(k::Isa::avx2)) {
        CHECK_THROWS_AS(k::set_isa_override(k::Isa::avx2), ValidationError);
    }
}

#ifdef INFCOMP_HAVE_AVX2_KERNELS
TEST_CASE("avx2 kernels are bitwise identical to the scalar reference") {
    if (!k::isa_available(k::Isa::avx2)) {
        MESSAGE("CPU lacks AVX2; equivalence not exercised");
        return;
    }
    std::mt19937_64 rng(31);
    for (std::size_t n = 0; n <= 37; ++n) {
        for (unsigned exponent = 1; exponent <= 9; ++exponent) {
            const Points start = random_points(rng, n, 1.5);
            const Complex c = verify::sample_disk(rng, 1.0);
            Points a = start, b = start;
            k::scalar::add_monomial(a.re, a.im, c, exponent);
            k::avx2::add_monomial(b.re, b.im, c, exponent);
            REQUIRE(same_bits(a.re, b.re));
            REQUIRE(same_bits(a.im, b.im));
        }
        for (std::size_t degree = 0; degree <= 8; ++degree) {
            const Points start = random_points(rng, n, 1.5);
            std::vector<Complex> coeffs(degree + 1);
            for (auto &c : coeffs) {
                c = verify::sample_disk(rng, 2.0);
            }
            Points a = start, b = start;
            k::scalar::apply_polynomial(a.re, a.im, coeffs);
            k::avx2::apply_polynomial(b.re, b.im, coeffs);
            REQUIRE(same_bits(a.re, b.re));
            REQUIRE(same_bits(a.im, b.im));
        }
    }
}

TEST_CASE("avx2 kernels propagate overflow like the scalar reference") {
    if (!k::isa_available(k::Isa::avx2)) {
        return;
    }
    Points a{{1e200, -1e200, 1.0, 3.0, 1e300}, {0.0, 1e200, 0.0, -2.0, 1e300}};
    Points b = a;
    k::scalar::add_monomial(a.re, a.im, Complex(0.5, 0.25), 3);
    k::avx2::add_monomial(b.re, b.im, Complex(0.5, 0.25), 3);
    REQUIRE(same_bits(a.re, b.re));
    REQUIRE(same_bits(a.im, b.im));
}
#endif

TEST_CASE("batched composition agrees with single points under every instruction set") {
    IsaGuard guard;
    std::mt19937_64 rng(32);
    const std::vector<FactorFamily> families = {
        FactorFamily::geometric(2.0),
        FactorFamily::geometric(Complex(1.5, 1.5), 3),
        FactorFamily::power_law(3.0, 3),
        verify::random_explicit_family(rng, 10, 5, 0.8),
    };
    std::vector<Complex> points;
    for (int i = 0; i < 23; ++i) {
        points.push_back(verify::sample_disk(rng, 1.0));
    }
    for (const auto &family : families) {
        std::vector<std::vector<Complex>> per_isa;
        for (const k::Isa isa : {k::Isa::scalar, k::Isa::avx2}) {
            if (!k::isa_available(isa)) {
                continue;
            }
            k::set_isa_override(isa);
            per_isa.push_back(compose_pointwise(family, 1, 40, points));
            for (std::size_t i = 0; i < points.size(); ++i) {
                const Complex single = compose_pointwise(family, 1, 40, points[i]);
                REQUIRE(single == per_isa.back()[i]);
            }
        }
        for (const auto &values : per_isa) {
            REQUIRE(values == per_isa.front());
        }
    }
}
