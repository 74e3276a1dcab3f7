#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "divl1/arith.hpp"
#include "divl1/expsum.hpp"

using namespace divl1;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("direct evaluation small cases") {
    DivisorTable table(100);
    // S_3(alpha) = e(a) + 2 e(2a) + 2 e(3a)
    double a = 0.37;
    std::complex<double> want = 0;
    double ds[] = {1, 2, 2};
    for (int n = 1; n <= 3; ++n) {
        double ph = 2 * kPi * n * a;
        want += ds[n - 1] * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    std::complex<double> got = eval_S_direct(3, a, table);
    CHECK(std::abs(got - want) < 1e-14);

    // alpha = 0 collapses to the divisor prefix sum
    CHECK(eval_S_direct(50, 0.0, table).real() ==
          doctest::Approx((double)table.prefix_d(50)));
    CHECK(std::abs(eval_S_direct(50, 0.0, table).imag()) < 1e-12);

    // periodicity
    std::complex<double> shifted = eval_S_direct(50, a + 3.0, table);
    CHECK(std::abs(shifted - eval_S_direct(50, a, table)) < 1e-10);
}

TEST_CASE("fft sampling matches direct evaluation") {
    DivisorTable table(5000);
    std::uint64_t x = 4096;
    std::size_t m = 6000;
    SumSampling s = sample_S_fft(x, m, table);
    REQUIRE(s.values.size() == m);
    CHECK(s.x == x);
    CHECK(s.grid == m);

    std::mt19937_64 rng(20260826);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t j = pick(rng);
        double alpha = static_cast<double>(j) / static_cast<double>(m);
        std::complex<double> want = eval_S_direct(x, alpha, table);
        INFO("j=", j);
        CHECK(std::abs(s.values[j] - want) <=
              1e-9 * std::max(1.0, std::abs(want)));
    }

    // j = 0 and conjugate symmetry values[m-j] = conj(values[j])
    CHECK(s.values[0].real() == doctest::Approx((double)table.prefix_d(x)));
    for (std::size_t j : {1UL, 17UL, m / 2 - 3}) {
        CHECK(std::abs(s.values[m - j] - std::conj(s.values[j])) <
              1e-6 * std::max(1.0, std::abs(s.values[j])));
    }

    // weighted sum bookkeeping
    long double wsum = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        wsum += static_cast<long double>(n) * table.d(n);
    CHECK(s.weighted_sum == doctest::Approx((double)wsum));

    CHECK_THROWS(sample_S_fft(100, 99, table));  // M < x loses Parseval
}

TEST_CASE("parseval identity on the grid") {
    DivisorTable table(3000);
    for (std::uint64_t x : {64ULL, 1000ULL, 2500ULL}) {
        SumSampling s = sample_S_fft(x, static_cast<std::size_t>(x) + 7, table);
        double exact = static_cast<double>(table.prefix_d2(x));
        CHECK(l2_norm_sq(s) == doctest::Approx(exact).epsilon(1e-11));
    }
}

TEST_CASE("l1 bracket is honest and refines") {
    DivisorTable table(2048);
    std::uint64_t x = 1024;

    SumSampling coarse = sample_S_fft(x, 2048, table);
    SumSampling fine = sample_S_fft(x, 8192, table);
    L1Estimate lc = l1_norm(coarse);
    L1Estimate lf = l1_norm(fine);

    // half width scales like 1/M
    CHECK(lc.half_width == doctest::Approx(4.0 * lf.half_width).epsilon(1e-9));
    // the two brackets overlap
    CHECK(lc.value - lc.half_width <= lf.value + lf.half_width);
    CHECK(lf.value - lf.half_width <= lc.value + lc.half_width);
    // bracket contains an independent fine Riemann sum
    SumSampling finer = sample_S_fft(x, 32768, table);
    double ref = l1_norm(finer).value;
    CHECK(std::fabs(lc.value - ref) <= lc.half_width * 1.1);

    // L1 <= sqrt(L2^2) by Cauchy-Schwarz on the grid
    CHECK(lf.value <= std::sqrt(l2_norm_sq(fine)) + 1e-9);
}
