#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>

#include "divl1/majorarc.hpp"
#include "divl1/symbolic.hpp"

using namespace divl1;

namespace {

constexpr double kPi = 3.14159265358979323846;

// adaptive Simpson quadrature, independent oracle for the integrals
template <typename F>
std::complex<double> simpson_step(const F& f, double a, double b,
                                  std::complex<double> fa,
                                  std::complex<double> fm,
                                  std::complex<double> fb,
                                  std::complex<double> whole, double eps,
                                  int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = f(lm), frm = f(rm);
    std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    std::complex<double> delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15 * eps)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

template <typename F>
std::complex<double> adaptive_simpson(const F& f, double a, double b,
                                      double eps = 1e-12) {
    double m = 0.5 * (a + b);
    std::complex<double> fa = f(a), fm = f(m), fb = f(b);
    std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, eps, 40);
}

std::complex<double> osc_integral_oracle(double beta, std::uint64_t q, double x) {
    auto f = [beta, q](double t) {
        double phase = 2 * kPi * beta * t;
        return std::complex<double>(std::cos(phase), std::sin(phase)) *
               g_weight(t, q);
    };
    // split at panel boundaries so the oscillation is resolved
    std::complex<double> total = 0;
    double period = beta != 0 ? 1.0 / std::fabs(beta) : x;
    double step = std::min(x - 1.0, std::max(1.0, period));
    double a = 1.0;
    while (a < x) {
        double b = std::min(x, a + step);
        total += adaptive_simpson(f, a, b);
        a = b;
    }
    return total;
}

}  // namespace

TEST_CASE("weight functions and closed forms at beta = 0") {
    std::uint64_t q = 7;
    CHECK(g_weight(5.0, q) == doctest::Approx(f_weight(5.0, q) + 1.0));
    CHECK(f_weight(49.0, q) ==
          doctest::Approx(2.0 * (double)kEulerGamma - 1.0));

    double x = 1000.0;
    CHECK(arc_main_value(q, x) == doctest::Approx((x / q) * f_weight(x, q)));
    CHECK(osc_integral_at_zero(q, x) ==
          doctest::Approx(x * f_weight(x, q) - f_weight(1.0, q)));
    CHECK(arc_main_value_exact(q, x) ==
          doctest::Approx(osc_integral_at_zero(q, x) / q));

    // I_q(0) from the quadrature oracle
    std::complex<double> oracle = osc_integral_oracle(0.0, q, x);
    CHECK(oracle.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(osc_integral_at_zero(q, x) ==
          doctest::Approx(oracle.real()).epsilon(1e-10));

    // the f/g constants agree with the symbolic engine's a1
    NumericConstants nc = numeric_constants();
    CHECK(std::fabs(nc.a1 - kEulerGamma) < 1e-15L);
}

TEST_CASE("oscillatory integral against quadrature") {
    double x = 2000.0;
    for (std::uint64_t q : {1ULL, 3ULL, 10ULL}) {
        for (double beta : {1e-7, 1e-5, 3e-4, 0.002, 0.01, 0.2}) {
            std::complex<double> got = osc_integral(beta, q, x);
            std::complex<double> want = osc_integral_oracle(beta, q, x);
            INFO("q=", q, " beta=", beta);
            CHECK(std::abs(got - want) <=
                  1e-8 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("taylor and by-parts branches agree at the crossover") {
    double x = 5000.0;
    std::uint64_t q = 4;
    // 2 pi beta x near 6: probe both sides and the oracle
    for (double mult : {0.8, 0.95, 1.0, 1.05, 1.3}) {
        double beta = mult * 6.0 / (2 * kPi * x);
        std::complex<double> got = osc_integral(beta, q, x);
        std::complex<double> want = osc_integral_oracle(beta, q, x);
        CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("conjugate symmetry and continuity in beta") {
    double x = 1500.0;
    std::uint64_t q = 5;
    for (double beta : {1e-6, 1e-4, 0.03}) {
        std::complex<double> plus = osc_integral(beta, q, x);
        std::complex<double> minus = osc_integral(-beta, q, x);
        CHECK(minus.real() == doctest::Approx(plus.real()));
        CHECK(minus.imag() == doctest::Approx(-plus.imag()));
    }
    // beta -> 0 limit matches the closed form
    std::complex<double> tiny = osc_integral(1e-13, q, x);
    CHECK(tiny.real() ==
          doctest::Approx(osc_integral_at_zero(q, x)).epsilon(1e-9));
    CHECK(std::abs(tiny.imag()) < 1e-4);
}

TEST_CASE("arc approximant uses the arc's own centre") {
    auto arcs = dissection(12);
    double x = 800.0;
    for (const auto& arc : arcs) {
        double alpha = arc.centre().to_double() + 1e-4;
        if (!(Rat::make(0, 1) < arc.right)) continue;
        std::complex<double> val = arc_approximant(alpha, arc, x);
        double beta = alpha - static_cast<double>(arc.a) / arc.q;
        std::complex<double> want = osc_integral(beta, arc.q, x) /
                                    static_cast<double>(arc.q);
        CHECK(std::abs(val - want) < 1e-12 * std::max(1.0, std::abs(want)));
    }
    // outside the arc it must throw
    const FareyArc& first = arcs.front();
    CHECK_THROWS(arc_approximant(first.right.to_double() + 0.01, first, x));
}

TEST_CASE("autocorrelation at zero against quadrature") {
    double x = 3000.0;
    for (std::uint64_t q : {1ULL, 2ULL, 9ULL, 30ULL}) {
        auto f = [q](double t) {
            double g = g_weight(t, q);
            return std::complex<double>(g * g, 0.0);
        };
        std::complex<double> oracle = adaptive_simpson(f, 1.0, x);
        CHECK(autocorrelation_at_zero(q, x) ==
              doctest::Approx(oracle.real()).epsilon(1e-10));
    }
}

TEST_CASE("plancherel balance over a widening window") {
    std::uint64_t q = 3;
    double x = 400.0;
    double prev_gap = 1e9;
    for (double b : {0.5, 2.0, 8.0}) {
        auto r = plancherel_check(q, x, b);
        CHECK(r.truncated_integral <= r.l0 * (1 + 1e-6));
        CHECK(r.relative_gap < prev_gap + 1e-12);
        prev_gap = r.relative_gap;
    }
    auto wide = plancherel_check(q, x, 8.0);
    CHECK(wide.relative_gap < 5e-3);
}
