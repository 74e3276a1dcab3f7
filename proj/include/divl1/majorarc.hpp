#pragma once

#include <complex>
#include <cstdint>

#include "divl1/farey.hpp"

namespace divl1 {

// Euler-Mascheroni constant, 30 digits. This is the same quantity the
// symbolic engine re-derives as a1; keep the two within 1e-18 of each
// other (checked in tests).
inline constexpr long double kEulerGamma =
    0.577215664901532860606512090082L;

// f_q(t) = log(t/q^2) + 2*gamma_E - 1
double f_weight(double t, std::uint64_t q);
// g_q(t) = d/dt { t f_q(t) } = f_q(t) + 1
double g_weight(double t, std::uint64_t q);

// F(q) = (x/q) f_q(x)
double arc_main_value(std::uint64_t q, double x);

// I_q(0) = int_1^x g_q = x f_q(x) - f_q(1), exactly
double osc_integral_at_zero(std::uint64_t q, double x);

// I_q(0)/q, the beta = 0 approximant with the t = 1 boundary term kept
double arc_main_value_exact(std::uint64_t q, double x);

// I_q(beta) = int_1^x e(t beta) g_q(t) dt. Closed form at beta = 0;
// otherwise one integration by parts plus the sine/cosine integrals,
// with a Taylor path when 2*pi*|beta|*x is small.
std::complex<double> osc_integral(double beta, std::uint64_t q, double x);

// S*(alpha) = I_q(beta)/q with beta = alpha - a/q; alpha must lie in
// the arc (mod 1).
std::complex<double> arc_approximant(double alpha, const FareyArc& arc, double x);

// L(0) = int_1^x g_q(t)^2 dt via the antiderivative t(u^2 - 2u + 2),
// u = log(t/q^2) + 2*gamma_E.
double autocorrelation_at_zero(std::uint64_t q, double x);

struct PlancherelResult {
    double truncated_integral;  // int_{-B}^{B} |I_q|^2
    double l0;                  // L(0)
    double relative_gap;
};

// Numeric check of int |I_q(beta)|^2 d beta = L(0) on [-B, B];
// the tail is O(1/B).
PlancherelResult plancherel_check(std::uint64_t q, double x, double B);

}  // namespace divl1
