#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "divl1/arith.hpp"

namespace divl1 {

// Equispaced samples S_x(j/M), j = 0..M-1, of the exponential sum
// S_x(alpha) = sum_{n<=x} d(n) e(n alpha). M >= x keeps the discrete
// Parseval identity exact.
struct SumSampling {
    std::uint64_t x = 0;
    std::size_t grid = 0;  // M
    std::vector<std::complex<double>> values;
    double weighted_sum = 0;  // sum_{n<=x} n d(n), for the L1 error bracket
};

// Direct O(x) accumulation of S_x(alpha) with pairwise summation.
std::complex<double> eval_S_direct(std::uint64_t x, double alpha, const DivisorTable& table);

// Batch evaluation at j/M via one complex FFT. Requires M >= x; any M
// is accepted (no internal rounding).
SumSampling sample_S_fft(std::uint64_t x, std::size_t M, const DivisorTable& table);

struct L1Estimate {
    double value;       // (1/M) sum |S(j/M)|
    double half_width;  // certified bracket from |S'| <= 2 pi sum n d(n)
};

// Riemann-rule L1 norm with a first-derivative error bracket.
L1Estimate l1_norm(const SumSampling& sampling);

// (1/M) sum |S|^2; equals prefix_d2[x] by Parseval.
double l2_norm_sq(const SumSampling& sampling);

// CSV of (j/M, |S|) rows for plotting.
void dump_sampling_csv(const SumSampling& sampling, const std::string& path);

}  // namespace divl1
