#pragma once

#include <cstdint>
#include <vector>

#include "divl1/arith.hpp"

namespace divl1 {

// sum_{n<=x, n = a mod q} d(n) split into smooth main term and error.
struct ProgressionDecomposition {
    std::uint64_t q = 1;
    std::uint64_t x = 1;
    std::vector<std::uint64_t> raw;  // index a-1, a = 1..q; exact integers
    std::vector<double> main;        // M_x(q,a)
    std::vector<double> err;         // raw - main
};

// M_x(q,a) = (x/q) sum_{r|q} (c_r(a)/r)(log(x/r^2) + 2 gamma_E - 1).
double main_term(std::uint64_t q, std::uint64_t a, double x);

// Same shape but built from the exact I_r(0)/r (the t = 1 boundary term
// kept): (1/q) sum_{r|q} c_r(a) * I_r(0)/r. This is the version that
// turns the finite Fourier identity below into a machine-precision one.
double main_term_exact(std::uint64_t q, std::uint64_t a, double x);

ProgressionDecomposition decompose(std::uint64_t q, std::uint64_t x,
                                   const DivisorTable& table);

// sum_a |E_x(q,a)|^2
double variance(std::uint64_t q, std::uint64_t x, const DivisorTable& table);

struct DftIdentityGaps {
    double gap_exact;   // both sides with the exact boundary convention
    double gap_f_form; // left side built from F(q) instead; O(1)-per-point off
};

// sum_b |Delta_x(b/q)|^2 = q sum_a |E_x(q,a)|^2 (exact finite Parseval).
DftIdentityGaps dft_identity_gaps(std::uint64_t q, std::uint64_t x,
                                  const DivisorTable& table);
double dft_identity_gap(std::uint64_t q, std::uint64_t x, const DivisorTable& table);

// sum_a M_x(q,a) e(ab/q) = I_{q'}(0)/q' at q' = q/(q,b).
double twisted_main_identity_gap(std::uint64_t q, std::uint64_t b, double x);

// Gap between the Ramanujan-sum main term and the Lau-Zhao form
// (divisor-restricted phi weights plus the mu log d / d correction).
double lauzhao_equivalence_gap(std::uint64_t q, std::uint64_t a, double x);

}  // namespace divl1
