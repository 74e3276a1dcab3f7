#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "divl1/arith.hpp"
#include "divl1/series.hpp"

namespace divl1 {

// zeta(s) = 1/(s-1) + a1 + a2(s-1) + ... as a formal series; order is
// the number of stored coefficients (order-1 symbols a1..a_{order-1}
// are used, capped at a7).
LaurentSeries zeta_laurent(unsigned order);

// 1/zeta(2s) and 1/zeta(s+1) around s=1, written with the inert
// symbols Fk / Gk for the k-th derivative at 1.
LaurentSeries mathcal_f_series(unsigned order);
LaurentSeries mathcal_g_series(unsigned order);

// exp(t*(s-1)) truncated.
LaurentSeries exp_series(const SymPoly& t, unsigned order);

// The residue at s=1 of zeta(s)^4 * (1/zeta(2s)) * x^s / s, divided by
// x: a polynomial in L (= log x), F0..F3 and a1..a3. sum d(n)^2 equals
// x times this up to O(x^(1/2+eps)).
SymPoly residue_divisor_square(unsigned order = 8);

// (J,K) -> coefficient of L^J * F_K in the residue above.
std::map<std::pair<int, int>, SymPoly> c_coefficient_table(unsigned order = 8);

struct CoeffTable {
    // the lemma's combinatorial pieces, all exact SymPoly
    std::map<std::pair<int, int>, SymPoly> t_jk;  // (J,K) -> t(J,K)
    std::map<int, SymPoly> t_j;                   // J -> t(J)
    std::map<std::pair<int, int>, SymPoly> d;     // (J,K) -> t(J,K) + [K=0] t(J)
};

// The alpha parameters of the arc-weight model g_q(t) =
// beta00 + beta10*log q + beta01*log t, beta00 = alpha00 + alpha01.
struct AlphaParams {
    SymPoly a00, a01, a10;
    static AlphaParams formal();   // the free symbols Alpha00/01/10
    static AlphaParams standard(); // (2*a1 - 1, 1, -2), the g_q weight alphas
};

// S(Q*,X) = sum over beta-pairs with Q+Q'+1 = Q*, X+X' = X.
SymPoly s_quadratic(int q_star, int x_cap, const AlphaParams& alpha);

// mu_{Q*,X} at outer indices (J,K); zero when Q* < max(1,K).
SymPoly mu_coefficient(int J, int K, int q_star, int x_cap);

// gamma*_{Q*,X} at outer index J; zero when Q* < 1 or Q* > J.
SymPoly gamma_star_coefficient(int J, int q_star, int x_cap);

// Full combinatorial pipeline for arbitrary alphas.
CoeffTable lemma2a_tables(const AlphaParams& alpha);

// Specialization at the standard alphas; d entries are polynomials in
// a1, a2 and 1/Delta only.
CoeffTable assemble_d_coeffs();

// Independent route to the same coefficients: expand
//   (1/x) sum_{q<=gamma} phi(q)/q^2 int_1^x g_q(t)^2 dt
// through the Dirichlet-series residue
//   Res_{s=1} { A^(Q)(s) gamma^(s-1) / (s-1) },  A(s) = zeta(s)/zeta(s+1),
// with gamma^(s-1) = exp((s-1) * L * InvDelta). Returns the full
// polynomial in L, G0..G3, a's and InvDelta, including the J=0 row the
// tables do not list.
SymPoly lemma2_rhs_via_residue(const AlphaParams& alpha, unsigned order = 8);

struct MatchEntry {
    SymPoly c, d, diff;  // diff = c - d/2^K at InvDelta = 1/2
};

// Delta = 2 cancellation: for every (J,K) with J+K <= 3 compares
// c_{J,K} with d_{J,K}/2^K at InvDelta = 1/2. The J >= 1 differences
// vanish identically; the J = 0 row is reported only.
std::map<std::pair<int, int>, MatchEntry> delta2_matching();

// Numeric values of the formal symbols, from an Euler-Maclaurin oracle:
// Stieltjes constants for a1..a3 and zeta/zeta'/zeta''/zeta''' at 2 for
// F0..F3 and G0..G3.
struct NumericConstants {
    long double a1, a2, a3;
    long double zeta2, zeta2_d1, zeta2_d2, zeta2_d3;
    std::array<long double, 4> F;  // F[k] = d^k/ds^k 1/zeta(2s) at s=1
    std::array<long double, 4> G;  // G[k] = d^k/ds^k 1/zeta(s+1) at s=1

    // symbol value vector for SymPoly::eval; log_x fills L, inv_delta
    // fills InvDelta, alphas fill Alpha00/01/10
    std::array<long double, kNumSymbols> symbol_values(
        long double log_x = 0, long double inv_delta = 0,
        std::array<long double, 3> alphas = {0, 0, 0}) const;
};

NumericConstants numeric_constants();

// int_1^x (log t)^n dt, exactly: value, plus the closed form
// x * poly(L) + boundary constant.
struct LogMomentForm {
    SymPoly x_poly;       // polynomial in L multiplying x
    Q boundary;           // the exact additive constant
    long double value;    // numeric value at the given x
};
LogMomentForm log_moment_integral(unsigned n, long double x);

// sum_{q<=gamma} phi(q) (-log q)^Q / q^2 against the residue
// prediction; the gap is O(1/sqrt(gamma)).
struct PhiLogWeightResult {
    long double lhs, rhs, gap;
};
PhiLogWeightResult phi_logweight_sum(unsigned Qpow, long double gamma,
                                     const DivisorTable& table);

}  // namespace divl1
