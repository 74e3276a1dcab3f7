#include "divl1/symbolic.hpp"

#include <cmath>
#include <stdexcept>

namespace divl1 {

namespace {

// a_m with a_0 = 1; symbols exist up to a7.
SymPoly zeta_coefficient(int m) {
    if (m < 0) return SymPoly();
    if (m == 0) return SymPoly(Q(1));
    if (m > 7) throw std::invalid_argument("zeta coefficient beyond a7");
    return SymPoly::sym(static_cast<Symbol>(A1 + (m - 1)));
}

LaurentSeries derivative_series(const SymPoly& deriv_sym0, Symbol base, unsigned order) {
    // sum_K sym(base+K) u^K / K!, K <= 3, zero beyond (the fourth
    // derivative never reaches the residue window)
    (void)deriv_sym0;
    std::vector<SymPoly> coeffs(order);
    for (unsigned k = 0; k < order && k <= 3; ++k)
        coeffs[k] = SymPoly::sym(static_cast<Symbol>(base + k)) * (Q(1) / factorial_q(k));
    return LaurentSeries(0, std::move(coeffs));
}

// 1/(1+u) truncated
LaurentSeries geometric_alternating(unsigned order) {
    std::vector<SymPoly> coeffs(order);
    for (unsigned k = 0; k < order; ++k) coeffs[k] = SymPoly(Q(k % 2 == 0 ? 1 : -1));
    return LaurentSeries(0, std::move(coeffs));
}

}  // namespace

LaurentSeries zeta_laurent(unsigned order) {
    if (order < 2) throw std::invalid_argument("zeta_laurent: order must be >= 2");
    if (order > 9) throw std::invalid_argument("zeta_laurent: symbols stop at a7");
    std::vector<SymPoly> coeffs(order);
    coeffs[0] = SymPoly(Q(1));
    for (unsigned k = 1; k < order; ++k) coeffs[k] = zeta_coefficient(static_cast<int>(k));
    return LaurentSeries(-1, std::move(coeffs));
}

LaurentSeries mathcal_f_series(unsigned order) { return derivative_series({}, F0, order); }
LaurentSeries mathcal_g_series(unsigned order) { return derivative_series({}, G0, order); }

LaurentSeries exp_series(const SymPoly& t, unsigned order) {
    std::vector<SymPoly> coeffs(order);
    SymPoly power(Q(1));
    for (unsigned k = 0; k < order; ++k) {
        coeffs[k] = power * (Q(1) / factorial_q(k));
        power = power * t;
    }
    return LaurentSeries(0, std::move(coeffs));
}

SymPoly residue_divisor_square(unsigned order) {
    if (order < 5)
        throw std::invalid_argument("residue_divisor_square: order must be >= 5");
    LaurentSeries z = zeta_laurent(order);
    LaurentSeries z4 = z * z * z * z;
    LaurentSeries product = z4 * mathcal_f_series(order) *
                            exp_series(SymPoly::sym(L), order) *
                            geometric_alternating(order);
    return product.residue();
}

std::map<std::pair<int, int>, SymPoly> c_coefficient_table(unsigned order) {
    SymPoly res = residue_divisor_square(order);
    std::map<std::pair<int, int>, SymPoly> table;
    for (int jj = 0; jj <= 3; ++jj)
        for (int kk = 0; jj + kk <= 3; ++kk)
            table[{jj, kk}] =
                res.coeff_of(L, static_cast<unsigned>(jj))
                    .coeff_of(static_cast<Symbol>(F0 + kk), 1);
    return table;
}

AlphaParams AlphaParams::formal() {
    return {SymPoly::sym(Alpha00), SymPoly::sym(Alpha01), SymPoly::sym(Alpha10)};
}

AlphaParams AlphaParams::standard() {
    return {SymPoly::sym(A1) * Q(2) - SymPoly(Q(1)), SymPoly(Q(1)), SymPoly(Q(-2))};
}

namespace {

struct BetaTerm {
    int qexp, xexp;  // exponents of log q and log t
    SymPoly value;
};

std::vector<BetaTerm> beta_terms(const AlphaParams& alpha) {
    return {{0, 0, alpha.a00 + alpha.a01}, {1, 0, alpha.a10}, {0, 1, alpha.a01}};
}

}  // namespace

SymPoly s_quadratic(int q_star, int x_cap, const AlphaParams& alpha) {
    SymPoly total;
    auto betas = beta_terms(alpha);
    for (const auto& b1 : betas)
        for (const auto& b2 : betas)
            if (b1.qexp + b2.qexp + 1 == q_star && b1.xexp + b2.xexp == x_cap)
                total += b1.value * b2.value;
    return total;
}

SymPoly mu_coefficient(int J, int K, int q_star, int x_cap) {
    if (q_star < 1 || q_star < K) return SymPoly();
    Q magnitude = factorial_q(static_cast<unsigned>(q_star - 1)) *
                  factorial_q(static_cast<unsigned>(x_cap)) /
                  (factorial_q(static_cast<unsigned>(J)) *
                   factorial_q(static_cast<unsigned>(K)));
    int sign = ((J + q_star + x_cap) % 2 == 0) ? 1 : -1;
    return zeta_coefficient(q_star - K) * (Q(-sign) * magnitude);
}

SymPoly gamma_star_coefficient(int J, int q_star, int x_cap) {
    if (q_star < 1 || q_star > J) return SymPoly();
    Q magnitude = factorial_q(static_cast<unsigned>(x_cap)) /
                  (factorial_q(static_cast<unsigned>(J - q_star)) * Q(q_star));
    int sign = ((J + q_star + x_cap) % 2 == 0) ? 1 : -1;
    return SymPoly::sym(InvDelta, static_cast<unsigned>(q_star)) * (Q(sign) * magnitude);
}

CoeffTable lemma2a_tables(const AlphaParams& alpha) {
    CoeffTable table;
    for (int jj = 0; jj <= 3; ++jj) {
        for (int kk = 0; jj + kk <= 3; ++kk) {
            SymPoly t;
            for (int qs = 1; qs <= 3; ++qs)
                for (int xc = 0; qs + xc <= 3; ++xc) {
                    if (qs + xc < 1 || xc < jj || qs < kk) continue;
                    t += mu_coefficient(jj, kk, qs, xc) * s_quadratic(qs, xc, alpha);
                }
            table.t_jk[{jj, kk}] = t;
        }
        SymPoly tj;
        for (int qs = 1; qs <= jj; ++qs)
            for (int xc = 0; qs + xc <= 3; ++xc) {
                if (jj < qs || jj > qs + xc) continue;
                tj += gamma_star_coefficient(jj, qs, xc) * s_quadratic(qs, xc, alpha);
            }
        table.t_j[jj] = tj;
    }
    for (const auto& [jk, t] : table.t_jk) {
        SymPoly d = t;
        if (jk.second == 0) d += table.t_j[jk.first];
        table.d[jk] = d;
    }
    return table;
}

CoeffTable assemble_d_coeffs() { return lemma2a_tables(AlphaParams::standard()); }

SymPoly lemma2_rhs_via_residue(const AlphaParams& alpha, unsigned order) {
    // A(s) = zeta(s) * (1/zeta(s+1)); residues of A^(Q) gamma^(s-1)/(s-1)
    LaurentSeries a_series = zeta_laurent(order) * mathcal_g_series(order);
    LaurentSeries gamma_pow = exp_series(SymPoly::sym(L) * SymPoly::sym(InvDelta), order);
    std::array<SymPoly, 3> res_q;
    LaurentSeries current = a_series;
    for (unsigned qq = 0; qq <= 2; ++qq) {
        res_q[qq] = (current * gamma_pow).coeff(0);
        current = current.derivative();
    }

    auto betas = beta_terms(alpha);
    SymPoly total;
    for (const auto& b1 : betas) {
        for (const auto& b2 : betas) {
            int qtot = b1.qexp + b2.qexp;
            int xtot = b1.xexp + b2.xexp;
            SymPoly beta_prod = b1.value * b2.value;
            // int_1^x (log t)^n dt = x sum_r n!(-1)^(n-r) L^r / r! + O(1)
            for (int r = 0; r <= xtot; ++r) {
                if (r + qtot > 2) continue;
                Q coeff = factorial_q(static_cast<unsigned>(xtot)) /
                          factorial_q(static_cast<unsigned>(r));
                if ((xtot - r) % 2 != 0) coeff = -coeff;
                if (qtot % 2 != 0) coeff = -coeff;  // the (-1)^Q factor
                total += SymPoly::sym(L, static_cast<unsigned>(r)) * beta_prod *
                         res_q[static_cast<unsigned>(qtot)] * coeff;
            }
        }
    }
    return total;
}

std::map<std::pair<int, int>, MatchEntry> delta2_matching() {
    auto c_table = c_coefficient_table();
    CoeffTable pipeline = assemble_d_coeffs();
    SymPoly rhs = lemma2_rhs_via_residue(AlphaParams::standard());

    std::map<std::pair<int, int>, MatchEntry> report;
    for (int jj = 0; jj <= 3; ++jj) {
        for (int kk = 0; jj + kk <= 3; ++kk) {
            MatchEntry entry;
            entry.c = c_table[{jj, kk}];
            // the J >= 1 entries come from the table pipeline; the J = 0
            // row is only available through the residue route
            entry.d = (jj >= 1)
                          ? pipeline.d[{jj, kk}]
                          : rhs.coeff_of(L, 0).coeff_of(static_cast<Symbol>(G0 + kk), 1);
            Q half_pow = Q(1);
            for (int i = 0; i < kk; ++i) half_pow /= 2;
            entry.diff = entry.c - entry.d.subst(InvDelta, SymPoly(Q(1, 2))) * half_pow;
            report[{jj, kk}] = entry;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin oracle for the numeric constants
// ---------------------------------------------------------------------------

namespace {

// f(t) = (sum_j c[j] (log t)^j) / t^p
struct LogOverPower {
    std::vector<long double> c;
    int p;

    LogOverPower derivative() const {
        LogOverPower d;
        d.p = p + 1;
        d.c.assign(c.size(), 0.0L);
        for (std::size_t j = 0; j < c.size(); ++j) {
            d.c[j] -= static_cast<long double>(p) * c[j];
            if (j > 0) d.c[j - 1] += static_cast<long double>(j) * c[j];
        }
        return d;
    }

    long double operator()(long double t) const {
        long double lt = std::log(t);
        long double poly = 0, power = 1;
        for (std::size_t j = 0; j < c.size(); ++j) {
            poly += c[j] * power;
            power *= lt;
        }
        return poly / std::pow(t, static_cast<long double>(p));
    }
};

// -f(N)/2 - sum_j B_{2j}/(2j)! f^(2j-1)(N), through B8
long double euler_maclaurin_correction(const LogOverPower& f, long double n) {
    static const long double b_over_fact[4] = {
        1.0L / 12, -1.0L / 720, 1.0L / 30240, -1.0L / 1209600};
    long double total = -f(n) / 2;
    LogOverPower d = f;
    for (int j = 0; j < 4; ++j) {
        d = d.derivative();
        total -= b_over_fact[j] * d(n);
        d = d.derivative();
    }
    return total;
}

// Stieltjes-type limit: sum_{k<=N} (log k)^m/k - (log N)^(m+1)/(m+1)
long double stieltjes_constant(unsigned m) {
    const long double n = 200000;
    LogOverPower f;
    f.p = 1;
    f.c.assign(m + 1, 0.0L);
    f.c[m] = 1;
    long double partial = 0;
    for (long k = 1; k <= static_cast<long>(n); ++k) partial += f(static_cast<long double>(k));
    long double integral = std::pow(std::log(n), static_cast<long double>(m + 1)) /
                           static_cast<long double>(m + 1);
    return partial - integral + euler_maclaurin_correction(f, n);
}

// zeta^(k)(2) = (-1)^k sum (log n)^k / n^2
long double zeta_derivative_at_2(unsigned k) {
    const long double n = 200000;
    LogOverPower f;
    f.p = 2;
    f.c.assign(k + 1, 0.0L);
    f.c[k] = 1;
    long double partial = 0;
    for (long i = 1; i <= static_cast<long>(n); ++i) partial += f(static_cast<long double>(i));
    // int_N^inf (log t)^k / t^2 dt = (1/N) sum_j (k!/j!) (log N)^j
    long double tail = 0, fact = 1;
    for (unsigned j = 0; j <= k; ++j) fact *= (j == 0) ? 1 : j;
    long double logn = std::log(n);
    for (unsigned j = 0; j <= k; ++j) {
        long double term = fact;
        for (unsigned i = 1; i <= j; ++i) term /= i;
        tail += term * std::pow(logn, static_cast<long double>(j));
    }
    tail /= n;
    long double total = partial + tail + euler_maclaurin_correction(f, n);
    return (k % 2 == 0) ? total : -total;
}

}  // namespace

NumericConstants numeric_constants() {
    NumericConstants nc{};
    long double g0 = stieltjes_constant(0);
    long double g1 = stieltjes_constant(1);
    long double g2 = stieltjes_constant(2);
    nc.a1 = g0;
    nc.a2 = -g1;
    nc.a3 = g2 / 2;

    long double z0 = zeta_derivative_at_2(0);
    long double z1 = zeta_derivative_at_2(1);
    long double z2 = zeta_derivative_at_2(2);
    long double z3 = zeta_derivative_at_2(3);
    nc.zeta2 = z0;
    nc.zeta2_d1 = z1;
    nc.zeta2_d2 = z2;
    nc.zeta2_d3 = z3;

    // derivatives of 1/z(s) from those of z(s)
    nc.G[0] = 1 / z0;
    nc.G[1] = -z1 / (z0 * z0);
    nc.G[2] = -z2 / (z0 * z0) + 2 * z1 * z1 / (z0 * z0 * z0);
    nc.G[3] = -z3 / (z0 * z0) + 6 * z1 * z2 / (z0 * z0 * z0) -
              6 * z1 * z1 * z1 / (z0 * z0 * z0 * z0);
    for (int k = 0; k <= 3; ++k)
        nc.F[static_cast<std::size_t>(k)] =
            std::pow(2.0L, k) * nc.G[static_cast<std::size_t>(k)];
    return nc;
}

std::array<long double, kNumSymbols> NumericConstants::symbol_values(
    long double log_x, long double inv_delta, std::array<long double, 3> alphas) const {
    std::array<long double, kNumSymbols> v{};
    v[A1] = a1;
    v[A2] = a2;
    v[A3] = a3;
    for (int k = 0; k <= 3; ++k) {
        v[F0 + k] = F[static_cast<std::size_t>(k)];
        v[G0 + k] = G[static_cast<std::size_t>(k)];
    }
    v[InvDelta] = inv_delta;
    v[L] = log_x;
    v[Alpha00] = alphas[0];
    v[Alpha01] = alphas[1];
    v[Alpha10] = alphas[2];
    return v;
}

LogMomentForm log_moment_integral(unsigned n, long double x) {
    if (n > 6) throw std::invalid_argument("log_moment_integral: n must be <= 6");
    LogMomentForm form;
    Q nfact = factorial_q(n);
    for (unsigned r = 0; r <= n; ++r) {
        Q coeff = nfact / factorial_q(n - r);
        if (r % 2 != 0) coeff = -coeff;
        form.x_poly += SymPoly::sym(L, n - r) * coeff;
    }
    form.boundary = (n % 2 == 0) ? -nfact : nfact;  // -(-1)^n n!

    long double lx = std::log(x);
    long double poly = 0;
    for (unsigned r = 0; r <= n; ++r) {
        long double term = 1;
        for (unsigned i = n - r + 1; i <= n; ++i) term *= i;  // n!/(n-r)!
        if (r % 2 != 0) term = -term;
        poly += term * std::pow(lx, static_cast<long double>(n - r));
    }
    form.value = x * poly + form.boundary.convert_to<long double>();
    return form;
}

PhiLogWeightResult phi_logweight_sum(unsigned Qpow, long double gamma,
                                     const DivisorTable& table) {
    if (Qpow > 2) throw std::invalid_argument("phi_logweight_sum: Q must be <= 2");
    if (gamma < 10) throw std::invalid_argument("phi_logweight_sum: gamma must be >= 10");
    auto qmax = static_cast<std::uint64_t>(gamma);
    if (qmax > table.limit())
        throw std::invalid_argument("phi_logweight_sum: gamma beyond sieve limit");

    long double lhs = 0;
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        long double lq = std::log(static_cast<long double>(q));
        long double w = 1;
        for (unsigned i = 0; i < Qpow; ++i) w *= -lq;
        lhs += table.phi(q) * w / (static_cast<long double>(q) * q);
    }

    // residue of A^(Q)(s) gamma^(s-1)/(s-1), with gamma^(s-1) expanded
    // through the formal L = log gamma
    const unsigned order = 8;
    LaurentSeries a_series = zeta_laurent(order) * mathcal_g_series(order);
    for (unsigned i = 0; i < Qpow; ++i) a_series = a_series.derivative();
    SymPoly residue = (a_series * exp_series(SymPoly::sym(L), order)).coeff(0);

    NumericConstants nc = numeric_constants();
    long double rhs = residue.eval(nc.symbol_values(std::log(gamma)));
    PhiLogWeightResult out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.gap = std::fabs(lhs - rhs);
    return out;
}

}  // namespace divl1
