// Acceptance suite: ten pinned criteria, one PASS/FAIL line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "divl1/apvar.hpp"
#include "divl1/arith.hpp"
#include "divl1/expsum.hpp"
#include "divl1/experiments.hpp"
#include "divl1/farey.hpp"
#include "divl1/majorarc.hpp"
#include "divl1/symbolic.hpp"

using namespace divl1;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail) {
    std::printf("[%s] %2d %-28s %s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SymPoly a_sym(int k) { return SymPoly::sym(static_cast<Symbol>(A1 + k - 1)); }
SymPoly rat(long n, long d = 1) { return SymPoly(Q(n) / Q(d)); }
SymPoly inv_delta(unsigned p = 1) { return SymPoly::sym(InvDelta, p); }

// ---------------------------------------------------------------------------

void criterion1_symbolic_diagonal() {
    auto t0 = Clock::now();
    auto c = c_coefficient_table();
    SymPoly a1 = a_sym(1), a2 = a_sym(2);
    bool ok = c[{3, 0}] == rat(1, 6) && c[{2, 1}] == rat(1, 2) &&
              c[{2, 0}] == rat(2) * a1 - rat(1, 2) &&
              c[{1, 2}] == rat(1, 2) && c[{1, 1}] == rat(4) * a1 - rat(1) &&
              c[{1, 0}] == rat(4) * a2 + rat(6) * a1 * a1 - rat(4) * a1 + rat(1);
    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "six c_{J,K} exact, %.3fs", dt);
    report(1, "symbolic diagonal sum", ok, buf);
}

void criterion2_symbolic_arcweights() {
    auto t0 = Clock::now();
    SymPoly a1 = a_sym(1), a2 = a_sym(2);
    bool ok = true;

    // mu table, entry for entry
    ok = ok && mu_coefficient(2, 1, 1, 2) == rat(1);
    ok = ok && mu_coefficient(2, 0, 1, 2) == a1;
    ok = ok && mu_coefficient(1, 2, 2, 1) == rat(-1, 2);
    ok = ok && mu_coefficient(1, 1, 1, 1) == rat(1);
    ok = ok && mu_coefficient(1, 1, 1, 2) == rat(-2);
    ok = ok && mu_coefficient(1, 1, 2, 1) == -a1;
    ok = ok && mu_coefficient(1, 0, 1, 1) == a1;
    ok = ok && mu_coefficient(1, 0, 1, 2) == rat(-2) * a1;
    ok = ok && mu_coefficient(1, 0, 2, 1) == -a2;

    // gamma* table
    ok = ok && gamma_star_coefficient(3, 3, 0) == rat(1, 3) * inv_delta(3);
    ok = ok && gamma_star_coefficient(3, 2, 1) == rat(1, 2) * inv_delta(2);
    ok = ok && gamma_star_coefficient(3, 1, 2) == inv_delta();
    ok = ok && gamma_star_coefficient(2, 1, 1) == inv_delta();
    ok = ok && gamma_star_coefficient(2, 1, 2) == rat(-2) * inv_delta();
    ok = ok && gamma_star_coefficient(2, 2, 0) == rat(1, 2) * inv_delta(2);
    ok = ok && gamma_star_coefficient(2, 2, 1) == rat(-1, 2) * inv_delta(2);
    ok = ok && gamma_star_coefficient(1, 1, 0) == inv_delta();
    ok = ok && gamma_star_coefficient(1, 1, 1) == -inv_delta();
    ok = ok && gamma_star_coefficient(1, 1, 2) == rat(2) * inv_delta();

    // quadratic table at the concrete alphas: a00 = 2a1-1, a01 = 1, a10 = -2
    AlphaParams alpha = AlphaParams::standard();
    ok = ok && s_quadratic(3, 0, alpha) == rat(4);
    ok = ok && s_quadratic(2, 1, alpha) == rat(-4);
    ok = ok && s_quadratic(2, 0, alpha) == rat(-8) * a1;
    ok = ok && s_quadratic(1, 2, alpha) == rat(1);
    ok = ok && s_quadratic(1, 1, alpha) == rat(4) * a1;
    ok = ok && s_quadratic(1, 0, alpha) == rat(4) * a1 * a1;

    // assembled t and d values
    CoeffTable table = assemble_d_coeffs();
    ok = ok && table.t_jk[{3, 0}].is_zero();
    ok = ok && table.t_j[3] ==
                   rat(4, 3) * inv_delta(3) - rat(2) * inv_delta(2) + inv_delta();
    ok = ok && table.t_jk[{2, 1}] == rat(1);
    ok = ok && table.t_jk[{2, 0}] == a1;
    ok = ok && table.t_j[2] == rat(2) * (rat(2) * a1 - rat(1)) *
                                   (inv_delta() - inv_delta(2));
    ok = ok && table.t_jk[{1, 2}] == rat(2);
    ok = ok && table.t_jk[{1, 1}] == rat(8) * a1 - rat(2);
    ok = ok && table.t_jk[{1, 0}] ==
                   rat(4) * a2 + rat(4) * a1 * a1 - rat(2) * a1;
    ok = ok && table.t_j[1] ==
                   (rat(4) * a1 * a1 - rat(4) * a1 + rat(2)) * inv_delta();

    SymPoly d30 = table.t_jk[{3, 0}] + table.t_j[3];
    SymPoly d20 = table.t_jk[{2, 0}] + table.t_j[2];
    SymPoly d10 = table.t_jk[{1, 0}] + table.t_j[1];
    ok = ok && table.d[{3, 0}] == d30 && table.d[{2, 0}] == d20 &&
         table.d[{1, 0}] == d10 && table.d[{2, 1}] == rat(1) &&
         table.d[{1, 2}] == rat(2) &&
         table.d[{1, 1}] == rat(8) * a1 - rat(2);

    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "mu/gamma*/S/t tables and six d_{J,K} exact, %.3fs", dt);
    report(2, "symbolic arc weights", ok, buf);
}

void criterion3_delta2_cancellation() {
    auto t0 = Clock::now();
    auto match = delta2_matching();
    bool ok = true;
    for (const auto& [jk, entry] : match)
        if (jk.first >= 1 && !entry.diff.is_zero()) ok = false;
    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "c_{J,K} = d_{J,K}/2^K for all J >= 1, %.3fs", dt);
    report(3, "Delta = 2 cancellation", ok, buf);
}

void criterion4_numeric_diagonal(const DivisorTable& table) {
    ExperimentReport rep =
        run_lemma1({10'000, 100'000, 1'000'000, 10'000'000}, table);
    bool ok = rep.fit.has_value();
    double slope = ok ? rep.fit->slope : 99;
    ok = ok && slope <= 0.60;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "residual exponent %.3f (<= 0.60) over 1e4..1e7", slope);
    report(4, "numeric diagonal sum", ok, buf);
}

void criterion5_numeric_arcweights(const DivisorTable& table) {
    ExperimentReport rep =
        run_lemma2({10'000, 100'000, 1'000'000, 10'000'000}, 2.0, table);
    std::vector<double> xs, norm;
    for (const auto& row : rep.rows) {
        xs.push_back(row.x);
        norm.push_back(row.normalized);
    }
    FitResult fit = fit_loglog(xs, norm);
    bool ok = fit.slope <= 0.02;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "normalized residual trend %.3f (<= 0.02), last %.3g",
                  fit.slope, norm.back());
    report(5, "numeric arc-weight sum", ok, buf);
}

void criterion6_progression_variance(const DivisorTable& table) {
    ExperimentReport rep = run_lemma3({10'000, 100'000, 1'000'000},
                                      default_moduli(31), table);
    std::vector<double> xs, ratios;
    for (const auto& row : rep.rows) {
        xs.push_back(row.x);
        ratios.push_back(row.observed);
    }
    FitResult fit = fit_loglog(xs, ratios);
    bool ok = fit.slope <= 0.02;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "max variance/(q sqrt x) trend %.3f (<= 0.02), last %.3g",
                  fit.slope, ratios.back());
    report(6, "progression variance", ok, buf);
}

void criterion7_exact_identities(const DivisorTable& table) {
    double worst_dft = 0, worst_lz = 0;
    for (std::uint64_t q = 1; q <= 100; ++q)
        for (std::uint64_t x : {1'000ULL, 10'000ULL, 100'000ULL})
            worst_dft = std::max(worst_dft, dft_identity_gap(q, x, table));
    for (std::uint64_t q = 1; q <= 200; ++q)
        for (std::uint64_t a = 1; a <= q; ++a)
            for (double x : {100.0, 1'000.0, 10'000.0})
                worst_lz =
                    std::max(worst_lz, lauzhao_equivalence_gap(q, a, x));
    bool ok = worst_dft <= 1e-9 && worst_lz <= 1e-9;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "max dft gap %.2e, max main-term gap %.2e (<= 1e-9)",
                  worst_dft, worst_lz);
    report(7, "exact identities", ok, buf);
}

void criterion8_parseval(const DivisorTable& table) {
    double worst = 0;
    for (unsigned e = 10; e <= 18; ++e) {
        std::uint64_t x = 1ULL << e;
        SumSampling s = sample_S_fft(x, 2 * static_cast<std::size_t>(x), table);
        double exact = static_cast<double>(table.prefix_d2(x));
        worst = std::max(worst, std::fabs(l2_norm_sq(s) - exact) / exact);
    }
    bool ok = worst <= 1e-9;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "max |L2 - sum d^2| / sum d^2 = %.2e over 2^10..2^18", worst);
    report(8, "Parseval calibration", ok, buf);
}

void criterion9_l1_growth(const DivisorTable& table) {
    std::vector<std::uint64_t> grid;
    for (unsigned e = 10; e <= 18; ++e) grid.push_back(1ULL << e);
    ExperimentReport rep = run_theorem(grid, 2, table);

    double ratio_min = 1e300, ratio_max = 0;
    std::vector<double> xs, denergy;
    for (const auto& row : rep.rows) {
        ratio_min = std::min(ratio_min, row.normalized);
        ratio_max = std::max(ratio_max, row.normalized);
        xs.push_back(row.x);
        for (const auto& [k, v] : row.extra)
            if (k == "delta_energy_over_x") denergy.push_back(v);
    }
    FitResult drift = fit_loglog(xs, denergy);
    bool ok = rep.fit.has_value();
    double slope = ok ? rep.fit->slope : 99;
    ok = ok && std::fabs(slope - 0.50) <= 0.02 &&
         ratio_max / ratio_min <= 1.5 && drift.slope <= 0.02;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "L1 exponent %.3f (0.50 +- 0.02), ratio spread %.3f (<= 1.5), "
                  "energy drift %.3f (<= 0.02)",
                  slope, ratio_max / ratio_min, drift.slope);
    report(9, "L1 norm growth", ok, buf);
}

void criterion10_farey_partition() {
    auto t0 = Clock::now();
    bool ok = true;
    for (std::int64_t gamma = 1; gamma <= 500 && ok; ++gamma) {
        auto arcs = dissection(gamma);
        Rat total = Rat::make(0, 1);
        for (std::size_t i = 0; i < arcs.size() && ok; ++i) {
            const FareyArc& arc = arcs[i];
            if (i > 0 && !(arc.left == arcs[i - 1].right)) ok = false;
            Rat len = arc.length();
            if (len < Rat::make(1, arc.q * gamma)) ok = false;
            if (!(len < Rat::make(2, arc.q * gamma))) ok = false;
            total = total + len;
        }
        if (!(total == Rat::make(1, 1))) ok = false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "exact unit total and per-arc bounds, gamma <= 500, %.2fs",
                  seconds_since(t0));
    report(10, "Farey partition", ok, buf);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1_symbolic_diagonal();
    criterion2_symbolic_arcweights();
    criterion3_delta2_cancellation();
    criterion10_farey_partition();

    auto big = std::make_unique<DivisorTable>(10'000'000);
    criterion4_numeric_diagonal(*big);
    criterion5_numeric_arcweights(*big);
    big.reset();

    DivisorTable table(1'000'000);
    criterion6_progression_variance(table);
    criterion7_exact_identities(table);
    criterion8_parseval(table);
    criterion9_l1_growth(table);

    std::printf("%d of 10 criteria failed\n", g_failures);
    return g_failures;
}
