#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "divl1/arith.hpp"

namespace divl1 {

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};

// Least squares of log|y| against log x; requires >= 2 positive pairs.
FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct ReportRow {
    double x = 0;
    double observed = 0;
    double predicted = 0;
    double residual = 0;    // observed - predicted
    double normalized = 0;  // residual under the experiment's scaling
    std::vector<std::pair<std::string, double>> extra;
};

struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    std::vector<ReportRow> rows;
    std::optional<FitResult> fit;
    bool pass = true;

    nlohmann::json to_json() const;
    std::string to_csv() const;
    void write(const std::string& path, const std::string& format) const;
};

// Lemma 1: prefix_d2[x] against the full residue polynomial.
// normalized = residual / x^0.55; fit on |residual|.
ExperimentReport run_lemma1(const std::vector<std::uint64_t>& x_grid,
                            const DivisorTable& table);

// Lemma 2: sum_{q<=gamma} phi(q)/q^2 L0(q,x) at gamma = x^(1/Delta)
// against the d-coefficient polynomial. normalized = |residual| sqrt(gamma)/x.
ExperimentReport run_lemma2(const std::vector<std::uint64_t>& x_grid, double delta,
                            const DivisorTable& table);

// Lemma 3: max over the modulus sweep of variance/(q sqrt x).
ExperimentReport run_lemma3(const std::vector<std::uint64_t>& x_grid,
                            const std::vector<std::uint64_t>& moduli,
                            const DivisorTable& table);

// the default modulus sweep: primes <= q_max plus a few highly
// composite moduli
std::vector<std::uint64_t> default_moduli(std::uint64_t q_max);

// Theorem 1: L1 norm growth, Parseval calibration and the arcwise
// (S - S*) energy at dissection order sqrt(x).
ExperimentReport run_theorem(const std::vector<std::uint64_t>& x_grid,
                             std::size_t m_multiplier, const DivisorTable& table);

}  // namespace divl1
