#include "divl1/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "divl1/apvar.hpp"
#include "divl1/expsum.hpp"
#include "divl1/farey.hpp"
#include "divl1/majorarc.hpp"
#include "divl1/symbolic.hpp"

namespace divl1 {

FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog: need at least two points");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0 || y[i] <= 0) continue;
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    const auto n = static_cast<double>(lx.size());
    if (n < 2) throw std::invalid_argument("fit_loglog: need two positive points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
        syy += ly[i] * ly[i];
    }
    FitResult fit;
    double den = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, mean_y = sy / n, ss_tot = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double pred = fit.intercept + fit.slope * lx[i];
        ss_res += (ly[i] - pred) * (ly[i] - pred);
        ss_tot += (ly[i] - mean_y) * (ly[i] - mean_y);
    }
    fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r{{"x", row.x},
                         {"observed", row.observed},
                         {"predicted", row.predicted},
                         {"residual", row.residual},
                         {"normalized", row.normalized}};
        for (const auto& [k, v] : row.extra) r[k] = v;
        j["rows"].push_back(r);
    }
    if (fit)
        j["fit"] = {{"slope", fit->slope}, {"intercept", fit->intercept}, {"r2", fit->r2}};
    else
        j["fit"] = nullptr;
    j["pass"] = pass;
    return j;
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    out.precision(15);
    out << "x,observed,predicted,residual,normalized";
    if (!rows.empty())
        for (const auto& [k, v] : rows.front().extra) out << ',' << k;
    out << '\n';
    for (const auto& row : rows) {
        out << row.x << ',' << row.observed << ',' << row.predicted << ','
            << row.residual << ',' << row.normalized;
        for (const auto& [k, v] : row.extra) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

void ExperimentReport::write(const std::string& path, const std::string& format) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (format == "json")
        out << to_json().dump(2) << '\n';
    else if (format == "csv")
        out << to_csv();
    else
        throw std::invalid_argument("unknown format " + format);
}

namespace {

void maybe_fit(ExperimentReport& report, const std::vector<double>& x,
               const std::vector<double>& y) {
    if (x.size() >= 4) report.fit = fit_loglog(x, y);
}

}  // namespace

ExperimentReport run_lemma1(const std::vector<std::uint64_t>& x_grid,
                            const DivisorTable& table) {
    ExperimentReport report;
    report.name = "lemma1";
    SymPoly residue = residue_divisor_square();
    NumericConstants nc = numeric_constants();

    std::vector<double> xs, abs_res;
    for (std::uint64_t x : x_grid) {
        if (x > table.limit()) throw std::invalid_argument("run_lemma1: x beyond sieve");
        double observed = static_cast<double>(table.prefix_d2(x));
        long double lx = std::log(static_cast<long double>(x));
        double predicted =
            static_cast<double>(x) *
            static_cast<double>(residue.eval(nc.symbol_values(lx)));
        ReportRow row;
        row.x = static_cast<double>(x);
        row.observed = observed;
        row.predicted = predicted;
        row.residual = observed - predicted;
        row.normalized = row.residual / std::pow(row.x, 0.55);
        report.rows.push_back(row);
        xs.push_back(row.x);
        abs_res.push_back(std::fabs(row.residual));
    }
    maybe_fit(report, xs, abs_res);
    return report;
}

ExperimentReport run_lemma2(const std::vector<std::uint64_t>& x_grid, double delta,
                            const DivisorTable& table) {
    if (delta < 1) throw std::invalid_argument("run_lemma2: Delta must be >= 1");
    ExperimentReport report;
    report.name = "lemma2";
    report.params.emplace_back("delta", delta);
    SymPoly rhs_poly = lemma2_rhs_via_residue(AlphaParams::standard());
    NumericConstants nc = numeric_constants();

    std::vector<double> xs, norm_res;
    for (std::uint64_t x : x_grid) {
        auto gamma = static_cast<std::uint64_t>(
            std::pow(static_cast<double>(x), 1.0 / delta));
        if (gamma < 1) gamma = 1;
        if (gamma > table.limit()) throw std::invalid_argument("run_lemma2: gamma beyond sieve");
        double observed = 0;
        for (std::uint64_t q = 1; q <= gamma; ++q)
            observed += static_cast<double>(table.phi(q)) /
                        (static_cast<double>(q) * static_cast<double>(q)) *
                        autocorrelation_at_zero(q, static_cast<double>(x));
        long double lx = std::log(static_cast<long double>(x));
        double predicted =
            static_cast<double>(x) *
            static_cast<double>(rhs_poly.eval(nc.symbol_values(lx, 1.0L / delta)));
        ReportRow row;
        row.x = static_cast<double>(x);
        row.observed = observed;
        row.predicted = predicted;
        row.residual = observed - predicted;
        row.normalized = std::fabs(row.residual) *
                         std::sqrt(static_cast<double>(gamma)) / static_cast<double>(x);
        row.extra.emplace_back("gamma", static_cast<double>(gamma));
        report.rows.push_back(row);
        xs.push_back(row.x);
        norm_res.push_back(row.normalized);
    }
    maybe_fit(report, xs, norm_res);
    return report;
}

std::vector<std::uint64_t> default_moduli(std::uint64_t q_max) {
    std::vector<std::uint64_t> moduli;
    for (std::uint64_t q = 2; q <= q_max; ++q) {
        bool prime = q > 1;
        for (std::uint64_t p = 2; p * p <= q; ++p)
            if (q % p == 0) {
                prime = false;
                break;
            }
        if (prime) moduli.push_back(q);
    }
    for (std::uint64_t q : {12ull, 24ull, 36ull, 60ull, 120ull}) moduli.push_back(q);
    return moduli;
}

ExperimentReport run_lemma3(const std::vector<std::uint64_t>& x_grid,
                            const std::vector<std::uint64_t>& moduli,
                            const DivisorTable& table) {
    ExperimentReport report;
    report.name = "lemma3";
    std::vector<double> xs, maxima;
    for (std::uint64_t x : x_grid) {
        double sqrt_x = std::sqrt(static_cast<double>(x));
        double worst = 0;
        std::uint64_t worst_q = 0;
        for (std::uint64_t q : moduli) {
            if (static_cast<double>(q) > sqrt_x) continue;
            double ratio = variance(q, x, table) / (static_cast<double>(q) * sqrt_x);
            if (ratio > worst) {
                worst = ratio;
                worst_q = q;
            }
        }
        ReportRow row;
        row.x = static_cast<double>(x);
        row.observed = worst;
        row.predicted = 0;
        row.residual = worst;
        row.normalized = worst;
        row.extra.emplace_back("worst_q", static_cast<double>(worst_q));
        report.rows.push_back(row);
        xs.push_back(row.x);
        maxima.push_back(worst);
    }
    maybe_fit(report, xs, maxima);
    return report;
}

ExperimentReport run_theorem(const std::vector<std::uint64_t>& x_grid,
                             std::size_t m_multiplier, const DivisorTable& table) {
    ExperimentReport report;
    report.name = "theorem";
    report.params.emplace_back("m_multiplier", static_cast<double>(m_multiplier));
    std::vector<double> xs, l1s;
    for (std::uint64_t x : x_grid) {
        SumSampling sampling = sample_S_fft(x, m_multiplier * x, table);
        L1Estimate l1 = l1_norm(sampling);
        double l2 = l2_norm_sq(sampling);
        double d2 = static_cast<double>(table.prefix_d2(x));
        double sqrt_x = std::sqrt(static_cast<double>(x));

        // arcwise energy of S - S* at dissection order sqrt(x)
        auto gamma = static_cast<std::int64_t>(sqrt_x);
        auto arcs = dissection(gamma);
        const std::size_t m = sampling.grid;
        double delta_energy = 0;
        double base = arcs.front().left.to_double();
        std::vector<double> lefts(arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) lefts[i] = arcs[i].left.to_double();
        for (std::size_t j = 0; j < m; ++j) {
            double alpha = static_cast<double>(j) / static_cast<double>(m);
            double u = alpha - std::floor(alpha - base);  // unwound into [base, base+1)
            auto it = std::upper_bound(lefts.begin(), lefts.end(), u);
            std::size_t arc_idx = static_cast<std::size_t>(it - lefts.begin()) - 1;
            const FareyArc& arc = arcs[arc_idx];
            double beta = u - static_cast<double>(arc.a) / static_cast<double>(arc.q);
            std::complex<double> star =
                osc_integral(beta, static_cast<std::uint64_t>(arc.q),
                             static_cast<double>(x)) /
                static_cast<double>(arc.q);
            delta_energy += std::norm(sampling.values[j] - star);
        }
        delta_energy /= static_cast<double>(m);

        ReportRow row;
        row.x = static_cast<double>(x);
        row.observed = l1.value;
        row.predicted = sqrt_x;
        row.residual = l1.value - sqrt_x;
        row.normalized = l1.value / sqrt_x;
        row.extra.emplace_back("l1_half_width", l1.half_width);
        row.extra.emplace_back("l2_relative_error", std::fabs(l2 - d2) / d2);
        row.extra.emplace_back("delta_energy_over_x", delta_energy / static_cast<double>(x));
        report.rows.push_back(row);
        xs.push_back(row.x);
        l1s.push_back(l1.value);
    }
    maybe_fit(report, xs, l1s);
    return report;
}

}  // namespace divl1
