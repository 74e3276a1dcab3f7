#include "divl1/expsum.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <fftw3.h>

namespace divl1 {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// pairwise (tree) reduction; keeps round-off growth logarithmic
template <typename T, typename F>
T pairwise_sum(std::size_t lo, std::size_t hi, const F& f) {
    if (hi - lo <= 8) {
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        return acc;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum<T>(lo, mid, f) + pairwise_sum<T>(mid, hi, f);
}
}  // namespace

std::complex<double> eval_S_direct(std::uint64_t x, double alpha, const DivisorTable& table) {
    if (x > table.limit()) throw std::invalid_argument("eval_S_direct: x beyond sieve limit");
    return pairwise_sum<std::complex<double>>(1, static_cast<std::size_t>(x) + 1, [&](std::size_t n) {
        double theta = kTwoPi * std::fmod(alpha * static_cast<double>(n), 1.0);
        return std::polar(static_cast<double>(table.d(n)), theta);
    });
}

SumSampling sample_S_fft(std::uint64_t x, std::size_t M, const DivisorTable& table) {
    if (x > table.limit()) throw std::invalid_argument("sample_S_fft: x beyond sieve limit");
    if (M < x) throw std::invalid_argument("sample_S_fft: M must be >= x");

    SumSampling out;
    out.x = x;
    out.grid = M;
    out.values.resize(M);

    fftw_complex* buf = fftw_alloc_complex(M);
    if (!buf) throw std::runtime_error("sample_S_fft: allocation failed");
    for (std::size_t j = 0; j < M; ++j) buf[j][0] = buf[j][1] = 0.0;
    for (std::uint64_t n = 1; n <= x; ++n) buf[n % M][0] += static_cast<double>(table.d(n));

    // BACKWARD sign convention gives out[j] = sum_n d(n) e^{+2 pi i nj/M}
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(M), buf, buf, FFTW_BACKWARD,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    for (std::size_t j = 0; j < M; ++j) out.values[j] = {buf[j][0], buf[j][1]};
    fftw_destroy_plan(plan);
    fftw_free(buf);

    out.weighted_sum = pairwise_sum<double>(1, static_cast<std::size_t>(x) + 1, [&](std::size_t n) {
        return static_cast<double>(n) * static_cast<double>(table.d(n));
    });
    return out;
}

L1Estimate l1_norm(const SumSampling& sampling) {
    const std::size_t m = sampling.grid;
    double total = pairwise_sum<double>(0, m, [&](std::size_t j) {
        return std::abs(sampling.values[j]);
    });
    L1Estimate est;
    est.value = total / static_cast<double>(m);
    // |S| inherits the Lipschitz constant 2 pi sum n d(n) of S; the
    // left-endpoint rule on M panels is then off by at most L/(2M)
    est.half_width = kTwoPi * sampling.weighted_sum / (2.0 * static_cast<double>(m));
    return est;
}

double l2_norm_sq(const SumSampling& sampling) {
    const std::size_t m = sampling.grid;
    double total = pairwise_sum<double>(0, m, [&](std::size_t j) {
        return std::norm(sampling.values[j]);
    });
    return total / static_cast<double>(m);
}

void dump_sampling_csv(const SumSampling& sampling, const std::string& path) {
    std::ofstream out(path);
    out << "alpha,abs_S\n";
    for (std::size_t j = 0; j < sampling.grid; ++j)
        out << static_cast<double>(j) / static_cast<double>(sampling.grid) << ','
            << std::abs(sampling.values[j]) << '\n';
}

}  // namespace divl1
