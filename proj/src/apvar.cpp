#include "divl1/apvar.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "divl1/majorarc.hpp"

namespace divl1 {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double log_term(std::uint64_t r, double x) {
    return std::log(x) - 2.0 * std::log(static_cast<double>(r)) +
           2.0 * static_cast<double>(kEulerGamma) - 1.0;
}
}  // namespace

double main_term(std::uint64_t q, std::uint64_t a, double x) {
    if (q == 0 || a == 0 || a > q) throw std::invalid_argument("main_term: bad (q,a)");
    double total = 0;
    for (std::uint64_t r : divisors_of(q))
        total += static_cast<double>(ramanujan_sum(r, static_cast<std::int64_t>(a))) /
                 static_cast<double>(r) * log_term(r, x);
    return x / static_cast<double>(q) * total;
}

double main_term_exact(std::uint64_t q, std::uint64_t a, double x) {
    if (q == 0 || a == 0 || a > q) throw std::invalid_argument("main_term_exact: bad (q,a)");
    double total = 0;
    for (std::uint64_t r : divisors_of(q))
        total += static_cast<double>(ramanujan_sum(r, static_cast<std::int64_t>(a))) *
                 arc_main_value_exact(r, x);
    return total / static_cast<double>(q);
}

ProgressionDecomposition decompose(std::uint64_t q, std::uint64_t x,
                                   const DivisorTable& table) {
    if (x > table.limit()) throw std::invalid_argument("decompose: x beyond sieve limit");
    ProgressionDecomposition out;
    out.q = q;
    out.x = x;
    out.raw.assign(q, 0);
    for (std::uint64_t n = 1; n <= x; ++n) out.raw[(n - 1) % q] += table.d(n);
    // raw[(n-1) % q] buckets n = a mod q with a = 1..q (a = q holds n = 0 mod q)
    out.main.resize(q);
    out.err.resize(q);
    for (std::uint64_t a = 1; a <= q; ++a) {
        out.main[a - 1] = main_term(q, a, static_cast<double>(x));
        out.err[a - 1] = static_cast<double>(out.raw[a - 1]) - out.main[a - 1];
    }
    return out;
}

double variance(std::uint64_t q, std::uint64_t x, const DivisorTable& table) {
    ProgressionDecomposition dec = decompose(q, x, table);
    double total = 0;
    for (double e : dec.err) total += e * e;
    return total;
}

DftIdentityGaps dft_identity_gaps(std::uint64_t q, std::uint64_t x,
                                  const DivisorTable& table) {
    if (x > table.limit())
        throw std::invalid_argument("dft_identity_gaps: x beyond sieve limit");
    std::vector<std::uint64_t> raw(q, 0);
    for (std::uint64_t n = 1; n <= x; ++n) raw[(n - 1) % q] += table.d(n);

    // right side: q * sum_a |raw - exact main term|^2
    double rhs = 0;
    for (std::uint64_t a = 1; a <= q; ++a) {
        double e = static_cast<double>(raw[a - 1]) -
                   main_term_exact(q, a, static_cast<double>(x));
        rhs += e * e;
    }
    rhs *= static_cast<double>(q);

    // left side: S_x(b/q) from the residue buckets, minus the arc value
    std::vector<std::complex<double>> roots(q);
    for (std::uint64_t k = 0; k < q; ++k)
        roots[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(q));
    double lhs_exact = 0, lhs_f_form = 0;
    for (std::uint64_t b = 1; b <= q; ++b) {
        std::complex<double> s = 0;
        for (std::uint64_t a = 1; a <= q; ++a)
            s += static_cast<double>(raw[a - 1]) * roots[(a * b) % q];
        std::uint64_t qr = q / std::gcd(q, b);
        lhs_exact += std::norm(s - arc_main_value_exact(qr, static_cast<double>(x)));
        lhs_f_form += std::norm(s - arc_main_value(qr, static_cast<double>(x)));
    }

    DftIdentityGaps gaps;
    double scale = std::max({std::fabs(lhs_exact), std::fabs(rhs), 1.0});
    gaps.gap_exact = std::fabs(lhs_exact - rhs) / scale;
    gaps.gap_f_form = std::fabs(lhs_f_form - rhs) / scale;
    return gaps;
}

double dft_identity_gap(std::uint64_t q, std::uint64_t x, const DivisorTable& table) {
    return dft_identity_gaps(q, x, table).gap_exact;
}

double twisted_main_identity_gap(std::uint64_t q, std::uint64_t b, double x) {
    if (b == 0 || b > q) throw std::invalid_argument("twisted_main_identity_gap: bad b");
    std::complex<double> lhs = 0;
    for (std::uint64_t a = 1; a <= q; ++a)
        lhs += main_term_exact(q, a, x) *
               std::polar(1.0, kTwoPi * static_cast<double>((a * b) % q) /
                                   static_cast<double>(q));
    double rhs = arc_main_value_exact(q / std::gcd(q, b), x);
    return std::abs(lhs - std::complex<double>(rhs, 0.0)) /
           std::max({std::fabs(rhs), std::abs(lhs), 1.0});
}

double lauzhao_equivalence_gap(std::uint64_t q, std::uint64_t a, double x) {
    if (q == 0 || a == 0 || a > q)
        throw std::invalid_argument("lauzhao_equivalence_gap: bad (q,a)");
    double ours = main_term(q, a, x);

    double theirs = 0;
    for (std::uint64_t r : divisors_of(q)) {
        if (a % r != 0) continue;
        std::uint64_t m = q / r;
        theirs += static_cast<double>(euler_phi(m)) / static_cast<double>(m) *
                  log_term(r, x);
        double star = 0;
        for (std::uint64_t dd : divisors_of(m))
            star += static_cast<double>(moebius(dd)) *
                    std::log(static_cast<double>(dd)) / static_cast<double>(dd);
        theirs -= 2.0 * star;
    }
    theirs *= x / static_cast<double>(q);

    return std::fabs(ours - theirs) / std::max({std::fabs(ours), std::fabs(theirs), 1.0});
}

}  // namespace divl1
