#include "divl1/majorarc.hpp"

#include <cmath>
#include <stdexcept>

#include <gsl/gsl_sf_expint.h>

namespace divl1 {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double log_q2(std::uint64_t q) {
    return 2.0 * std::log(static_cast<double>(q));
}
}  // namespace

double f_weight(double t, std::uint64_t q) {
    return std::log(t) - log_q2(q) + 2.0 * static_cast<double>(kEulerGamma) - 1.0;
}

double g_weight(double t, std::uint64_t q) { return f_weight(t, q) + 1.0; }

double arc_main_value(std::uint64_t q, double x) {
    return x / static_cast<double>(q) * f_weight(x, q);
}

double osc_integral_at_zero(std::uint64_t q, double x) {
    // antiderivative of g_q is t f_q(t)
    return x * f_weight(x, q) - f_weight(1.0, q);
}

double arc_main_value_exact(std::uint64_t q, double x) {
    return osc_integral_at_zero(q, x) / static_cast<double>(q);
}

namespace {

// (int_1^x t^k g_q(t) dt) / x^k, kept scaled so the Taylor loop never
// overflows. The antiderivative of t^k g_q is
// t^{k+1}((k+1) log t - 1)/(k+1)^2 + C t^{k+1}/(k+1), C = 2 gamma_E - 2 log q.
double weighted_moment_scaled(unsigned k, std::uint64_t q, double x) {
    double c = 2.0 * static_cast<double>(kEulerGamma) - log_q2(q);
    double kp1 = static_cast<double>(k) + 1.0;
    double at_x = x * (kp1 * std::log(x) - 1.0) / (kp1 * kp1) + c * x / kp1;
    double at_1 = (-1.0 / (kp1 * kp1) + c / kp1) * std::pow(x, -static_cast<double>(k));
    return at_x - at_1;
}

// Taylor route for small |2 pi beta| x: sum_k (i c x)^k / k! * (m_k / x^k)
std::complex<double> osc_integral_taylor(double beta, std::uint64_t q, double x) {
    std::complex<double> z(0.0, kTwoPi * beta * x);
    double scale = x * (std::fabs(std::log(x)) + std::fabs(log_q2(q)) + 2.0);
    std::complex<double> total = 0.0, zfac = 1.0;
    for (unsigned k = 0; k < 64; ++k) {
        total += zfac * weighted_moment_scaled(k, q, x);
        zfac *= z / static_cast<double>(k + 1);
        if (std::abs(zfac) * scale < 1e-18 * std::max(1.0, std::abs(total))) break;
    }
    return total;
}

// int_1^x e^{i c t}/t dt for c > 0, via cosine/sine integrals
std::complex<double> eit_over_t(double c, double x) {
    double ci = gsl_sf_Ci(c * x) - gsl_sf_Ci(c);
    double si = gsl_sf_Si(c * x) - gsl_sf_Si(c);
    return {ci, si};
}

}  // namespace

std::complex<double> osc_integral(double beta, std::uint64_t q, double x) {
    if (!std::isfinite(beta)) throw std::invalid_argument("osc_integral: beta not finite");
    if (x < 1.0) throw std::invalid_argument("osc_integral: x must be >= 1");
    if (beta == 0.0) return {osc_integral_at_zero(q, x), 0.0};
    if (beta < 0.0) return std::conj(osc_integral(-beta, q, x));

    double c = kTwoPi * beta;
    if (c * x <= 6.0) return osc_integral_taylor(beta, q, x);

    // by parts: [e^{ict} g/(ic)] - (1/(ic)) int e^{ict}/t dt
    std::complex<double> ic(0.0, c);
    std::complex<double> boundary =
        (std::polar(1.0, c * x) * g_weight(x, q) - std::polar(1.0, c) * g_weight(1.0, q)) /
        ic;
    return boundary - eit_over_t(c, x) / ic;
}

std::complex<double> arc_approximant(double alpha, const FareyArc& arc, double x) {
    double centre = static_cast<double>(arc.a) / static_cast<double>(arc.q);
    double beta = alpha - centre;
    beta -= std::round(beta);  // alpha mod 1 relative to the centre
    double half_left = centre - arc.left.to_double();
    double half_right = arc.right.to_double() - centre;
    if (beta < -half_left - 1e-12 || beta > half_right + 1e-12)
        throw std::invalid_argument("arc_approximant: alpha outside arc");
    return osc_integral(beta, static_cast<std::uint64_t>(arc.q), x) /
           static_cast<double>(arc.q);
}

double autocorrelation_at_zero(std::uint64_t q, double x) {
    auto anti = [&](double t) {
        double u = std::log(t) - log_q2(q) + 2.0 * static_cast<double>(kEulerGamma);
        return t * (u * u - 2.0 * u + 2.0);
    };
    return anti(x) - anti(1.0);
}

PlancherelResult plancherel_check(std::uint64_t q, double x, double B) {
    if (B <= 0) throw std::invalid_argument("plancherel_check: B must be positive");
    // |I_q|^2 is even in beta; composite Simpson on [0,B] with a step
    // resolving the ~1/x oscillation scale
    std::size_t n = static_cast<std::size_t>(std::min(4.0e6, std::max(4000.0, 24.0 * B * x)));
    if (n % 2 == 1) ++n;
    double h = B / static_cast<double>(n);
    auto f = [&](double beta) { return std::norm(osc_integral(beta, q, x)); };
    double acc = f(0.0) + f(B);
    for (std::size_t i = 1; i < n; ++i) acc += f(h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
    double integral = 2.0 * acc * h / 3.0;  // doubled for [-B, 0]

    PlancherelResult out;
    out.truncated_integral = integral;
    out.l0 = autocorrelation_at_zero(q, x);
    out.relative_gap = std::fabs(integral - out.l0) / std::max(out.l0, 1e-300);
    return out;
}

}  // namespace divl1
