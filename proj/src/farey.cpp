#include "divl1/farey.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

namespace divl1 {

Rat Rat::make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rat r;
    r.num = n;
    r.den = d;
    return r;
}

Rat Rat::operator+(const Rat& o) const {
    return make(num * o.den + o.num * den, den * o.den);
}

Rat Rat::operator-(const Rat& o) const {
    return make(num * o.den - o.num * den, den * o.den);
}

bool Rat::operator<(const Rat& o) const { return num * o.den < o.num * den; }

std::vector<std::pair<std::int64_t, std::int64_t>> farey_fractions(std::int64_t gamma) {
    if (gamma < 1) throw std::invalid_argument("farey_fractions: gamma must be >= 1");
    // Standard next-term recurrence on F_gamma starting from 0/1, 1/gamma.
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t a = 0, b = 1, c = 1, d = gamma;
    for (;;) {
        out.emplace_back(c, d);
        if (c == 1 && d == 1) break;
        std::int64_t k = (gamma + b) / d;
        std::int64_t c2 = k * c - a, d2 = k * d - b;
        a = c;
        b = d;
        c = c2;
        d = d2;
    }
    return out;
}

std::vector<FareyArc> dissection(std::int64_t gamma) {
    auto fr = farey_fractions(gamma);
    const std::size_t n = fr.size();
    std::vector<FareyArc> arcs(n);
    auto mediant = [](std::int64_t a1, std::int64_t q1, std::int64_t a2, std::int64_t q2) {
        return Rat::make(a1 + a2, q1 + q2);
    };
    for (std::size_t i = 0; i < n; ++i) {
        // circular neighbours: before 1/gamma sits 0/1, after 1/1 sits 1+1/gamma
        std::int64_t pa = (i == 0) ? 0 : fr[i - 1].first;
        std::int64_t pq = (i == 0) ? 1 : fr[i - 1].second;
        std::int64_t na = (i + 1 == n) ? gamma + 1 : fr[i + 1].first;
        std::int64_t nq = (i + 1 == n) ? gamma : fr[i + 1].second;
        FareyArc& arc = arcs[i];
        arc.a = fr[i].first;
        arc.q = fr[i].second;
        arc.left = mediant(pa, pq, arc.a, arc.q);
        arc.right = mediant(arc.a, arc.q, na, nq);
        arc.inv_left = pq;
        arc.inv_right = nq;
    }
    return arcs;
}

std::pair<const FareyArc*, double> locate(double alpha, const std::vector<FareyArc>& arcs) {
    if (arcs.empty() || !std::isfinite(alpha))
        throw std::invalid_argument("locate: bad input");
    double base = arcs.front().left.to_double();
    double u = alpha - std::floor(alpha - base);  // unwound into [base, base+1)
    // binary search on left endpoints
    std::size_t lo = 0, hi = arcs.size();
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (arcs[mid].left.to_double() <= u)
            lo = mid;
        else
            hi = mid;
    }
    const FareyArc& arc = arcs[lo];
    double beta = u - static_cast<double>(arc.a) / static_cast<double>(arc.q);
    return {&arc, beta};
}

void dump_arcs_csv(const std::vector<FareyArc>& arcs, const std::string& path) {
    std::ofstream out(path);
    out << "q,a,left_num,left_den,right_num,right_den\n";
    for (const auto& arc : arcs)
        out << arc.q << ',' << arc.a << ',' << arc.left.num << ',' << arc.left.den << ','
            << arc.right.num << ',' << arc.right.den << '\n';
}

}  // namespace divl1
