#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace divl1 {

// Reduced fraction with small components. Endpoints of dissection arcs
// have denominator at most 2*gamma^2, so int64 is comfortable for any
// order this library targets (gamma <= ~10^6 is out of scope anyway).
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0, gcd(num,den)=1

    static Rat make(std::int64_t n, std::int64_t d);
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rat& o) const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// One arc of the dissection of order gamma, centred at a/q.
// Endpoints are mediants with the circular Farey neighbours; the arc is
// half-open [left, right) so that locate() is a true function.
struct FareyArc {
    std::int64_t a = 0;
    std::int64_t q = 1;
    Rat left;   // < a/q, may be > a/q - 1 only after unwinding mod 1
    Rat right;  // > a/q; for the 1/1 arc right > 1
    std::int64_t inv_left = 0;   // denominator of the left Farey neighbour
    std::int64_t inv_right = 0;  // denominator of the right Farey neighbour

    Rat centre() const { return Rat::make(a, q); }
    Rat length() const { return right - left; }
};

// Reduced fractions a/q, q <= gamma, (a,q)=1, 1 <= a <= q, ascending.
std::vector<std::pair<std::int64_t, std::int64_t>> farey_fractions(std::int64_t gamma);

// The dissection of the unit circle of order gamma: one arc per Farey
// fraction in (0,1], arcs share endpoints and tile [left of 1/gamma,
// that point + 1) exactly.
std::vector<FareyArc> dissection(std::int64_t gamma);

// Arc containing alpha (mod 1) together with beta = alpha - a/q.
// Boundary points belong to the arc owning the left endpoint.
std::pair<const FareyArc*, double> locate(double alpha, const std::vector<FareyArc>& arcs);

// CSV dump: q,a,left_num,left_den,right_num,right_den.
void dump_arcs_csv(const std::vector<FareyArc>& arcs, const std::string& path);

}  // namespace divl1
