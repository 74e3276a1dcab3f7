#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace divl1 {

using int128 = __int128;

// Sieved multiplicative-function tables up to a fixed limit.
//
// Immutable after construction; safe to share across threads.
// Memory is roughly 37 bytes per entry, so a desk machine handles
// limits up to a few times 10^8 for the divisor-count array alone
// (the documented ceiling; the experiments here stay below 10^7).
class DivisorTable {
public:
    explicit DivisorTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    // d(n), number of divisors
    std::uint32_t d(std::uint64_t n) const { return d_[check(n)]; }
    // Euler totient
    std::uint32_t phi(std::uint64_t n) const { return phi_[check(n)]; }
    // Moebius function, in {-1,0,1}
    int mu(std::uint64_t n) const { return mu_[check(n)]; }

    // sum_{n<=t} d(n)
    std::uint64_t prefix_d(std::uint64_t t) const { return pd_[check(t)]; }
    // sum_{n<=t} d(n)^2, exact (128-bit)
    int128 prefix_d2(std::uint64_t t) const { return pd2_[check(t)]; }

    // Strictly increasing list of divisors of n, built from the
    // smallest-prime-factor table. Length equals d(n).
    std::vector<std::uint64_t> divisors(std::uint64_t n) const;

private:
    std::uint64_t check(std::uint64_t n) const {
        if (n == 0 || n > limit_)
            throw std::invalid_argument("DivisorTable: index out of range");
        return n;
    }

    std::uint64_t limit_;
    std::vector<std::uint32_t> d_;
    std::vector<std::uint32_t> phi_;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint32_t> spf_;  // smallest prime factor
    std::vector<std::uint64_t> pd_;
    std::vector<int128> pd2_;
};

// Ramanujan sum c_q(a) = sum over reduced residues k mod q of e(ka/q),
// via the closed form mu(q/g) * phi(q) / phi(q/g) with g = (q,a).
// Exact integer arithmetic; no roots of unity are summed.
std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t a);

// Standalone small helpers (trial division; fine for q <= 10^7 or so).
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

}  // namespace divl1
