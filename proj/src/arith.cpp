#include "divl1/arith.hpp"

#include <algorithm>
#include <new>
#include <numeric>
#include <string>

namespace divl1 {

DivisorTable::DivisorTable(std::uint64_t limit) : limit_(limit) {
    if (limit == 0) throw std::invalid_argument("DivisorTable: limit must be >= 1");
    try {
        d_.assign(limit + 1, 0);
        phi_.assign(limit + 1, 0);
        mu_.assign(limit + 1, 0);
        spf_.assign(limit + 1, 0);
        pd_.assign(limit + 1, 0);
        pd2_.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("DivisorTable: allocation failed for limit " +
                                 std::to_string(limit));
    }

    // Linear sieve. cnt[n] = exponent of spf(n) in n, used for the
    // divisor-count recurrence d(np) = d(n)/(e+1)*(e+2) when p | n.
    std::vector<std::uint8_t> cnt(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    d_[1] = 1;
    phi_[1] = 1;
    mu_[1] = 1;
    spf_[1] = 1;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (spf_[n] == 0) {
            spf_[n] = static_cast<std::uint32_t>(n);
            primes.push_back(static_cast<std::uint32_t>(n));
            d_[n] = 2;
            phi_[n] = static_cast<std::uint32_t>(n - 1);
            mu_[n] = -1;
            cnt[n] = 1;
        }
        for (std::uint32_t p : primes) {
            if (p > spf_[n] || p * 1ull * n > limit) break;
            std::uint64_t m = p * 1ull * n;
            spf_[m] = p;
            if (p == spf_[n]) {
                cnt[m] = static_cast<std::uint8_t>(cnt[n] + 1);
                d_[m] = d_[n] / (cnt[n] + 1u) * (cnt[n] + 2u);
                phi_[m] = phi_[n] * p;
                mu_[m] = 0;
            } else {
                cnt[m] = 1;
                d_[m] = d_[n] * 2;
                phi_[m] = phi_[n] * (p - 1);
                mu_[m] = static_cast<std::int8_t>(-mu_[n]);
            }
        }
    }

    pd_[0] = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        pd_[n] = pd_[n - 1] + d_[n];
        pd2_[n] = pd2_[n - 1] + static_cast<int128>(d_[n]) * d_[n];
    }
}

std::vector<std::uint64_t> DivisorTable::divisors(std::uint64_t n) const {
    check(n);
    std::vector<std::uint64_t> divs{1};
    std::uint64_t m = n;
    while (m > 1) {
        std::uint64_t p = spf_[m];
        std::size_t old = divs.size();
        std::uint64_t pk = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
            for (std::size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i != n / i) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t a) {
    if (q == 0) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    std::uint64_t am = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(q)) +
                                                   static_cast<std::int64_t>(q)) %
                                                  static_cast<std::int64_t>(q));
    std::uint64_t g = std::gcd(q, am == 0 ? q : am);
    std::uint64_t h = q / g;  // q / (q,a)
    int m = moebius(h);
    if (m == 0) return 0;
    return static_cast<std::int64_t>(m) *
           static_cast<std::int64_t>(euler_phi(q) / euler_phi(h));
}

}  // namespace divl1
