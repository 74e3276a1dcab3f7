#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace divl1 {

using Q = boost::multiprecision::cpp_rational;

// Inert formal symbols. a1,a2,... are the Laurent coefficients of zeta
// at s=1 (a1 is Euler-Mascheroni); Fk and Gk stand for the k-th
// derivatives at 1 of 1/zeta(2s) and 1/zeta(s+1); InvDelta is 1/Delta;
// L is log x. Alpha00/01/10 are the free parameters of the g_q model.
enum Symbol : unsigned {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    F0,
    F1,
    F2,
    F3,
    G0,
    G1,
    G2,
    G3,
    InvDelta,
    L,
    Alpha00,
    Alpha01,
    Alpha10,
    kNumSymbols
};

const char* symbol_name(Symbol s);

// Multivariate polynomial over the symbols above with exact rational
// coefficients. No relations are imposed; equality is structural after
// dropping zero coefficients.
class SymPoly {
public:
    using Mono = std::array<std::uint8_t, kNumSymbols>;

    SymPoly() = default;
    SymPoly(const Q& c);
    SymPoly(long c) : SymPoly(Q(c)) {}
    SymPoly(int c) : SymPoly(Q(c)) {}
    static SymPoly sym(Symbol s, unsigned power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Q constant_value() const;  // requires is_constant()

    SymPoly operator-() const;
    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
    SymPoly operator*(const Q& c) const;
    bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    SymPoly pow(unsigned e) const;

    // Replace a symbol by a polynomial (or a rational value).
    SymPoly subst(Symbol s, const SymPoly& value) const;

    // Terms whose exponent of s equals e, with s divided out.
    SymPoly coeff_of(Symbol s, unsigned e) const;
    unsigned degree_in(Symbol s) const;

    long double eval(const std::array<long double, kNumSymbols>& vals) const;

    std::string to_string() const;

    const std::map<Mono, Q>& terms() const { return terms_; }

private:
    void add_term(const Mono& m, const Q& c);
    std::map<Mono, Q> terms_;
};

inline SymPoly operator*(const Q& c, const SymPoly& p) { return p * c; }

// n! as an exact rational
Q factorial_q(unsigned n);

}  // namespace divl1
