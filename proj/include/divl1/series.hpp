#pragma once

#include <vector>

#include "divl1/sympoly.hpp"

namespace divl1 {

// Truncated Laurent series in u = (s-1) with SymPoly coefficients.
// coeffs[k] is the coefficient of u^(lead+k); the series is known up to
// and excluding u^(lead + coeffs.size()).
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(int lead, std::vector<SymPoly> coeffs)
        : lead_(lead), coeffs_(std::move(coeffs)) {}

    static LaurentSeries constant(const SymPoly& c, unsigned order);

    int lead() const { return lead_; }
    unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }

    // Coefficient of u^e (zero if outside the stored window; throws if
    // e is beyond the truncation so silent truncation never leaks).
    SymPoly coeff(int e) const;

    SymPoly residue() const { return coeff(-1); }

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const SymPoly& c) const;

    // d/ds, term by term.
    LaurentSeries derivative() const;

    // Multiplicative inverse; requires the leading coefficient to be a
    // nonzero rational constant.
    LaurentSeries inverse() const;

    // Drop leading structurally-zero coefficients.
    LaurentSeries normalized() const;

    LaurentSeries truncated(unsigned order) const;

private:
    int lead_ = 0;
    std::vector<SymPoly> coeffs_;
};

}  // namespace divl1
