#include "divl1/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace divl1 {

LaurentSeries LaurentSeries::constant(const SymPoly& c, unsigned order) {
    std::vector<SymPoly> coeffs(order);
    if (order == 0) throw std::invalid_argument("LaurentSeries: order must be positive");
    coeffs[0] = c;
    return LaurentSeries(0, std::move(coeffs));
}

SymPoly LaurentSeries::coeff(int e) const {
    if (e < lead_) return SymPoly();
    unsigned idx = static_cast<unsigned>(e - lead_);
    if (idx >= coeffs_.size())
        throw std::out_of_range("LaurentSeries: coefficient beyond truncation");
    return coeffs_[idx];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    int lead = std::min(lead_, o.lead_);
    // both operands are exact below their truncation; the sum is exact
    // up to the smaller truncation point
    int top = std::min(lead_ + static_cast<int>(coeffs_.size()),
                       o.lead_ + static_cast<int>(o.coeffs_.size()));
    if (top <= lead) throw std::invalid_argument("LaurentSeries: disjoint truncation windows");
    std::vector<SymPoly> coeffs(static_cast<std::size_t>(top - lead));
    for (int e = lead; e < top; ++e) {
        SymPoly c;
        if (e >= lead_ && e < lead_ + static_cast<int>(coeffs_.size()))
            c += coeffs_[static_cast<std::size_t>(e - lead_)];
        if (e >= o.lead_ && e < o.lead_ + static_cast<int>(o.coeffs_.size()))
            c += o.coeffs_[static_cast<std::size_t>(e - o.lead_)];
        coeffs[static_cast<std::size_t>(e - lead)] = std::move(c);
    }
    return LaurentSeries(lead, std::move(coeffs));
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + (o * SymPoly(Q(-1)));
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    unsigned n = std::min(order(), o.order());
    std::vector<SymPoly> coeffs(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; i + j < n; ++j) coeffs[i + j] += coeffs_[i] * o.coeffs_[j];
    return LaurentSeries(lead_ + o.lead_, std::move(coeffs));
}

LaurentSeries LaurentSeries::operator*(const SymPoly& c) const {
    std::vector<SymPoly> coeffs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] = coeffs_[i] * c;
    return LaurentSeries(lead_, std::move(coeffs));
}

LaurentSeries LaurentSeries::derivative() const {
    std::vector<SymPoly> coeffs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs[i] = coeffs_[i] * Q(lead_ + static_cast<long>(i));
    // term c*u^e maps to e*c*u^(e-1); the array shifts down one slot
    return LaurentSeries(lead_ - 1, std::move(coeffs));
}

LaurentSeries LaurentSeries::normalized() const {
    std::size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip].is_zero()) ++skip;
    if (skip == coeffs_.size()) return LaurentSeries(0, {SymPoly()});
    std::vector<SymPoly> coeffs(coeffs_.begin() + static_cast<long>(skip), coeffs_.end());
    return LaurentSeries(lead_ + static_cast<int>(skip), std::move(coeffs));
}

LaurentSeries LaurentSeries::inverse() const {
    LaurentSeries a = normalized();
    if (a.coeffs_.empty() || a.coeffs_[0].is_zero())
        throw std::domain_error("LaurentSeries: cannot invert zero series");
    if (!a.coeffs_[0].is_constant())
        throw std::domain_error("LaurentSeries: leading coefficient must be constant");
    Q a0 = a.coeffs_[0].constant_value();
    unsigned n = a.order();
    std::vector<SymPoly> b(n);
    b[0] = SymPoly(Q(1) / a0);
    for (unsigned k = 1; k < n; ++k) {
        SymPoly acc;
        for (unsigned j = 1; j <= k; ++j) acc += a.coeffs_[j] * b[k - j];
        b[k] = acc * (Q(-1) / a0);
    }
    return LaurentSeries(-a.lead_, std::move(b));
}

LaurentSeries LaurentSeries::truncated(unsigned order) const {
    if (order == 0 || order > coeffs_.size())
        throw std::invalid_argument("LaurentSeries: bad truncation");
    std::vector<SymPoly> coeffs(coeffs_.begin(), coeffs_.begin() + order);
    return LaurentSeries(lead_, std::move(coeffs));
}

}  // namespace divl1
