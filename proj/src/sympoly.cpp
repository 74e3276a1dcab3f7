#include "divl1/sympoly.hpp"

#include <cmath>
#include <sstream>

namespace divl1 {

const char* symbol_name(Symbol s) {
    static const char* names[kNumSymbols] = {
        "a1", "a2", "a3", "a4", "a5", "a6", "a7", "F0",   "F1", "F2",
        "F3", "G0", "G1", "G2", "G3", "1/D", "L",  "A00", "A01", "A10"};
    return names[s];
}

SymPoly::SymPoly(const Q& c) {
    if (c != 0) terms_[Mono{}] = c;
}

SymPoly SymPoly::sym(Symbol s, unsigned power) {
    SymPoly p;
    if (power > 255) throw std::invalid_argument("SymPoly: exponent too large");
    Mono m{};
    m[s] = static_cast<std::uint8_t>(power);
    p.terms_[m] = 1;
    return p;
}

bool SymPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Q SymPoly::constant_value() const {
    if (terms_.empty()) return Q(0);
    if (!is_constant()) throw std::logic_error("SymPoly: not a constant");
    return terms_.begin()->second;
}

void SymPoly::add_term(const Mono& m, const Q& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    r += o;
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly r = *this;
    r -= o;
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Mono m;
            for (unsigned i = 0; i < kNumSymbols; ++i) {
                unsigned e = unsigned(m1[i]) + unsigned(m2[i]);
                if (e > 255) throw std::overflow_error("SymPoly: exponent overflow");
                m[i] = static_cast<std::uint8_t>(e);
            }
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

SymPoly SymPoly::operator*(const Q& c) const {
    SymPoly r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

SymPoly SymPoly::pow(unsigned e) const {
    SymPoly r(Q(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

SymPoly SymPoly::subst(Symbol s, const SymPoly& value) const {
    SymPoly r;
    for (const auto& [m, c] : terms_) {
        Mono m2 = m;
        unsigned e = m2[s];
        m2[s] = 0;
        SymPoly term;
        term.terms_[m2] = c;
        if (e > 0) term = term * value.pow(e);
        r += term;
    }
    return r;
}

SymPoly SymPoly::coeff_of(Symbol s, unsigned e) const {
    SymPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[s] != e) continue;
        Mono m2 = m;
        m2[s] = 0;
        r.add_term(m2, c);
    }
    return r;
}

unsigned SymPoly::degree_in(Symbol s) const {
    unsigned deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, unsigned(m[s]));
    return deg;
}

long double SymPoly::eval(const std::array<long double, kNumSymbols>& vals) const {
    long double total = 0;
    for (const auto& [m, c] : terms_) {
        long double t = c.convert_to<long double>();
        for (unsigned i = 0; i < kNumSymbols; ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= vals[i];
        total += t;
    }
    return total;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Q a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool has_sym = false;
        for (unsigned i = 0; i < kNumSymbols; ++i)
            if (m[i]) has_sym = true;
        if (a != 1 || !has_sym) out << a;
        bool need_dot = (a != 1 || !has_sym);
        for (unsigned i = 0; i < kNumSymbols; ++i) {
            if (!m[i]) continue;
            if (need_dot) out << "*";
            out << symbol_name(static_cast<Symbol>(i));
            if (m[i] > 1) out << "^" << unsigned(m[i]);
            need_dot = true;
        }
        first = false;
    }
    return out.str();
}

Q factorial_q(unsigned n) {
    Q r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace divl1
