#include "cumulantkit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ckit {

bool Polynomial::GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    std::size_t m = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        int ai = i < a.size() ? a[i] : 0;
        int bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai > bi;
    }
    return false;
}

Polynomial::Exponents Polynomial::trimmed(Exponents e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(int index, int power) {
    if (index < 1) fail(errc::invalid_argument, "variable index is 1-based");
    Polynomial p;
    Exponents e(static_cast<std::size_t>(index), 0);
    e[static_cast<std::size_t>(index - 1)] = power;
    p.add_term(std::move(e), Rational(1));
    return p;
}

void Polynomial::add_term(Exponents e, const Rational& c) {
    if (c.is_zero()) return;
    e = trimmed(std::move(e));
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    return out;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(trimmed(e));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string Polynomial::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        bool negative = coeff < Rational(0);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) coeff = -coeff;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << coeff.str();
        } else if (coeff.is_one()) {
            os << mono;
        } else {
            os << coeff.str() << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ckit
