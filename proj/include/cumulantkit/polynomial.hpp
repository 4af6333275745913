#pragma once

#include <map>
#include <string>
#include <vector>

#include "cumulantkit/rational.hpp"

namespace ckit {

// Sparse polynomial over Q in variables x_1, x_2, ... represented by
// exponent vectors, ordered by descending graded lexicographic order so the
// rendered form is canonical ("k1^3 + 3*k1*k2 + k3").
class Polynomial {
public:
    using Exponents = std::vector<int>;  // exponents[i] is the power of x_{i+1}

    struct GrlexDescending {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial variable(int index, int power = 1);  // 1-based index

    void add_term(Exponents e, const Rational& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational, GrlexDescending>& terms() const& { return terms_; }
    std::map<Exponents, Rational, GrlexDescending> terms() && { return std::move(terms_); }
    Rational coefficient(const Exponents& e) const;

    // Renders with the given variable base name: "m2 - m1^2" style.
    std::string str(const std::string& var) const;

private:
    static Exponents trimmed(Exponents e);
    std::map<Exponents, Rational, GrlexDescending> terms_;
};

}  // namespace ckit
