#pragma once

#include <map>
#include <utility>

#include "cumulantkit/rational.hpp"

namespace ckit {

// Finitely supported linear combination over an ordered basis key type.
// Zero coefficients are never stored, so structural equality of the
// underlying maps is equality of linear combinations. Ordered storage keeps
// iteration (and hence all serialized output) deterministic.
template <typename Key>
class LinComb {
public:
    using Terms = std::map<Key, Rational>;

    LinComb() = default;

    static LinComb single(Key k, Rational c = Rational(1)) {
        LinComb x;
        x.add(std::move(k), c);
        return x;
    }

    void add(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_scaled(const LinComb& other, const Rational& c) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : other.terms_) add(k, v * c);
    }

    LinComb& operator+=(const LinComb& o) { add_scaled(o, Rational(1)); return *this; }
    LinComb& operator-=(const LinComb& o) { add_scaled(o, Rational(-1)); return *this; }
    LinComb& operator*=(const Rational& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // The rvalue overload keeps range-fors over temporaries alive.
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }

    Rational coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

private:
    Terms terms_;
};

// Linear extension of a basis map f : Key -> LinComb<K2>.
template <typename Key, typename F>
auto expand(const LinComb<Key>& x, F&& f) {
    using Out = decltype(f(std::declval<const Key&>()));
    Out acc;
    for (const auto& [k, c] : x.terms()) acc.add_scaled(f(k), c);
    return acc;
}

}  // namespace ckit
