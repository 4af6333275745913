#pragma once

#include <vector>

#include "cumulantkit/partition.hpp"

namespace ckit::test {

inline Partition P(std::vector<std::vector<int>> blocks) {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return Partition::of_blocks(n, std::move(blocks));
}

// All words over the chosen partition family with total degree <= n_max,
// including the unit.
inline std::vector<Monomial> words_up_to(int n_max, bool nc) {
    std::vector<std::vector<Partition>> by_degree(static_cast<std::size_t>(n_max) + 1);
    for (int d = 1; d <= n_max; ++d)
        by_degree[static_cast<std::size_t>(d)] =
            nc ? enumerate_noncrossing_partitions(d) : enumerate_set_partitions(d);
    std::vector<Monomial> out{Monomial::unit()};
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (!cur.empty()) out.push_back(Monomial(cur));
        for (int d = 1; d <= rem; ++d)
            for (const Partition& p : by_degree[static_cast<std::size_t>(d)]) {
                cur.push_back(p);
                self(self, rem - d);
                cur.pop_back();
            }
    };
    rec(rec, n_max);
    return out;
}

// Deterministic small rationals for property tests.
struct RationalSource {
    unsigned long state;
    explicit RationalSource(unsigned long seed) : state(seed * 6364136223846793005ull + 1442695040888963407ull) {}
    unsigned long next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    Rational rational() {
        long num = static_cast<long>(next() % 19) - 9;
        long den = static_cast<long>(next() % 7) + 1;
        return Rational(num, den);
    }
    Rational nonzero_rational() {
        Rational r = rational();
        return r.is_zero() ? Rational(1) : r;
    }
};

}  // namespace ckit::test
