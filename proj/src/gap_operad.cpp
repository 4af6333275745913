#include "cumulantkit/gap_operad.hpp"

#include <algorithm>

namespace ckit {

Partition compose_partial(const Partition& p, int gap, const Partition& q) {
    if (gap < 1 || gap > gap_arity(p)) fail(errc::invalid_gap, "gap index out of range");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(x < gap ? x : x + q.degree());
        blocks.push_back(std::move(nb));
    }
    for (const auto& b : q.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(x + gap - 1);
        blocks.push_back(std::move(nb));
    }
    return Partition::of_blocks(p.degree() + q.degree(), std::move(blocks));
}

Partition compose_full(const Partition& p, const std::vector<Partition>& inputs) {
    if (static_cast<int>(inputs.size()) != gap_arity(p))
        fail(errc::arity_mismatch, "compose_full expects deg(p)+1 inputs");
    // Element i of p lands at i + deg(inputs[1..i]); input i shifts past the
    // first i-1 elements of p and everything inserted before it.
    std::vector<int> shift(inputs.size() + 1, 0);
    for (std::size_t i = 1; i <= inputs.size(); ++i)
        shift[i] = shift[i - 1] + inputs[i - 1].degree();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(x + shift[static_cast<std::size_t>(x)]);
        blocks.push_back(std::move(nb));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        int offset = static_cast<int>(i) + shift[i];
        for (const auto& b : inputs[i].blocks()) {
            std::vector<int> nb;
            nb.reserve(b.size());
            for (int x : b) nb.push_back(x + offset);
            blocks.push_back(std::move(nb));
        }
    }
    int total = p.degree();
    for (const auto& q : inputs) total += q.degree();
    return Partition::of_blocks(total, std::move(blocks));
}

bool check_corolla_relation(int m, int n) {
    if (m < 2 || n < 2) fail(errc::invalid_argument, "generators need m, n >= 2");
    Partition pm = Partition::coarsest(m - 1);
    Partition pn = Partition::coarsest(n - 1);
    Partition lhs = compose_partial(pm, m, pn);
    Partition rhs = compose_partial(pn, 1, pm);
    Partition expected = ordinal_sum(pm, pn);
    return lhs == rhs && lhs == expected;
}

LinComb<Partition> brace(const Partition& p, const std::vector<Partition>& args) {
    int arity = gap_arity(p);
    int k = static_cast<int>(args.size());
    LinComb<Partition> out;
    if (k > arity) return out;  // no increasing placement exists
    std::vector<int> slots(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == k) {
            std::vector<Partition> inputs(static_cast<std::size_t>(arity));
            for (int l = 0; l < k; ++l)
                inputs[static_cast<std::size_t>(slots[static_cast<std::size_t>(l)] - 1)] = args[static_cast<std::size_t>(l)];
            out.add(compose_full(p, inputs), Rational(1));
            return;
        }
        for (int s = from; s <= arity - (k - pos - 1); ++s) {
            slots[static_cast<std::size_t>(pos)] = s;
            self(self, pos + 1, s + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

bool nc_retract_check(const Partition& p, int gap, const Partition& q) {
    Partition lhs = nc_closure(compose_partial(p, gap, q));
    Partition rhs = compose_partial(nc_closure(p), gap, nc_closure(q));
    return lhs == rhs;
}

}  // namespace ckit
