#include "cumulantkit/block_operad.hpp"

#include <algorithm>
#include <numeric>

namespace ckit {

Composition::Composition(Partition p, std::vector<int> slots)
    : partition_(std::move(p)), slots_(std::move(slots)) {
    int k = partition_.block_count();
    if (static_cast<int>(slots_.size()) != k)
        fail(errc::invalid_argument, "slot list must number every block");
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int s : slots_) {
        if (s < 0 || s >= k || seen[static_cast<std::size_t>(s)])
            fail(errc::invalid_argument, "slot list is not a permutation of the blocks");
        seen[static_cast<std::size_t>(s)] = true;
    }
}

Composition Composition::from_block_list(const std::vector<std::vector<int>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    Partition p = Partition::of_blocks(n, blocks);
    // Recover which canonical block each listed block became.
    std::vector<int> slots;
    slots.reserve(blocks.size());
    for (const auto& b : blocks) {
        int mn = *std::min_element(b.begin(), b.end());
        slots.push_back(p.block_of(mn));
    }
    return Composition(std::move(p), std::move(slots));
}

std::vector<std::vector<int>> Composition::block_list() const {
    std::vector<std::vector<int>> out;
    out.reserve(slots_.size());
    for (int s : slots_) out.push_back(partition_.block(s));
    return out;
}

ColouredSignature signature(const Composition& c) {
    if (c.empty()) fail(errc::empty_excluded, "the empty composition is not an operation");
    ColouredSignature sig;
    sig.output = c.degree();
    for (int j = 0; j < c.block_count(); ++j)
        sig.inputs.push_back(static_cast<int>(c.slot_block(j).size()));
    return sig;
}

Composition block_substitute(const Composition& c, const std::vector<Composition>& inputs) {
    if (c.empty()) fail(errc::empty_excluded, "cannot substitute into the empty composition");
    if (static_cast<int>(inputs.size()) != c.block_count())
        fail(errc::arity_mismatch, "one input per block required");
    std::vector<std::vector<int>> out_blocks;
    for (int j = 0; j < c.block_count(); ++j) {
        const std::vector<int>& target = c.slot_block(j);
        const Composition& q = inputs[static_cast<std::size_t>(j)];
        if (q.degree() != static_cast<int>(target.size()))
            fail(errc::colour_mismatch, "input degree must match block size");
        for (const auto& qb : q.block_list()) {
            std::vector<int> nb;
            nb.reserve(qb.size());
            for (int x : qb) nb.push_back(target[static_cast<std::size_t>(x - 1)]);
            out_blocks.push_back(std::move(nb));
        }
    }
    return Composition::from_block_list(out_blocks);
}

Composition sigma_action(const Composition& c, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != c.block_count())
        fail(errc::arity_mismatch, "permutation size must match block count");
    std::vector<bool> seen(sigma.size(), false);
    for (int s : sigma) {
        if (s < 0 || s >= static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(s)])
            fail(errc::invalid_argument, "not a permutation");
        seen[static_cast<std::size_t>(s)] = true;
    }
    std::vector<int> slots(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j)
        slots[j] = c.slots()[static_cast<std::size_t>(sigma[j])];
    return Composition(c.underlying(), std::move(slots));
}

}  // namespace ckit
