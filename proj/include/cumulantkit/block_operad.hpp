#pragma once

#include "cumulantkit/partition.hpp"

namespace ckit {

// Block-substitution operad on compositions (partitions with numbered
// blocks). Colours are block sizes; substitution refines a block by a
// partition of matching degree. Identities are the one-block compositions.

class Composition {
public:
    Composition() = default;
    // slots[j] is the canonical block index serving as input slot j+1.
    Composition(Partition p, std::vector<int> slots);
    // Blocks listed in slot order (the usual sequence-of-blocks notation).
    static Composition from_block_list(const std::vector<std::vector<int>>& blocks);

    const Partition& underlying() const& { return partition_; }
    Partition underlying() && { return std::move(partition_); }
    const std::vector<int>& slots() const& { return slots_; }
    std::vector<int> slots() && { return std::move(slots_); }
    int block_count() const { return partition_.block_count(); }
    int degree() const { return partition_.degree(); }
    bool empty() const { return partition_.empty(); }
    const std::vector<int>& slot_block(int j) const& { return partition_.block(slots_[static_cast<std::size_t>(j)]); }
    std::vector<int> slot_block(int j) && { return partition_.block(slots_[static_cast<std::size_t>(j)]); }
    std::vector<std::vector<int>> block_list() const;

    friend bool operator==(const Composition& a, const Composition& b) = default;

private:
    Partition partition_;
    std::vector<int> slots_;
};

struct ColouredSignature {
    std::vector<int> inputs;  // block sizes in slot order
    int output = 0;           // degree
    friend bool operator==(const ColouredSignature&, const ColouredSignature&) = default;
};

// EmptyExcluded on the empty composition (the operad has no nullary slot).
ColouredSignature signature(const Composition& c);

// Substitutes inputs[j] for slot j along the monotone bijection onto the
// block; output slots concatenate the input slot orders in slot order.
// Strict colour typecheck: deg(inputs[j]) must equal the block size.
Composition block_substitute(const Composition& c, const std::vector<Composition>& inputs);

// Renumbering of slots: slot j of the result is slot sigma[j] of c
// (a right action: acting by sigma then tau equals acting by sigma o tau).
Composition sigma_action(const Composition& c, const std::vector<int>& sigma);

}  // namespace ckit
