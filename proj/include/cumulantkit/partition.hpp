#pragma once

#include <compare>
#include <vector>

#include "cumulantkit/lincomb.hpp"
#include "cumulantkit/rational.hpp"

namespace ckit {

// Canonical set partition of [n]. Blocks are strictly increasing lists of
// 1-based elements, pairwise disjoint with union [n], and the block list is
// sorted by minimum element. Equality of canonical forms is structural
// equality, which is what makes partitions usable as basis keys.
class Partition {
public:
    Partition() : n_(0) {}  // the empty partition (degree 0)

    // Validates that `blocks` is a partition of [n] and canonicalizes.
    static Partition of_blocks(int n, std::vector<std::vector<int>> blocks);

    // Relabels arbitrary disjoint sets of positive integers along the unique
    // monotone bijection onto [n]. Overlaps raise InvalidPartition.
    static Partition standardized(const std::vector<std::vector<int>>& raw_blocks);

    static Partition coarsest(int n);  // I_n, single block (empty when n = 0)
    static Partition finest(int n);    // J_n, n singletons

    int degree() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    bool empty() const { return n_ == 0; }
    const std::vector<std::vector<int>>& blocks() const& { return blocks_; }
    std::vector<std::vector<int>> blocks() && { return std::move(blocks_); }
    const std::vector<int>& block(int i) const { return blocks_[i]; }
    // Index of the block containing element x.
    int block_of(int x) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    // Total order: degree, then block count, then lexicographic block list.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

bool is_noncrossing(const Partition& p);
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b);

// Finest noncrossing partition coarser than p (joins crossing blocks until
// none remain; this fixed point is the lattice minimum).
Partition nc_closure(const Partition& p);

std::vector<Partition> enumerate_set_partitions(int n);
std::vector<Partition> enumerate_noncrossing_partitions(int n);

// Induced standardized partition on a subset X of [n].
Partition restrict_to(const Partition& p, const std::vector<int>& x);

// Maximal runs of consecutive integers of a non-empty set, in increasing order.
std::vector<std::pair<int, int>> convex_components(const std::vector<int>& x);

// Nesting preorder on block indices: i -> j when Conv(block i) meets block j,
// i.e. j is nested in i or the two blocks cross. Reflexive pairs are omitted
// from both layers (every block trivially relates to itself); `closure` is the
// transitive closure of `one_step` and is what cuts are defined against.
struct NestingPreorder {
    std::vector<std::vector<bool>> one_step;
    std::vector<std::vector<bool>> closure;
    bool antisymmetric() const;
};
NestingPreorder nesting_preorder(const Partition& p);

// A cut: the block set split into a lowerset and its complementary upperset.
struct Cut {
    std::vector<int> lowerset;  // sorted block indices; closed under englobing/crossing
};
std::vector<Cut> enumerate_cuts(const Partition& p);
bool is_lowerset(const Partition& p, const NestingPreorder& pre, unsigned mask);

// Standardized partition carried by the lowerset / upperset of a cut.
Partition lowerset_partition(const Partition& p, const Cut& cut);
Partition upperset_partition(const Partition& p, const Cut& cut);

// Noncommutative word of partitions. In the full incidence bialgebra the
// factors may include empty partitions; the Hopf-quotient basis uses reduced
// words (no empty factors). The empty word is the algebra unit.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Partition> factors) : factors_(std::move(factors)) {}
    static Monomial unit() { return Monomial(); }
    static Monomial of(const Partition& p) { return Monomial({p}); }

    bool is_unit() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }
    const std::vector<Partition>& factors() const& { return factors_; }
    std::vector<Partition> factors() && { return std::move(factors_); }
    const Partition& factor(std::size_t i) const { return factors_[i]; }

    int total_degree() const;
    int total_blocks() const;
    bool has_empty_factor() const;
    Monomial reduced() const;  // drops empty factors (image in the Hopf quotient)
    Monomial concat(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<Partition> factors_;
};

// Commutative monomial: multiset of non-empty partitions in sorted canonical
// storage, so multiset equality is structural equality.
class CMonomial {
public:
    CMonomial() = default;
    explicit CMonomial(std::vector<Partition> factors);
    static CMonomial unit() { return CMonomial(); }
    static CMonomial of(const Partition& p) { return CMonomial({p}); }

    bool is_unit() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }
    const std::vector<Partition>& factors() const& { return factors_; }
    std::vector<Partition> factors() && { return std::move(factors_); }

    int total_degree() const;
    int total_blocks() const;
    CMonomial mul(const CMonomial& o) const;

    friend bool operator==(const CMonomial& a, const CMonomial& b) = default;
    friend std::strong_ordering operator<=>(const CMonomial& a, const CMonomial& b);

private:
    std::vector<Partition> factors_;
};

// Word of restrictions of the cut's upperset to the gaps left by the
// lowerset's underlying elements: one factor per gap, empty gaps included.
Monomial gap_monomial(const Partition& p, const Cut& cut);
Monomial reduced_gap_monomial(const Partition& p, const Cut& cut);

// Coarsening order: p <= q when every block of q is a union of blocks of p.
bool finer_or_equal(const Partition& p, const Partition& q);

// Fibre p/q for p <= q: commutative monomial of the standardized restrictions
// of p to the blocks of q. NotComparable when p is not finer than q.
CMonomial fibre(const Partition& p, const Partition& q);

// All q >= p, obtained by merging along set partitions of the block set;
// optionally filtered to noncrossing q. Sorted canonically.
std::vector<Partition> enumerate_coarsenings(const Partition& p, bool noncrossing_only);

Partition ordinal_sum(const Partition& p, const Partition& q);

// Unique splitting of a noncrossing partition into irreducible components
// (1 and the maximum share a block in each component).
std::vector<Partition> irreducible_components(const Partition& p);
bool is_irreducible(const Partition& p);
bool is_boolean(const Partition& p);

// Number of monotone block numberings of (p, ->). Memoized; concurrent calls
// are safe and return identical results.
Integer heap_order_count(const Partition& p);

}  // namespace ckit
