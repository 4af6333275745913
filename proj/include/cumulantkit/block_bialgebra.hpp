#pragma once

#include <utility>

#include "cumulantkit/partition.hpp"

namespace ckit {

// Incidence bialgebra of the block-substitution operad: free commutative
// algebra on (noncrossing) partitions with the refinement coproduct
// P |-> sum over coarsenings Q of Q (x) P/Q.

using BlockPair = std::pair<CMonomial, CMonomial>;
using BlockTriple = std::tuple<CMonomial, CMonomial, CMonomial>;
using BlockTensor = LinComb<BlockPair>;
using BlockTensor3 = LinComb<BlockTriple>;

BlockTensor block_coproduct(const Partition& p, bool noncrossing_mode);
BlockTensor block_coproduct(const CMonomial& m, bool noncrossing_mode);

// 1 exactly on products of one-block partitions.
Rational block_counit(const CMonomial& m);

// Interval of the (noncrossing) partition lattice; validated at construction.
struct LatticeInterval {
    Partition lower;
    Partition upper;
    LatticeInterval(Partition lo, Partition hi);
    friend bool operator==(const LatticeInterval&, const LatticeInterval&) = default;
    friend std::strong_ordering operator<=>(const LatticeInterval& a, const LatticeInterval& b) {
        if (auto c = a.lower <=> b.lower; c != 0) return c;
        return a.upper <=> b.upper;
    }
};

// Opposite incidence coalgebra of the lattice: [P,Q] |-> sum over middle M of
// [M,Q] (x) [P,M]. With this order the fibre map is a coalgebra homomorphism.
LinComb<std::pair<LatticeInterval, LatticeInterval>>
lattice_coproduct(const LatticeInterval& iv, bool noncrossing_mode);

// Fibre of the interval (the map identifying type-equivalent intervals).
CMonomial interval_fibre(const LatticeInterval& iv);

// Moebius function of the lattice interval [p, q] computed by the standard
// recursion over the interval; independent of the character machinery.
Rational lattice_moebius(const Partition& p, const Partition& q, bool noncrossing_mode);

}  // namespace ckit
