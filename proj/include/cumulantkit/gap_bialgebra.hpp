#pragma once

#include <tuple>
#include <utility>

#include "cumulantkit/partition.hpp"

namespace ckit {

// Incidence bialgebra of the gap-insertion operad and its Hopf quotient.
// The coproduct of a partition sums over cuts: lowerset on the left, the
// word of gap restrictions of the upperset on the right. Everything extends
// multiplicatively to words of partitions.

using GapPair = std::pair<Monomial, Monomial>;
using GapTriple = std::tuple<Monomial, Monomial, Monomial>;
using GapTensor = LinComb<GapPair>;
using GapTensor3 = LinComb<GapTriple>;

// Full (unreduced) coproduct on words that may contain empty factors; the
// left leg keeps empty lowerset partitions, the right leg keeps empty gaps.
GapTensor gap_coproduct_full(const Monomial& m);

// Hopf-quotient coproduct: empty partitions become the unit on both legs.
GapTensor gap_coproduct(const Monomial& m);

// Unshuffle split of the reduced coproduct on the augmentation ideal, by
// whether the block containing the first element sits in the lowerset
// (prec) or the upperset (succ). NotInAugmentationIdeal on the unit.
GapTensor gap_coproduct_prec(const Monomial& m);
GapTensor gap_coproduct_succ(const Monomial& m);

// Counit: 1 on the unit class (all factors empty), 0 otherwise.
Rational gap_counit(const Monomial& m);

// Sum of all set partitions whose noncrossing closure is p, extended
// multiplicatively to words. UnsupportedForCrossing on crossing input.
LinComb<Partition> nc_star(const Partition& p);
LinComb<Monomial> nc_star(const Monomial& m);

// Tensor-leg helpers used by coassociativity and unshuffle checks.
GapTensor3 gap_split_left(const GapTensor& t, GapTensor (*f)(const Monomial&));
GapTensor3 gap_split_right(const GapTensor& t, GapTensor (*f)(const Monomial&));

}  // namespace ckit
