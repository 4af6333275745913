#pragma once

#include "cumulantkit/partition.hpp"

namespace ckit {

// Gap-insertion operad: a partition of degree n acts with arity n+1, its
// input slots being the gaps between elements including the two outer gaps.
// The empty partition is the operad unit.

inline int gap_arity(const Partition& p) { return p.degree() + 1; }

// Inserts q into gap i of p (1 <= i <= deg(p)+1): elements of p at or beyond
// the gap shift by deg(q), the elements of q shift by i-1.
Partition compose_partial(const Partition& p, int gap, const Partition& q);

// Simultaneous insertion into all deg(p)+1 gaps.
Partition compose_full(const Partition& p, const std::vector<Partition>& inputs);

// p_m <>_m p_n = p_n <>_1 p_m for the one-block generators, both equal to the
// boolean two-block partition {[m-1],[n-1]}.
bool check_corolla_relation(int m, int n);

// Brace operation induced by the operad: sum over increasing placements of
// the arguments into the input slots of p (all deg(p)+1 gaps are slots).
LinComb<Partition> brace(const Partition& p, const std::vector<Partition>& args);

// nc(p <>_i q) = nc(p) <>_i nc(q): the noncrossing closure is an operad
// morphism and exhibits the noncrossing operad as a retract.
bool nc_retract_check(const Partition& p, int gap, const Partition& q);

}  // namespace ckit
