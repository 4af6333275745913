#pragma once

#include <vector>

#include "cumulantkit/partition.hpp"
#include "cumulantkit/polynomial.hpp"

namespace ckit {

// Moment-cumulant transforms: free over noncrossing partitions, classical
// over all set partitions, boolean over interval partitions, monotone over
// heap-weighted noncrossing partitions. Each direction is computed by at
// least two independent routes and cross-checked exactly.

enum class Flavor { free_probability, classical, boolean_probability, monotone };
const char* flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);

struct Sequence {
    std::vector<Rational> values;  // values[i] holds the index-(i+1) entry
    int size() const { return static_cast<int>(values.size()); }
    Rational at(int index) const {  // 1-based
        if (index < 1 || index > size()) fail(errc::invalid_argument, "sequence index out of range");
        return values[static_cast<std::size_t>(index - 1)];
    }
    friend bool operator==(const Sequence&, const Sequence&) = default;
};

// Summation weight of a partition in the given flavor's moment formula
// (zero excludes the partition from the summation domain).
Rational moment_weight(Flavor f, const Partition& p);

Sequence moments_from_cumulants(Flavor f, const Sequence& cumulants);
Sequence cumulants_from_moments(Flavor f, const Sequence& moments);

Sequence free_moments(const Sequence& k);
Sequence free_cumulants(const Sequence& m);
Sequence classical_moments(const Sequence& c);
Sequence classical_cumulants(const Sequence& m);
Sequence boolean_moments(const Sequence& b);
Sequence monotone_moments(const Sequence& h);

// Free cumulants from classical ones: sum of c_P over set partitions whose
// noncrossing closure is the one-block partition.
Sequence free_from_classical(const Sequence& c);

// Solves the half-shuffle lift on general set partitions from classical
// cumulant data and checks it against the noncrossing fixpoint through the
// closure fibre sum, and against the classical moment formula.
bool shuffle_lift_check(const Sequence& c, int n);

// Symbolic tables: the degree-n moment as a polynomial in cumulant
// variables, and the degree-n cumulant as a polynomial in moment variables.
Polynomial symbolic_moment(Flavor f, int n);
Polynomial symbolic_cumulant(Flavor f, int n);
const char* cumulant_variable(Flavor f);  // "k", "c", "b", "h"

}  // namespace ckit
