#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "cumulantkit/block_bialgebra.hpp"
#include "cumulantkit/gap_bialgebra.hpp"
#include "cumulantkit/partition.hpp"

namespace ckit {

// Right coaction of the block bialgebra on the gap bialgebra: refinement of
// each factor, with the empty partition fixed (its fibre is the unit).

using CoactionTerm = std::pair<Monomial, CMonomial>;
using CoactionTensor = LinComb<CoactionTerm>;

// Elements of gap (x) gap (x) block, the home of the comodule-bialgebra law.
using MixedTriple = std::tuple<Monomial, Monomial, CMonomial>;
using MixedTensor3 = LinComb<MixedTriple>;

CoactionTensor rho(const Partition& p, bool noncrossing_mode);
CoactionTensor rho(const Monomial& m, bool noncrossing_mode);

// First-class verification results, JSON-friendly so sweeps can be archived.
struct VerifyFailure {
    std::string input;
    std::string identity;
};

struct VerifyReport {
    std::string suite;
    std::string mode;  // "nc", "sp" or "both"
    int max_degree = 0;
    long cases_checked = 0;
    std::vector<VerifyFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Comodule-bialgebra laws at the unreduced level: unit and counit laws,
// multiplicativity of the coaction, and the interchange of coproduct and
// coaction, checked exhaustively per degree.
VerifyReport verify_comodule_bialgebra(int n_max, const std::string& mode);

// Compatibility of the unshuffle halves with the coaction on the Hopf
// quotient, checked on all non-unit words of bounded total degree.
VerifyReport verify_unshuffle_comodule(int n_max, const std::string& mode);

// Homomorphism squares: the closure fibre-sum map against the reduced
// coproduct, and the interval fibre map against the lattice coproduct.
VerifyReport verify_coalgebra_maps(int n_max, const std::string& mode);

// Operad axioms for both operads (units, associativity, noncrossing
// stability, generator relation, symmetric-group laws).
VerifyReport verify_operads(int n_max, const std::string& mode);

// Single-word checks of the interchange law, used for spot samples beyond
// the exhaustive sweep degrees.
bool check_comodule_interchange(const Monomial& w, bool noncrossing_mode);
bool check_unshuffle_interchange(const Monomial& w, bool noncrossing_mode);

VerifyReport run_verify_suite(const std::string& suite, int n_max, const std::string& mode);

}  // namespace ckit
