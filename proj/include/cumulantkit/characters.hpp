#pragma once

#include <functional>
#include <memory>

#include "cumulantkit/block_bialgebra.hpp"
#include "cumulantkit/gap_bialgebra.hpp"
#include "cumulantkit/partition.hpp"

namespace ckit {

enum class Algebra { gap_nc, gap_sp, block_nc, block_sp };

inline bool is_gap(Algebra a) { return a == Algebra::gap_nc || a == Algebra::gap_sp; }
inline bool is_noncrossing_mode(Algebra a) { return a == Algebra::gap_nc || a == Algebra::block_nc; }
inline Algebra block_counterpart(Algebra a) { return is_noncrossing_mode(a) ? Algebra::block_nc : Algebra::block_sp; }
inline Algebra gap_counterpart(Algebra a) { return is_noncrossing_mode(a) ? Algebra::gap_nc : Algebra::gap_sp; }
const char* algebra_name(Algebra a);

enum class FormKind { character, infinitesimal, generic };

// Lazily evaluated, memoized linear form on one of the four bialgebras.
// Characters are multiplicative and send the unit to 1; infinitesimal forms
// vanish on the unit and on words with two or more factors. Forms carrying a
// full word rule (fixpoint solutions, convolutions) evaluate through it, so
// multiplicativity stays a checkable theorem rather than a construction.
//
// Every form carries a mandatory truncation degree: evaluation beyond it is
// a TruncationExceeded error, never a silent zero. Memo tables are guarded;
// concurrent evaluations return identical rationals.
class LinearForm {
public:
    using GenRule = std::function<Rational(const Partition&)>;
    using WordRule = std::function<Rational(const Monomial&)>;
    using CWordRule = std::function<Rational(const CMonomial&)>;

    LinearForm() = default;

    static LinearForm character(Algebra tag, int max_degree, GenRule gen);
    static LinearForm infinitesimal(Algebra tag, int max_degree, GenRule gen);
    static LinearForm word_backed(Algebra tag, FormKind kind, int max_degree, WordRule rule);
    static LinearForm cword_backed(Algebra tag, FormKind kind, int max_degree, CWordRule rule);

    Algebra tag() const;
    FormKind kind() const;
    int max_degree() const;

    Rational operator()(const Partition& p) const;
    Rational operator()(const Monomial& m) const;
    Rational operator()(const CMonomial& m) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// --- basic forms ------------------------------------------------------------

LinearForm counit_form(Algebra tag, int max_degree);
// All-ones character on the block bialgebra.
LinearForm zeta(Algebra block_tag, int max_degree);
// Convolution inverse of zeta, by its defining recursion (1 on coarsest,
// minus the sum over strictly coarser partitions otherwise).
LinearForm moebius(Algebra block_tag, int max_degree);
// Infinitesimal character with value [one block] on generators.
LinearForm unit_infinitesimal(Algebra gap_tag, int max_degree);

// --- structure maps ---------------------------------------------------------

// The bar/hat identification: same generator table, other algebra.
LinearForm bar(const LinearForm& gap_form);
LinearForm hat(const LinearForm& block_form);

// Bijection between infinitesimal characters and characters sharing
// generator values.
LinearForm theta(const LinearForm& kappa);
LinearForm theta_inv(const LinearForm& phi);

// --- convolution ------------------------------------------------------------

LinearForm convolve_block(const LinearForm& a, const LinearForm& b);
LinearForm convolve_gap(const LinearForm& a, const LinearForm& b);

// Half-shuffle products dual to the unshuffle coproducts, with the usual
// unit conventions (f prec counit = f, counit prec f = 0, and mirrored).
LinearForm half_shuffle_prec(const LinearForm& a, const LinearForm& b);
LinearForm half_shuffle_succ(const LinearForm& a, const LinearForm& b);

// Two-sided convolution inverse of a block character; NotInvertible as soon
// as a needed coarsest value vanishes.
LinearForm convolution_inverse(const LinearForm& phi);

// Right action of block characters on gap forms through the coaction.
LinearForm coaction_act(const LinearForm& alpha, const LinearForm& phi);

// --- exponential bijections -------------------------------------------------

// Unique solution of phi = counit + kappa prec phi (left half-shuffle
// exponential); evaluation is the honest degree recursion on words.
LinearForm solve_fixpoint_prec(const LinearForm& kappa, int max_degree);
// Unique solution of phi = counit + phi succ kappa.
LinearForm solve_fixpoint_succ(const LinearForm& kappa, int max_degree);
// Convolution exponential; the series on a word stops at its block count.
LinearForm exp_star(const LinearForm& kappa, int max_degree);

// --- universal characters and their inverses --------------------------------

LinearForm psi_prec(int max_degree);  // all ones
LinearForm psi_succ(int max_degree);  // boolean indicator
LinearForm psi_star(int max_degree);  // heap orderings over factorial

// Closed recursion over irreducible components; equals both the lattice
// Moebius value mu(p, I_n) and the convolution inverse of psi_prec.
Rational psi_prec_inverse_closed(const Partition& p);

struct MixedInverseProducts {
    LinearForm succ_inverse;            // signed boolean indicator
    LinearForm succ_inverse_star_prec;  // irreducible indicator
    LinearForm prec_inverse_star_succ;  // signed irreducible indicator
};
MixedInverseProducts mixed_inverse_products(int max_degree);

// Alternating binomial-Catalan identity characterizing the Catalan numbers.
bool catalan_lemma_check(int n_max);

}  // namespace ckit
