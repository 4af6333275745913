#include "cumulantkit/gap_bialgebra.hpp"

#include <algorithm>

namespace ckit {

namespace {

struct CutTerm {
    Partition lowerset;   // standardized partition on the lowerset elements
    Monomial gaps;        // unreduced gap word (may contain empty factors)
    bool one_in_lowerset; // block containing element 1 lies in the lowerset
};

std::vector<CutTerm> cut_terms(const Partition& p) {
    std::vector<CutTerm> out;
    int block_of_one = p.empty() ? -1 : p.block_of(1);
    for (const Cut& cut : enumerate_cuts(p)) {
        CutTerm t;
        t.lowerset = lowerset_partition(p, cut);
        t.gaps = gap_monomial(p, cut);
        t.one_in_lowerset =
            block_of_one >= 0 &&
            std::binary_search(cut.lowerset.begin(), cut.lowerset.end(), block_of_one);
        out.push_back(std::move(t));
    }
    return out;
}

enum class Flavor { full, reduced };

// Multiplicative extension over the factors of a word: pick one cut per
// factor, concatenate lowersets on the left and gap words on the right.
GapTensor coproduct_impl(const Monomial& m, Flavor flavor) {
    GapTensor acc = GapTensor::single(GapPair{Monomial::unit(), Monomial::unit()});
    for (const Partition& f : m.factors()) {
        GapTensor next;
        for (const auto& [pair, coeff] : acc.terms()) {
            for (const CutTerm& t : cut_terms(f)) {
                Monomial left = pair.first;
                Monomial right = pair.second;
                if (flavor == Flavor::full) {
                    left = left.concat(Monomial::of(t.lowerset));
                    right = right.concat(t.gaps);
                } else {
                    if (!t.lowerset.empty()) left = left.concat(Monomial::of(t.lowerset));
                    right = right.concat(t.gaps.reduced());
                }
                next.add(GapPair{std::move(left), std::move(right)}, coeff);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

GapTensor gap_coproduct_full(const Monomial& m) { return coproduct_impl(m, Flavor::full); }

GapTensor gap_coproduct(const Monomial& m) {
    return coproduct_impl(m.reduced(), Flavor::reduced);
}

namespace {

GapTensor half_coproduct(const Monomial& m, bool want_one_in_lowerset) {
    Monomial r = m.reduced();
    if (r.is_unit()) fail(errc::not_in_augmentation_ideal, "unshuffle halves need a non-unit word");
    // The first factor's cut decides the half; remaining factors contribute all cuts.
    GapTensor acc;
    for (const CutTerm& t : cut_terms(r.factor(0))) {
        if (t.one_in_lowerset != want_one_in_lowerset) continue;
        Monomial left = t.lowerset.empty() ? Monomial::unit() : Monomial::of(t.lowerset);
        acc.add(GapPair{std::move(left), t.gaps.reduced()}, Rational(1));
    }
    std::vector<Partition> rest(r.factors().begin() + 1, r.factors().end());
    GapTensor tail = coproduct_impl(Monomial(std::move(rest)), Flavor::reduced);
    GapTensor out;
    for (const auto& [a, ca] : acc.terms())
        for (const auto& [b, cb] : tail.terms())
            out.add(GapPair{a.first.concat(b.first), a.second.concat(b.second)}, ca * cb);
    return out;
}

}  // namespace

GapTensor gap_coproduct_prec(const Monomial& m) { return half_coproduct(m, true); }
GapTensor gap_coproduct_succ(const Monomial& m) { return half_coproduct(m, false); }

Rational gap_counit(const Monomial& m) {
    return m.reduced().is_unit() ? Rational(1) : Rational(0);
}

LinComb<Partition> nc_star(const Partition& p) {
    if (!is_noncrossing(p)) fail(errc::unsupported_for_crossing, "nc* needs a noncrossing partition");
    LinComb<Partition> out;
    for (const Partition& q : enumerate_set_partitions(p.degree()))
        if (nc_closure(q) == p) out.add(q, Rational(1));
    return out;
}

LinComb<Monomial> nc_star(const Monomial& m) {
    LinComb<Monomial> acc = LinComb<Monomial>::single(Monomial::unit());
    for (const Partition& f : m.reduced().factors()) {
        LinComb<Monomial> next;
        for (const auto& [word, coeff] : acc.terms())
            for (const auto& [q, c] : nc_star(f).terms())
                next.add(word.concat(Monomial::of(q)), coeff * c);
        acc = std::move(next);
    }
    return acc;
}

GapTensor3 gap_split_left(const GapTensor& t, GapTensor (*f)(const Monomial&)) {
    GapTensor3 out;
    for (const auto& [pair, c] : t.terms())
        for (const auto& [inner, ci] : f(pair.first).terms())
            out.add(GapTriple{inner.first, inner.second, pair.second}, c * ci);
    return out;
}

GapTensor3 gap_split_right(const GapTensor& t, GapTensor (*f)(const Monomial&)) {
    GapTensor3 out;
    for (const auto& [pair, c] : t.terms())
        for (const auto& [inner, ci] : f(pair.second).terms())
            out.add(GapTriple{pair.first, inner.first, inner.second}, c * ci);
    return out;
}

}  // namespace ckit
