#include "cumulantkit/block_bialgebra.hpp"

#include <map>

namespace ckit {

BlockTensor block_coproduct(const Partition& p, bool noncrossing_mode) {
    BlockTensor out;
    for (const Partition& q : enumerate_coarsenings(p, noncrossing_mode))
        out.add(BlockPair{CMonomial::of(q), fibre(p, q)}, Rational(1));
    return out;
}

BlockTensor block_coproduct(const CMonomial& m, bool noncrossing_mode) {
    BlockTensor acc = BlockTensor::single(BlockPair{CMonomial::unit(), CMonomial::unit()});
    for (const Partition& f : m.factors()) {
        BlockTensor next;
        BlockTensor single = block_coproduct(f, noncrossing_mode);
        for (const auto& [pair, c] : acc.terms())
            for (const auto& [fp, fc] : single.terms())
                next.add(BlockPair{pair.first.mul(fp.first), pair.second.mul(fp.second)}, c * fc);
        acc = std::move(next);
    }
    return acc;
}

Rational block_counit(const CMonomial& m) {
    for (const Partition& f : m.factors())
        if (f.block_count() != 1) return Rational(0);
    return Rational(1);
}

LatticeInterval::LatticeInterval(Partition lo, Partition hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (!finer_or_equal(lower, upper))
        fail(errc::not_comparable, "interval needs lower <= upper");
}

LinComb<std::pair<LatticeInterval, LatticeInterval>>
lattice_coproduct(const LatticeInterval& iv, bool noncrossing_mode) {
    LinComb<std::pair<LatticeInterval, LatticeInterval>> out;
    for (const Partition& m : enumerate_coarsenings(iv.lower, noncrossing_mode)) {
        if (!finer_or_equal(m, iv.upper)) continue;
        out.add({LatticeInterval(m, iv.upper), LatticeInterval(iv.lower, m)}, Rational(1));
    }
    return out;
}

CMonomial interval_fibre(const LatticeInterval& iv) { return fibre(iv.lower, iv.upper); }

Rational lattice_moebius(const Partition& p, const Partition& q, bool noncrossing_mode) {
    if (!finer_or_equal(p, q)) fail(errc::not_comparable, "moebius needs p <= q");
    // mu(p, m) for all middle elements, by recursion on the interval.
    std::map<Partition, Rational> mu;
    std::vector<Partition> middles;
    for (const Partition& m : enumerate_coarsenings(p, noncrossing_mode))
        if (finer_or_equal(m, q)) middles.push_back(m);
    // enumerate_coarsenings sorts canonically; recompute in refinement-safe
    // order by repeatedly resolving elements whose strict predecessors are done.
    auto value = [&](auto&& self, const Partition& m) -> Rational {
        auto it = mu.find(m);
        if (it != mu.end()) return it->second;
        Rational v = m == p ? Rational(1) : Rational(0);
        if (m != p) {
            for (const Partition& s : middles)
                if (s != m && finer_or_equal(s, m)) v -= self(self, s);
        }
        mu[m] = v;
        return v;
    };
    return value(value, q);
}

}  // namespace ckit
