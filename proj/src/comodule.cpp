#include "cumulantkit/comodule.hpp"

#include <sstream>

#include "cumulantkit/block_operad.hpp"
#include "cumulantkit/gap_operad.hpp"

namespace ckit {

CoactionTensor rho(const Partition& p, bool noncrossing_mode) {
    CoactionTensor out;
    if (p.empty()) {
        out.add(CoactionTerm{Monomial::of(Partition()), CMonomial::unit()}, Rational(1));
        return out;
    }
    for (const Partition& q : enumerate_coarsenings(p, noncrossing_mode))
        out.add(CoactionTerm{Monomial::of(q), fibre(p, q)}, Rational(1));
    return out;
}

CoactionTensor rho(const Monomial& m, bool noncrossing_mode) {
    CoactionTensor acc = CoactionTensor::single(CoactionTerm{Monomial::unit(), CMonomial::unit()});
    for (const Partition& f : m.factors()) {
        CoactionTensor next;
        CoactionTensor single = rho(f, noncrossing_mode);
        for (const auto& [pair, c] : acc.terms())
            for (const auto& [fp, fc] : single.terms())
                next.add(CoactionTerm{pair.first.concat(fp.first), pair.second.mul(fp.second)},
                         c * fc);
        acc = std::move(next);
    }
    return acc;
}

namespace {

std::string describe(const Partition& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i) os << '|';
        const auto& b = p.blocks()[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) os << ',';
            os << b[j];
        }
    }
    std::string s = os.str();
    return s.empty() ? "(empty)" : s;
}

std::string describe(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += " . ";
        s += describe(m.factor(i));
    }
    return s;
}

MixedTensor3 interchange_lhs(const Monomial& w, bool nc,
                             GapTensor (*coproduct)(const Monomial&)) {
    MixedTensor3 out;
    for (const auto& [rt, c] : rho(w, nc).terms())
        for (const auto& [d, c2] : coproduct(rt.first).terms())
            out.add(MixedTriple{d.first, d.second, rt.second}, c * c2);
    return out;
}

MixedTensor3 interchange_rhs(const Monomial& w, bool nc,
                             GapTensor (*coproduct)(const Monomial&)) {
    MixedTensor3 out;
    for (const auto& [d, c] : coproduct(w).terms())
        for (const auto& [lt, cl] : rho(d.first, nc).terms())
            for (const auto& [ut, cu] : rho(d.second, nc).terms())
                out.add(MixedTriple{lt.first, ut.first, lt.second.mul(ut.second)}, c * cl * cu);
    return out;
}

using CoactionTriple = std::tuple<Monomial, CMonomial, CMonomial>;

LinComb<CoactionTriple> coassoc_lhs(const Monomial& w, bool nc) {
    LinComb<CoactionTriple> out;
    for (const auto& [t, c] : rho(w, nc).terms())
        for (const auto& [t2, c2] : rho(t.first, nc).terms())
            out.add(CoactionTriple{t2.first, t2.second, t.second}, c * c2);
    return out;
}

LinComb<CoactionTriple> coassoc_rhs(const Monomial& w, bool nc) {
    LinComb<CoactionTriple> out;
    for (const auto& [t, c] : rho(w, nc).terms())
        for (const auto& [d, c2] : block_coproduct(t.second, nc).terms())
            out.add(CoactionTriple{t.first, d.first, d.second}, c * c2);
    return out;
}

std::vector<bool> modes_of(const std::string& mode) {
    if (mode == "nc") return {true};
    if (mode == "sp") return {false};
    if (mode == "both") return {true, false};
    fail(errc::invalid_argument, "mode must be nc, sp or both");
}

std::vector<Partition> degree_basis(int n, bool nc) {
    return nc ? enumerate_noncrossing_partitions(n) : enumerate_set_partitions(n);
}

// All non-unit words over the chosen family with total degree <= n_max.
std::vector<Monomial> words_up_to(int n_max, bool nc) {
    std::vector<std::vector<Partition>> by_degree(static_cast<std::size_t>(n_max) + 1);
    for (int d = 1; d <= n_max; ++d) by_degree[static_cast<std::size_t>(d)] = degree_basis(d, nc);
    std::vector<Monomial> out;
    std::vector<Partition> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!current.empty()) out.push_back(Monomial(current));
        for (int d = 1; d <= remaining; ++d)
            for (const Partition& p : by_degree[static_cast<std::size_t>(d)]) {
                current.push_back(p);
                self(self, remaining - d);
                current.pop_back();
            }
    };
    rec(rec, n_max);
    return out;
}

}  // namespace

VerifyReport verify_comodule_bialgebra(int n_max, const std::string& mode) {
    VerifyReport rep{"comodule", mode, n_max, 0, {}};
    for (bool nc : modes_of(mode)) {
        const char* tagname = nc ? "nc" : "sp";
        for (int n = 0; n <= n_max; ++n) {
            for (const Partition& p : degree_basis(n, nc)) {
                Monomial w = Monomial::of(p);
                ++rep.cases_checked;
                if (interchange_lhs(w, nc, &gap_coproduct_full) !=
                    interchange_rhs(w, nc, &gap_coproduct_full))
                    rep.failures.push_back({describe(p), std::string("interchange[") + tagname + "]"});
                if (coassoc_lhs(w, nc) != coassoc_rhs(w, nc))
                    rep.failures.push_back({describe(p), std::string("coassociativity[") + tagname + "]"});
                // (Id (x) counit) after the coaction returns the word itself.
                LinComb<Monomial> counit_side;
                for (const auto& [t, c] : rho(w, nc).terms())
                    counit_side.add(t.first, c * block_counit(t.second));
                if (!(counit_side == LinComb<Monomial>::single(w)))
                    rep.failures.push_back({describe(p), std::string("coaction-counit[") + tagname + "]"});
                // (gap counit (x) Id) after the coaction kills non-units.
                LinComb<CMonomial> eps_side;
                for (const auto& [t, c] : rho(w, nc).terms())
                    eps_side.add(t.second, c * gap_counit(t.first));
                LinComb<CMonomial> expected;
                if (!gap_counit(w).is_zero()) expected.add(CMonomial::unit(), gap_counit(w));
                if (!(eps_side == expected))
                    rep.failures.push_back({describe(p), std::string("counit-law[") + tagname + "]"});
            }
        }
        // Two-factor words exercise the multiplicative extension of the coaction.
        for (const Monomial& w : words_up_to(std::min(n_max, 3), nc)) {
            if (w.size() != 2) continue;
            ++rep.cases_checked;
            if (interchange_lhs(w, nc, &gap_coproduct_full) !=
                interchange_rhs(w, nc, &gap_coproduct_full))
                rep.failures.push_back({describe(w), std::string("interchange-word[") + tagname + "]"});
        }
    }
    return rep;
}

VerifyReport verify_unshuffle_comodule(int n_max, const std::string& mode) {
    VerifyReport rep{"unshuffle", mode, n_max, 0, {}};
    for (bool nc : modes_of(mode)) {
        const char* tagname = nc ? "nc" : "sp";
        for (const Monomial& w : words_up_to(n_max, nc)) {
            ++rep.cases_checked;
            if (interchange_lhs(w, nc, &gap_coproduct_prec) !=
                interchange_rhs(w, nc, &gap_coproduct_prec))
                rep.failures.push_back({describe(w), std::string("prec-interchange[") + tagname + "]"});
            if (interchange_lhs(w, nc, &gap_coproduct_succ) !=
                interchange_rhs(w, nc, &gap_coproduct_succ))
                rep.failures.push_back({describe(w), std::string("succ-interchange[") + tagname + "]"});
        }
    }
    return rep;
}

namespace {

// Extends the closure fibre sum linearly to tensor legs.
GapTensor nc_star_tensor(const GapTensor& t) {
    GapTensor out;
    for (const auto& [pair, c] : t.terms())
        for (const auto& [lw, cl] : nc_star(pair.first).terms())
            for (const auto& [rw, cr] : nc_star(pair.second).terms())
                out.add(GapPair{lw, rw}, c * cl * cr);
    return out;
}

}  // namespace

VerifyReport verify_coalgebra_maps(int n_max, const std::string& mode) {
    VerifyReport rep{"coalgebra-maps", mode, n_max, 0, {}};
    for (int n = 1; n <= n_max; ++n) {
        for (const Partition& p : enumerate_noncrossing_partitions(n)) {
            ++rep.cases_checked;
            // Reduced coproduct against the closure fibre sum.
            GapTensor lhs;
            for (const auto& [q, c] : nc_star(p).terms())
                lhs.add_scaled(gap_coproduct(Monomial::of(q)), c);
            if (!(lhs == nc_star_tensor(gap_coproduct(Monomial::of(p)))))
                rep.failures.push_back({describe(p), "nc-star-coproduct"});
            GapTensor lhs_prec;
            for (const auto& [q, c] : nc_star(p).terms())
                lhs_prec.add_scaled(gap_coproduct_prec(Monomial::of(q)), c);
            if (!(lhs_prec == nc_star_tensor(gap_coproduct_prec(Monomial::of(p)))))
                rep.failures.push_back({describe(p), "nc-star-prec"});
            GapTensor lhs_succ;
            for (const auto& [q, c] : nc_star(p).terms())
                lhs_succ.add_scaled(gap_coproduct_succ(Monomial::of(q)), c);
            if (!(lhs_succ == nc_star_tensor(gap_coproduct_succ(Monomial::of(p)))))
                rep.failures.push_back({describe(p), "nc-star-succ"});
        }
    }
    for (bool nc : modes_of(mode)) {
        const char* tagname = nc ? "nc" : "sp";
        for (int n = 1; n <= n_max; ++n) {
            for (const Partition& p : degree_basis(n, nc)) {
                for (const Partition& q : enumerate_coarsenings(p, nc)) {
                    ++rep.cases_checked;
                    LatticeInterval iv(p, q);
                    // Fibre map is a coalgebra homomorphism out of the
                    // opposite lattice coalgebra.
                    BlockTensor lhs;
                    for (const auto& [pair, c] : lattice_coproduct(iv, nc).terms())
                        lhs.add(BlockPair{interval_fibre(pair.first), interval_fibre(pair.second)}, c);
                    if (!(lhs == block_coproduct(interval_fibre(iv), nc)))
                        rep.failures.push_back({describe(p) + " <= " + describe(q),
                                                std::string("fibre-coalgebra[") + tagname + "]"});
                    // Interval splitting along the blocks of the top element.
                    CMonomial split = CMonomial::unit();
                    for (const auto& tau : q.blocks()) {
                        Partition pi = restrict_to(p, tau);
                        split = split.mul(interval_fibre(
                            LatticeInterval(pi, Partition::coarsest(static_cast<int>(tau.size())))));
                    }
                    if (!(split == interval_fibre(iv)))
                        rep.failures.push_back({describe(p) + " <= " + describe(q),
                                                std::string("fibre-splitting[") + tagname + "]"});
                }
            }
        }
    }
    return rep;
}

VerifyReport verify_operads(int n_max, const std::string& mode) {
    VerifyReport rep{"operads", mode, n_max, 0, {}};
    for (bool nc : modes_of(mode)) {
        const char* tagname = nc ? "nc" : "sp";
        std::vector<std::vector<Partition>> basis(static_cast<std::size_t>(n_max) + 1);
        for (int d = 0; d <= n_max; ++d) basis[static_cast<std::size_t>(d)] = degree_basis(d, nc);

        // Gap operad: unit axioms.
        for (int d = 0; d <= n_max; ++d)
            for (const Partition& p : basis[static_cast<std::size_t>(d)]) {
                ++rep.cases_checked;
                bool ok = compose_partial(Partition(), 1, p) == p;
                for (int i = 1; i <= gap_arity(p); ++i)
                    ok = ok && compose_partial(p, i, Partition()) == p;
                std::vector<Partition> units(static_cast<std::size_t>(gap_arity(p)));
                ok = ok && compose_full(p, units) == p;
                if (!ok) rep.failures.push_back({describe(p), std::string("gap-unit[") + tagname + "]"});
            }

        // Gap operad: sequential and parallel associativity, plus noncrossing
        // stability in nc mode.
        for (int a = 0; a <= n_max; ++a)
            for (int b = 0; a + b <= n_max; ++b)
                for (int c = 0; a + b + c <= n_max; ++c)
                    for (const Partition& p : basis[static_cast<std::size_t>(a)])
                        for (const Partition& q : basis[static_cast<std::size_t>(b)])
                            for (const Partition& r : basis[static_cast<std::size_t>(c)]) {
                                ++rep.cases_checked;
                                bool ok = true;
                                for (int i = 1; i <= gap_arity(p) && ok; ++i) {
                                    Partition pq = compose_partial(p, i, q);
                                    if (nc && !is_noncrossing(pq)) { ok = false; break; }
                                    for (int j = 1; j <= gap_arity(q) && ok; ++j)
                                        ok = compose_partial(pq, i - 1 + j, r) ==
                                             compose_partial(p, i, compose_partial(q, j, r));
                                    for (int j = i + 1; j <= gap_arity(p) && ok; ++j)
                                        ok = compose_partial(pq, j + q.degree(), r) ==
                                             compose_partial(compose_partial(p, j, r), i, q);
                                }
                                if (!ok)
                                    rep.failures.push_back({describe(p) + " ; " + describe(q) + " ; " + describe(r),
                                                            std::string("gap-associativity[") + tagname + "]"});
                            }

        // Block operad: units, typed associativity, equivariance.
        int block_max = std::min(n_max, 5);
        std::vector<std::vector<Composition>> comps(static_cast<std::size_t>(block_max) + 1);
        for (int d = 1; d <= block_max; ++d)
            for (const Partition& p : basis[static_cast<std::size_t>(d)]) {
                std::vector<int> perm(static_cast<std::size_t>(p.block_count()));
                for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
                do {
                    comps[static_cast<std::size_t>(d)].push_back(Composition(p, perm));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }

        auto input_tuples = [&](const Composition& c0) {
            std::vector<std::vector<Composition>> tuples;
            std::vector<Composition> cur;
            auto rec = [&](auto&& self, int slot) -> void {
                if (slot == c0.block_count()) {
                    tuples.push_back(cur);
                    return;
                }
                int size = static_cast<int>(c0.slot_block(slot).size());
                for (const Composition& q : comps[static_cast<std::size_t>(size)]) {
                    cur.push_back(q);
                    self(self, slot + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
            return tuples;
        };

        for (int d = 1; d <= block_max; ++d)
            for (const Composition& c0 : comps[static_cast<std::size_t>(d)]) {
                // Unit axioms.
                ++rep.cases_checked;
                std::vector<Composition> ids;
                for (int j = 0; j < c0.block_count(); ++j)
                    ids.push_back(Composition(Partition::coarsest(static_cast<int>(c0.slot_block(j).size())), {0}));
                bool ok = block_substitute(c0, ids) == c0;
                Composition idn(Partition::coarsest(c0.degree()), {0});
                ok = ok && block_substitute(idn, {c0}) == c0;
                if (!ok) rep.failures.push_back({describe(c0.underlying()), std::string("block-unit[") + tagname + "]"});

                for (const auto& qs : input_tuples(c0)) {
                    Composition mid = block_substitute(c0, qs);
                    ++rep.cases_checked;
                    std::vector<Composition> flat_inputs;
                    bool assoc_ok = true;
                    auto rec2 = [&](auto&& self, int slot) -> void {
                        if (!assoc_ok) return;
                        if (slot == mid.block_count()) {
                            // Compose in two orders.
                            Composition lhs = block_substitute(mid, flat_inputs);
                            std::vector<Composition> inner;
                            std::size_t offset = 0;
                            for (const Composition& q : qs) {
                                std::vector<Composition> part(flat_inputs.begin() + static_cast<std::ptrdiff_t>(offset),
                                                              flat_inputs.begin() + static_cast<std::ptrdiff_t>(offset + static_cast<std::size_t>(q.block_count())));
                                inner.push_back(block_substitute(q, part));
                                offset += static_cast<std::size_t>(q.block_count());
                            }
                            Composition rhs = block_substitute(c0, inner);
                            if (!(lhs == rhs)) assoc_ok = false;
                            return;
                        }
                        int size = static_cast<int>(mid.slot_block(slot).size());
                        for (const Composition& rcomp : comps[static_cast<std::size_t>(size)]) {
                            flat_inputs.push_back(rcomp);
                            self(self, slot + 1);
                            flat_inputs.pop_back();
                        }
                    };
                    rec2(rec2, 0);
                    if (!assoc_ok)
                        rep.failures.push_back({describe(c0.underlying()), std::string("block-associativity[") + tagname + "]"});
                }

                // Equivariance: renumbering inputs along sigma matches
                // renumbering the composite along the induced permutation.
                if (c0.block_count() >= 2) {
                    std::vector<int> sigma(static_cast<std::size_t>(c0.block_count()));
                    for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
                    do {
                        for (const auto& qs : input_tuples(c0)) {
                            ++rep.cases_checked;
                            Composition lhs_outer = sigma_action(c0, sigma);
                            std::vector<Composition> permuted;
                            for (std::size_t j = 0; j < sigma.size(); ++j)
                                permuted.push_back(qs[static_cast<std::size_t>(sigma[j])]);
                            Composition lhs = block_substitute(lhs_outer, permuted);
                            Composition base = block_substitute(c0, qs);
                            // Induced permutation moves whole slot groups.
                            std::vector<int> induced;
                            std::vector<int> offsets(sigma.size() + 1, 0);
                            for (std::size_t j = 0; j < sigma.size(); ++j)
                                offsets[j + 1] = offsets[j] + qs[j].block_count();
                            for (std::size_t j = 0; j < sigma.size(); ++j)
                                for (int t = 0; t < qs[static_cast<std::size_t>(sigma[j])].block_count(); ++t)
                                    induced.push_back(offsets[static_cast<std::size_t>(sigma[j])] + t);
                            Composition rhs = sigma_action(base, induced);
                            if (!(lhs == rhs)) {
                                rep.failures.push_back({describe(c0.underlying()), std::string("block-equivariance[") + tagname + "]"});
                                break;
                            }
                        }
                    } while (std::next_permutation(sigma.begin(), sigma.end()));
                }
            }
    }

    // Generator relation for the one-block corollas.
    for (int m = 2; m <= 8; ++m)
        for (int n = 2; n <= 8; ++n) {
            ++rep.cases_checked;
            if (!check_corolla_relation(m, n))
                rep.failures.push_back({"p_" + std::to_string(m) + ", p_" + std::to_string(n), "corolla-relation"});
        }
    return rep;
}

bool check_comodule_interchange(const Monomial& w, bool noncrossing_mode) {
    return interchange_lhs(w, noncrossing_mode, &gap_coproduct_full) ==
           interchange_rhs(w, noncrossing_mode, &gap_coproduct_full);
}

bool check_unshuffle_interchange(const Monomial& w, bool noncrossing_mode) {
    return interchange_lhs(w, noncrossing_mode, &gap_coproduct_prec) ==
               interchange_rhs(w, noncrossing_mode, &gap_coproduct_prec) &&
           interchange_lhs(w, noncrossing_mode, &gap_coproduct_succ) ==
               interchange_rhs(w, noncrossing_mode, &gap_coproduct_succ);
}

VerifyReport run_verify_suite(const std::string& suite, int n_max, const std::string& mode) {
    if (suite == "comodule") return verify_comodule_bialgebra(n_max, mode);
    if (suite == "unshuffle") return verify_unshuffle_comodule(n_max, mode);
    if (suite == "coalgebra-maps") return verify_coalgebra_maps(n_max, mode);
    if (suite == "operads") return verify_operads(n_max, mode);
    fail(errc::invalid_argument, "unknown verify suite '" + suite + "'");
}

}  // namespace ckit
