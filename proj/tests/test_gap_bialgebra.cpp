#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cumulantkit/gap_bialgebra.hpp"

using namespace ckit;

namespace {

Partition P(std::vector<std::vector<int>> blocks) {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return Partition::of_blocks(n, std::move(blocks));
}

Monomial W(std::vector<Partition> fs) { return Monomial(std::move(fs)); }

std::vector<Monomial> words_up_to(int n_max, bool nc) {
    std::vector<std::vector<Partition>> by_degree(static_cast<std::size_t>(n_max) + 1);
    for (int d = 1; d <= n_max; ++d)
        by_degree[static_cast<std::size_t>(d)] =
            nc ? enumerate_noncrossing_partitions(d) : enumerate_set_partitions(d);
    std::vector<Monomial> out{Monomial::unit()};
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (!cur.empty()) out.push_back(Monomial(cur));
        for (int d = 1; d <= rem; ++d)
            for (const Partition& p : by_degree[static_cast<std::size_t>(d)]) {
                cur.push_back(p);
                self(self, rem - d);
                cur.pop_back();
            }
    };
    rec(rec, n_max);
    return out;
}

GapTensor tensor_of(std::vector<std::pair<GapPair, int>> terms) {
    GapTensor t;
    for (auto& [k, c] : terms) t.add(k, Rational(c));
    return t;
}

std::pair<int, int> bidegree(const Monomial& m) { return {m.total_blocks(), m.total_degree()}; }

}  // namespace

TEST_CASE("unreduced coproduct of a coarsest partition is skew-primitive") {
    Partition i3 = Partition::coarsest(3);
    GapTensor expected = tensor_of({
        {{Monomial::of(i3), W({Partition(), Partition(), Partition(), Partition()})}, 1},
        {{Monomial::of(Partition()), Monomial::of(i3)}, 1},
    });
    CHECK(gap_coproduct_full(Monomial::of(i3)) == expected);
}

TEST_CASE("unreduced coproduct of the empty partition") {
    GapTensor expected = tensor_of({
        {{Monomial::of(Partition()), Monomial::of(Partition())}, 1},
    });
    CHECK(gap_coproduct_full(Monomial::of(Partition())) == expected);
}

TEST_CASE("the lowerset {1,2,5} term of the degree-5 sticks coproduct") {
    Partition j5 = Partition::finest(5);
    GapTensor t = gap_coproduct_full(Monomial::of(j5));
    GapPair key{Monomial::of(Partition::finest(3)),
                W({Partition(), Partition(), Partition::finest(2), Partition()})};
    CHECK(t.coefficient(key) == Rational(1));
}

TEST_CASE("reduced coproducts") {
    Partition i4 = Partition::coarsest(4);
    CHECK(gap_coproduct(Monomial::of(i4)) ==
          tensor_of({{{Monomial::of(i4), Monomial::unit()}, 1},
                     {{Monomial::unit(), Monomial::of(i4)}, 1}}));
    Partition nested = P({{1, 3}, {2}});
    CHECK(gap_coproduct(Monomial::of(nested)) ==
          tensor_of({{{Monomial::of(nested), Monomial::unit()}, 1},
                     {{Monomial::unit(), Monomial::of(nested)}, 1},
                     {{Monomial::of(P({{1, 2}})), Monomial::of(P({{1}}))}, 1}}));
    CHECK(gap_coproduct(Monomial::unit()) ==
          tensor_of({{{Monomial::unit(), Monomial::unit()}, 1}}));
}

TEST_CASE("quotient consistency: dropping empties in the unreduced coproduct") {
    for (const Monomial& m : words_up_to(5, false)) {
        GapTensor reduced;
        for (const auto& [pair, c] : gap_coproduct_full(m).terms())
            reduced.add(GapPair{pair.first.reduced(), pair.second.reduced()}, c);
        CHECK(reduced == gap_coproduct(m));
    }
}

TEST_CASE("unshuffle halves") {
    Partition i5 = Partition::coarsest(5);
    CHECK(gap_coproduct_prec(Monomial::of(i5)) ==
          tensor_of({{{Monomial::of(i5), Monomial::unit()}, 1}}));
    CHECK(gap_coproduct_succ(Monomial::of(i5)) ==
          tensor_of({{{Monomial::unit(), Monomial::of(i5)}, 1}}));
    Partition nested = P({{1, 3}, {2}});
    CHECK(gap_coproduct_prec(Monomial::of(nested)) ==
          tensor_of({{{Monomial::of(nested), Monomial::unit()}, 1},
                     {{Monomial::of(P({{1, 2}})), Monomial::of(P({{1}}))}, 1}}));
    CHECK(gap_coproduct_succ(Monomial::of(nested)) ==
          tensor_of({{{Monomial::unit(), Monomial::of(nested)}, 1}}));
    CHECK_THROWS_AS(gap_coproduct_prec(Monomial::unit()), error);
    CHECK_THROWS_AS(gap_coproduct_succ(Monomial::unit()), error);
}

TEST_CASE("halves sum to the coproduct on the augmentation ideal") {
    for (const Monomial& m : words_up_to(5, false)) {
        if (m.is_unit()) continue;
        CHECK(gap_coproduct_prec(m) + gap_coproduct_succ(m) == gap_coproduct(m));
    }
}

TEST_CASE("coassociativity, both flavors, all words to total degree 5") {
    for (bool nc : {true, false}) {
        for (const Monomial& m : words_up_to(5, nc)) {
            CHECK(gap_split_left(gap_coproduct(m), &gap_coproduct) ==
                  gap_split_right(gap_coproduct(m), &gap_coproduct));
            CHECK(gap_split_left(gap_coproduct_full(m), &gap_coproduct_full) ==
                  gap_split_right(gap_coproduct_full(m), &gap_coproduct_full));
        }
    }
}

TEST_CASE("multiplicativity of the coproduct") {
    auto words = words_up_to(3, false);
    for (const Monomial& a : words)
        for (const Monomial& b : words) {
            if (a.total_degree() + b.total_degree() > 5) continue;
            GapTensor lhs = gap_coproduct(a.concat(b));
            GapTensor rhs;
            for (const auto& [pa, ca] : gap_coproduct(a).terms())
                for (const auto& [pb, cb] : gap_coproduct(b).terms())
                    rhs.add(GapPair{pa.first.concat(pb.first), pa.second.concat(pb.second)},
                            ca * cb);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("co-shuffle relations on all words of bounded degree") {
    for (bool nc : {true, false}) {
        int bound = nc ? 5 : 4;
        for (const Monomial& m : words_up_to(bound, nc)) {
            if (m.is_unit()) continue;
            CHECK(gap_split_left(gap_coproduct_prec(m), &gap_coproduct_prec) ==
                  gap_split_right(gap_coproduct_prec(m), &gap_coproduct));
            CHECK(gap_split_left(gap_coproduct_prec(m), &gap_coproduct_succ) ==
                  gap_split_right(gap_coproduct_succ(m), &gap_coproduct_prec));
            CHECK(gap_split_left(gap_coproduct_succ(m), &gap_coproduct) ==
                  gap_split_right(gap_coproduct_succ(m), &gap_coproduct_succ));
        }
    }
}

TEST_CASE("product compatibility of the unshuffle halves") {
    auto words = words_up_to(3, false);
    for (const Monomial& x : words)
        for (const Monomial& y : words) {
            if (x.is_unit() || y.is_unit()) continue;
            if (x.total_degree() + y.total_degree() > 5) continue;
            // Reduced Sweedler parts.
            GapTensor xp = gap_coproduct_prec(x);
            xp.add(GapPair{x, Monomial::unit()}, Rational(-1));
            GapTensor xs = gap_coproduct_succ(x);
            xs.add(GapPair{Monomial::unit(), x}, Rational(-1));
            GapTensor yr = gap_coproduct(y);
            yr.add(GapPair{y, Monomial::unit()}, Rational(-1));
            yr.add(GapPair{Monomial::unit(), y}, Rational(-1));

            GapTensor prec_expected;
            prec_expected.add(GapPair{x.concat(y), Monomial::unit()}, Rational(1));
            prec_expected.add(GapPair{x, y}, Rational(1));
            for (const auto& [py, cy] : yr.terms())
                prec_expected.add(GapPair{x.concat(py.first), py.second}, cy);
            for (const auto& [px, cx] : xp.terms()) {
                prec_expected.add(GapPair{px.first.concat(y), px.second}, cx);
                prec_expected.add(GapPair{px.first, px.second.concat(y)}, cx);
                for (const auto& [py, cy] : yr.terms())
                    prec_expected.add(
                        GapPair{px.first.concat(py.first), px.second.concat(py.second)}, cx * cy);
            }
            CHECK(gap_coproduct_prec(x.concat(y)) == prec_expected);

            GapTensor succ_expected;
            succ_expected.add(GapPair{Monomial::unit(), x.concat(y)}, Rational(1));
            succ_expected.add(GapPair{y, x}, Rational(1));
            for (const auto& [py, cy] : yr.terms())
                succ_expected.add(GapPair{py.first, x.concat(py.second)}, cy);
            for (const auto& [px, cx] : xs.terms()) {
                succ_expected.add(GapPair{px.first.concat(y), px.second}, cx);
                succ_expected.add(GapPair{px.first, px.second.concat(y)}, cx);
                for (const auto& [py, cy] : yr.terms())
                    succ_expected.add(
                        GapPair{px.first.concat(py.first), px.second.concat(py.second)}, cx * cy);
            }
            CHECK(gap_coproduct_succ(x.concat(y)) == succ_expected);
        }
}

TEST_CASE("sticks coproducts match the binomial closed formulas") {
    // The coefficient of J_m (x) J_{a_1}...J_{a_l} in the coproduct of J_n
    // counts the placements of the l runs into the gaps of the lowerset:
    // C(m+1, l) for the full coproduct and C(m, l) for the prec half (the
    // leading gap is then unavailable).
    for (int n = 1; n <= 6; ++n) {
        Monomial jn = Monomial::of(Partition::finest(n));
        GapTensor full = gap_coproduct(jn);
        GapTensor prec = gap_coproduct_prec(jn);
        Rational full_total(0), prec_total(0);
        std::vector<int> runs;
        auto walk = [&](auto&& self, int remaining) -> void {
            int m = n - 0;
            for (int a : runs) m -= a;
            int l = static_cast<int>(runs.size());
            std::vector<Partition> word;
            for (int a : runs) word.push_back(Partition::finest(a));
            GapPair key{m == 0 ? Monomial::unit() : Monomial::of(Partition::finest(m)),
                        Monomial(word)};
            CHECK(full.coefficient(key) == Rational(binomial(m + 1, l)));
            CHECK(prec.coefficient(key) == Rational(binomial(m, l)));
            full_total += Rational(binomial(m + 1, l));
            prec_total += Rational(binomial(m, l));
            for (int a = 1; a <= remaining; ++a) {
                runs.push_back(a);
                self(self, remaining - a);
                runs.pop_back();
            }
        };
        walk(walk, n);
        // The formulas exhaust both tensors.
        Rational full_sum(0), prec_sum(0);
        for (const auto& [pair, c] : full.terms()) full_sum += c;
        for (const auto& [pair, c] : prec.terms()) prec_sum += c;
        CHECK(full_sum == full_total);
        CHECK(prec_sum == prec_total);
    }
}

TEST_CASE("sticks generate a sub-bialgebra") {
    auto all_sticks = [](const Monomial& m) {
        for (const Partition& f : m.factors())
            if (f.block_count() != f.degree()) return false;
        return true;
    };
    for (int n = 1; n <= 6; ++n) {
        Monomial m = Monomial::of(Partition::finest(n));
        for (const auto& [pair, c] : gap_coproduct(m).terms()) {
            CHECK(all_sticks(pair.first));
            CHECK(all_sticks(pair.second));
        }
    }
}

TEST_CASE("coproduct terms preserve the bidegree") {
    for (const Monomial& m : words_up_to(5, false)) {
        auto [k, n] = bidegree(m);
        for (const auto& [pair, c] : gap_coproduct(m).terms()) {
            auto [kl, nl] = bidegree(pair.first);
            auto [kr, nr] = bidegree(pair.second);
            CHECK(kl + kr == k);
            CHECK(nl + nr == n);
        }
    }
}

TEST_CASE("counit laws") {
    CHECK(gap_counit(Monomial::unit()) == Rational(1));
    CHECK(gap_counit(Monomial::of(Partition::coarsest(2))) == Rational(0));
    CHECK(gap_counit(W({Partition(), Partition()})) == Rational(1));
    for (const Monomial& m : words_up_to(5, false)) {
        LinComb<Monomial> left, right;
        for (const auto& [pair, c] : gap_coproduct(m).terms()) {
            left.add(pair.second, c * gap_counit(pair.first));
            right.add(pair.first, c * gap_counit(pair.second));
        }
        CHECK(left == LinComb<Monomial>::single(m));
        CHECK(right == LinComb<Monomial>::single(m));
    }
}

TEST_CASE("closure fibre sum") {
    for (int n = 1; n <= 5; ++n)
        CHECK(nc_star(Partition::finest(n)) == LinComb<Partition>::single(Partition::finest(n)));
    Partition i4 = Partition::coarsest(4);
    LinComb<Partition> expected;
    expected.add(i4, Rational(1));
    expected.add(P({{1, 3}, {2, 4}}), Rational(1));
    CHECK(nc_star(i4) == expected);
    CHECK_THROWS_AS(nc_star(P({{1, 3}, {2, 4}})), error);
    // The fibres over all closures partition the set partitions.
    for (int n = 0; n <= 6; ++n) {
        std::size_t total = 0;
        for (const Partition& p : enumerate_noncrossing_partitions(n))
            total += nc_star(p).size();
        CHECK(total == enumerate_set_partitions(n).size());
    }
}

TEST_CASE("closure fibre sum is a coalgebra map, degree <= 5") {
    auto apply_to_tensor = [](const GapTensor& t) {
        GapTensor out;
        for (const auto& [pair, c] : t.terms())
            for (const auto& [lw, cl] : nc_star(pair.first).terms())
                for (const auto& [rw, cr] : nc_star(pair.second).terms())
                    out.add(GapPair{lw, rw}, c * cl * cr);
        return out;
    };
    for (int n = 1; n <= 5; ++n)
        for (const Partition& p : enumerate_noncrossing_partitions(n)) {
            GapTensor lhs;
            for (const auto& [q, c] : nc_star(p).terms())
                lhs.add_scaled(gap_coproduct(Monomial::of(q)), c);
            CHECK(lhs == apply_to_tensor(gap_coproduct(Monomial::of(p))));
            GapTensor lhs_prec;
            for (const auto& [q, c] : nc_star(p).terms())
                lhs_prec.add_scaled(gap_coproduct_prec(Monomial::of(q)), c);
            CHECK(lhs_prec == apply_to_tensor(gap_coproduct_prec(Monomial::of(p))));
            GapTensor lhs_succ;
            for (const auto& [q, c] : nc_star(p).terms())
                lhs_succ.add_scaled(gap_coproduct_succ(Monomial::of(q)), c);
            CHECK(lhs_succ == apply_to_tensor(gap_coproduct_succ(Monomial::of(p))));
        }
}
