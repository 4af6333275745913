#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <memory>
#include <thread>

#include "cumulantkit/block_bialgebra.hpp"
#include "cumulantkit/characters.hpp"
#include "cumulantkit/comodule.hpp"
#include "helpers.hpp"

using namespace ckit;
using test::P;
using test::RationalSource;
using test::words_up_to;

namespace {

// Character/infinitesimal with tabulated random generator values.
LinearForm random_character(Algebra tag, int max_degree, unsigned long seed, bool invertible) {
    auto table = std::make_shared<std::map<Partition, Rational>>();
    RationalSource src(seed);
    bool nc = is_noncrossing_mode(tag);
    for (int d = 1; d <= max_degree; ++d)
        for (const Partition& p :
             nc ? enumerate_noncrossing_partitions(d) : enumerate_set_partitions(d))
            (*table)[p] = (invertible && p.block_count() == 1) ? src.nonzero_rational()
                                                               : src.rational();
    return LinearForm::character(tag, max_degree,
                                 [table](const Partition& p) { return table->at(p); });
}

LinearForm random_infinitesimal(Algebra tag, int max_degree, unsigned long seed) {
    auto table = std::make_shared<std::map<Partition, Rational>>();
    RationalSource src(seed);
    bool nc = is_noncrossing_mode(tag);
    for (int d = 1; d <= max_degree; ++d)
        for (const Partition& p :
             nc ? enumerate_noncrossing_partitions(d) : enumerate_set_partitions(d))
            (*table)[p] = src.rational();
    return LinearForm::infinitesimal(tag, max_degree,
                                     [table](const Partition& p) { return table->at(p); });
}

std::vector<Partition> all_nc_up_to(int n) {
    std::vector<Partition> out;
    for (int d = 1; d <= n; ++d)
        for (const Partition& p : enumerate_noncrossing_partitions(d)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("zeta, counit and convolution basics") {
    LinearForm z = zeta(Algebra::block_nc, 5);
    LinearForm eps = counit_form(Algebra::block_nc, 5);
    CHECK(z(Partition::finest(3)) == Rational(1));
    CHECK(eps(Partition::coarsest(4)) == Rational(1));
    CHECK(eps(Partition::finest(2)) == Rational(0));
    CHECK(convolve_block(z, z)(Partition::finest(2)) == Rational(2));
    LinearForm phi = random_character(Algebra::block_nc, 5, 11, false);
    for (int d = 1; d <= 5; ++d)
        for (const Partition& p : enumerate_noncrossing_partitions(d)) {
            CHECK(convolve_block(eps, phi)(p) == phi(p));
            CHECK(convolve_block(phi, eps)(p) == phi(p));
        }
}

TEST_CASE("convolution is associative and characters stay characters") {
    LinearForm a = random_character(Algebra::block_nc, 4, 3, false);
    LinearForm b = random_character(Algebra::block_nc, 4, 5, false);
    LinearForm c = random_character(Algebra::block_nc, 4, 7, false);
    LinearForm ab_c = convolve_block(convolve_block(a, b), c);
    LinearForm a_bc = convolve_block(a, convolve_block(b, c));
    for (int d = 1; d <= 4; ++d)
        for (const Partition& p : enumerate_noncrossing_partitions(d))
            CHECK(ab_c(p) == a_bc(p));
    // Generator-extended evaluation agrees with the coproduct expansion.
    LinearForm ab = convolve_block(a, b);
    for (const Monomial& w : words_up_to(4, true)) {
        CMonomial m(w.reduced().factors());
        Rational via_delta(0);
        for (const auto& [pair, coeff] : block_coproduct(m, true).terms())
            via_delta += coeff * a(pair.first) * b(pair.second);
        CHECK(ab(m) == via_delta);
    }
}

TEST_CASE("moebius values from the displayed table") {
    LinearForm mu = moebius(Algebra::block_nc, 4);
    for (int n = 1; n <= 4; ++n) CHECK(mu(Partition::coarsest(n)) == Rational(1));
    CHECK(mu(P({{1}, {2}})) == Rational(-1));
    CHECK(mu(P({{1, 3}, {2}})) == Rational(-1));
    CHECK(mu(P({{1}, {2, 3}})) == Rational(-1));
    CHECK(mu(P({{1, 2}, {3}})) == Rational(-1));
    CHECK(mu(P({{1}, {2, 3, 4}})) == Rational(-1));
    CHECK(mu(P({{1, 3, 4}, {2}})) == Rational(-1));
    CHECK(mu(P({{1, 2, 4}, {3}})) == Rational(-1));
    CHECK(mu(P({{1, 2, 3}, {4}})) == Rational(-1));
    CHECK(mu(P({{1}, {2}, {3}})) == Rational(2));
    CHECK(mu(P({{1, 2}, {3}, {4}})) == Rational(2));
    CHECK(mu(P({{1}, {2, 3}, {4}})) == Rational(2));
    CHECK(mu(P({{1}, {2}, {3, 4}})) == Rational(2));
    CHECK(mu(P({{1}, {2, 4}, {3}})) == Rational(1));
    CHECK(mu(P({{1, 3}, {2}, {4}})) == Rational(1));
    CHECK(mu(P({{1}, {2}, {3}, {4}})) == Rational(-5));
}

TEST_CASE("moebius inverts zeta in both modes") {
    for (Algebra tag : {Algebra::block_nc, Algebra::block_sp}) {
        LinearForm mu = moebius(tag, 5);
        LinearForm mu_via_inverse = convolution_inverse(zeta(tag, 5));
        LinearForm eps = counit_form(tag, 5);
        LinearForm left = convolve_block(zeta(tag, 5), mu);
        LinearForm right = convolve_block(mu, zeta(tag, 5));
        bool nc = is_noncrossing_mode(tag);
        for (int d = 1; d <= 5; ++d)
            for (const Partition& p :
                 nc ? enumerate_noncrossing_partitions(d) : enumerate_set_partitions(d)) {
                CHECK(mu(p) == mu_via_inverse(p));
                CHECK(left(p) == eps(p));
                CHECK(right(p) == eps(p));
            }
    }
}

TEST_CASE("convolution inverse is two-sided; invertibility needs nonzero coarsest values") {
    LinearForm phi = random_character(Algebra::block_nc, 5, 23, true);
    LinearForm inv = convolution_inverse(phi);
    LinearForm eps = counit_form(Algebra::block_nc, 5);
    LinearForm left = convolve_block(phi, inv);
    LinearForm right = convolve_block(inv, phi);
    for (int d = 1; d <= 5; ++d)
        for (const Partition& p : enumerate_noncrossing_partitions(d)) {
            CHECK(left(p) == eps(p));
            CHECK(right(p) == eps(p));
        }
    CHECK(convolution_inverse(eps)(Partition::finest(4)) == eps(Partition::finest(4)));
    // Vanishing on a coarsest partition blocks inversion at that degree.
    LinearForm bad = LinearForm::character(Algebra::block_nc, 4, [](const Partition& p) {
        return Rational(p == Partition::coarsest(2) ? 0 : 1);
    });
    LinearForm bad_inv = convolution_inverse(bad);
    CHECK(bad_inv(Partition::coarsest(1)) == Rational(1));
    CHECK_THROWS_AS(bad_inv(Partition::finest(2)), error);
}

TEST_CASE("truncation degree is a hard error") {
    LinearForm z = zeta(Algebra::block_nc, 3);
    CHECK_THROWS_AS(z(Partition::finest(4)), error);
    LinearForm p = psi_prec(2);
    CHECK_THROWS_AS(p(Monomial::of(Partition::coarsest(3))), error);
}

TEST_CASE("algebra mismatches are rejected") {
    CHECK_THROWS_AS(convolve_block(zeta(Algebra::block_nc, 3), zeta(Algebra::block_sp, 3)), error);
    CHECK_THROWS_AS(zeta(Algebra::gap_nc, 3), error);
    CHECK_THROWS_AS(convolve_block(psi_prec(3), psi_prec(3)), error);
    CHECK_THROWS_AS(coaction_act(psi_prec(3), zeta(Algebra::block_sp, 3)), error);
    LinearForm z = zeta(Algebra::block_nc, 3);
    CHECK_THROWS_AS(z(Monomial::of(Partition::coarsest(2))), error);
}

TEST_CASE("coaction action laws") {
    LinearForm alpha = random_character(Algebra::gap_nc, 4, 31, false);
    LinearForm phi = random_character(Algebra::block_nc, 4, 37, false);
    LinearForm psi = random_character(Algebra::block_nc, 4, 41, false);
    LinearForm eps_b = counit_form(Algebra::block_nc, 4);
    LinearForm fixed = coaction_act(alpha, eps_b);
    for (const Monomial& w : words_up_to(4, true)) CHECK(fixed(w) == alpha(w));
    // (alpha <- phi) <- psi = alpha <- (phi * psi).
    LinearForm lhs = coaction_act(coaction_act(alpha, phi), psi);
    LinearForm rhs = coaction_act(alpha, convolve_block(phi, psi));
    for (const Monomial& w : words_up_to(4, true)) CHECK(lhs(w) == rhs(w));
}

TEST_CASE("the kind shortcut of the coaction matches the generic expansion") {
    LinearForm alpha = random_infinitesimal(Algebra::gap_nc, 4, 43);
    LinearForm phi = random_character(Algebra::block_nc, 4, 47, false);
    LinearForm shortcut = coaction_act(alpha, phi);
    CHECK(shortcut.kind() == FormKind::infinitesimal);
    LinearForm generic = LinearForm::word_backed(
        Algebra::gap_nc, FormKind::generic, 4, [alpha, phi](const Monomial& m) {
            Rational acc(0);
            for (const auto& [pair, c] : rho(m, true).terms())
                acc += c * alpha(pair.first) * phi(pair.second);
            return acc;
        });
    for (const Monomial& w : words_up_to(4, true)) CHECK(shortcut(w) == generic(w));
}

TEST_CASE("theta bijection and the unit infinitesimal") {
    LinearForm e = unit_infinitesimal(Algebra::gap_nc, 5);
    LinearForm theta_e = theta(e);
    LinearForm eps_hat = hat(counit_form(Algebra::block_nc, 5));
    for (const Partition& p : all_nc_up_to(5)) {
        CHECK(theta_e(p) == eps_hat(p));
        CHECK(theta_e(p) == e(p));
    }
    LinearForm kappa = random_infinitesimal(Algebra::gap_nc, 5, 53);
    LinearForm back = theta_inv(theta(kappa));
    for (const Monomial& w : words_up_to(4, true)) CHECK(back(w) == kappa(w));
    LinearForm phi = random_character(Algebra::gap_nc, 5, 59, false);
    LinearForm forth = theta(theta_inv(phi));
    for (const Partition& p : all_nc_up_to(5)) CHECK(forth(p) == phi(p));
}

TEST_CASE("e is recovered by acting on the transported character") {
    LinearForm e = unit_infinitesimal(Algebra::gap_nc, 5);
    LinearForm kappa = random_infinitesimal(Algebra::gap_nc, 5, 61);
    LinearForm K = bar(theta(kappa));
    LinearForm recovered = coaction_act(e, K);
    for (const Monomial& w : words_up_to(5, true)) CHECK(recovered(w) == kappa(w));
}

TEST_CASE("half-shuffle unit conventions and the shuffle identities") {
    LinearForm eps = counit_form(Algebra::gap_nc, 4);
    LinearForm f = theta_inv(random_character(Algebra::gap_nc, 4, 67, false));
    for (const Monomial& w : words_up_to(4, true)) {
        if (w.is_unit()) continue;
        CHECK(half_shuffle_succ(eps, f)(w) == f(w));
        CHECK(half_shuffle_prec(eps, f)(w) == Rational(0));
        CHECK(half_shuffle_prec(f, eps)(w) == f(w));
        CHECK(half_shuffle_succ(f, eps)(w) == Rational(0));
    }
    LinearForm u = random_character(Algebra::gap_nc, 4, 71, false);
    LinearForm v = random_character(Algebra::gap_nc, 4, 73, false);
    LinearForm w3 = random_character(Algebra::gap_nc, 4, 79, false);
    LinearForm l1 = half_shuffle_prec(half_shuffle_prec(u, v), w3);
    LinearForm r1 = half_shuffle_prec(u, convolve_gap(v, w3));
    LinearForm l2 = half_shuffle_succ(u, half_shuffle_prec(v, w3));
    LinearForm r2 = half_shuffle_prec(half_shuffle_succ(u, v), w3);
    LinearForm l3 = half_shuffle_succ(u, half_shuffle_succ(v, w3));
    LinearForm r3 = half_shuffle_succ(convolve_gap(u, v), w3);
    for (const Monomial& m : words_up_to(4, true)) {
        if (m.is_unit()) continue;
        CHECK(half_shuffle_prec(u, v)(m) + half_shuffle_succ(u, v)(m) == convolve_gap(u, v)(m));
        CHECK(l1(m) == r1(m));
        CHECK(l2(m) == r2(m));
        CHECK(l3(m) == r3(m));
    }
}

TEST_CASE("fixpoint solutions satisfy their equations and are characters") {
    LinearForm kappa = random_infinitesimal(Algebra::gap_nc, 4, 83);
    LinearForm phi = solve_fixpoint_prec(kappa, 4);
    LinearForm eq = half_shuffle_prec(kappa, phi);
    LinearForm psi = solve_fixpoint_succ(kappa, 4);
    LinearForm eq2 = half_shuffle_succ(psi, kappa);
    for (const Monomial& m : words_up_to(4, true)) {
        Rational eps_m(m.is_unit() ? 1 : 0);
        CHECK(phi(m) == eps_m + eq(m));
        CHECK(psi(m) == eps_m + eq2(m));
    }
    LinearForm es = exp_star(kappa, 4);
    auto words = words_up_to(2, true);
    for (const Monomial& a : words)
        for (const Monomial& b : words) {
            if (a.total_degree() + b.total_degree() > 4) continue;
            CHECK(phi(a.concat(b)) == phi(a) * phi(b));
            CHECK(psi(a.concat(b)) == psi(a) * psi(b));
            CHECK(es(a.concat(b)) == es(a) * es(b));
        }
}

TEST_CASE("universal characters from the unit infinitesimal") {
    LinearForm e = unit_infinitesimal(Algebra::gap_nc, 6);
    LinearForm left = solve_fixpoint_prec(e, 6);
    LinearForm right = solve_fixpoint_succ(e, 6);
    LinearForm expo = exp_star(e, 6);
    LinearForm pp = psi_prec(6), ps = psi_succ(6), pst = psi_star(6);
    for (const Partition& p : all_nc_up_to(6)) {
        Monomial w = Monomial::of(p);
        CHECK(left(w) == pp(w));
        CHECK(right(w) == ps(w));
        CHECK(expo(w) == pst(w));
    }
    CHECK(pp(Partition::finest(4)) == Rational(1));
    CHECK(ps(ordinal_sum(Partition::coarsest(2), Partition::coarsest(3))) == Rational(1));
    CHECK(ps(P({{1, 3}, {2}})) == Rational(0));
    CHECK(pst(Partition::finest(5)) == Rational(1));
    CHECK(pst(P({{1, 3}, {2}})) == Rational(1, 2));
}

TEST_CASE("transport of the exponential bijections through the coaction") {
    LinearForm kappa = random_infinitesimal(Algebra::gap_nc, 4, 89);
    LinearForm K = bar(theta(kappa));
    LinearForm lhs_prec = solve_fixpoint_prec(kappa, 4);
    LinearForm rhs_prec = coaction_act(psi_prec(4), K);
    LinearForm lhs_succ = solve_fixpoint_succ(kappa, 4);
    LinearForm rhs_succ = coaction_act(psi_succ(4), K);
    LinearForm lhs_star = exp_star(kappa, 4);
    LinearForm rhs_star = coaction_act(psi_star(4), K);
    for (const Monomial& w : words_up_to(4, true)) {
        CHECK(lhs_prec(w) == rhs_prec(w));
        CHECK(lhs_succ(w) == rhs_succ(w));
        CHECK(lhs_star(w) == rhs_star(w));
    }
}

TEST_CASE("sticks-supported data: the fixpoint vanishes below the finest stratum") {
    // kappa supported on the finest partitions only.
    RationalSource src(97);
    auto values = std::make_shared<std::map<int, Rational>>();
    for (int m = 1; m <= 6; ++m) (*values)[m] = src.rational();
    LinearForm kappa = LinearForm::infinitesimal(Algebra::gap_nc, 6, [values](const Partition& p) {
        if (p.block_count() == p.degree()) return values->at(p.degree());
        return Rational(0);
    });
    LinearForm phi = solve_fixpoint_prec(kappa, 6);
    for (int n = 1; n <= 6; ++n) {
        Rational expected(0);
        for (const Partition& q : enumerate_noncrossing_partitions(n)) {
            Rational prod(1);
            for (const auto& b : q.blocks()) prod *= values->at(static_cast<int>(b.size()));
            expected += prod;
        }
        for (const Partition& p : enumerate_noncrossing_partitions(n)) {
            if (p.block_count() < n)
                CHECK(phi(Monomial::of(p)) == Rational(0));
            else
                CHECK(phi(Monomial::of(p)) == expected);
        }
    }
}

TEST_CASE("closed inverse of the left universal character") {
    for (int n = 1; n <= 6; ++n) {
        Integer cat = catalan_number(n - 1);
        Rational expected = Rational(n % 2 == 0 ? -cat : cat);
        CHECK(psi_prec_inverse_closed(Partition::finest(n)) == expected);
    }
    // The two pictured irreducible-component evaluations.
    CHECK(psi_prec_inverse_closed(P({{1, 6}, {2, 3}, {4, 5}, {7}})) == Rational(-2));
    CHECK(psi_prec_inverse_closed(P({{1, 4, 7}, {2, 3}, {5, 6}, {8}})) == Rational(-1));
    CHECK_THROWS_AS(psi_prec_inverse_closed(P({{1, 3}, {2, 4}})), error);
    LinearForm via_inverse = convolution_inverse(bar(psi_prec(6)));
    LinearForm mu = moebius(Algebra::block_nc, 6);
    for (const Partition& p : all_nc_up_to(6)) {
        Rational closed = psi_prec_inverse_closed(p);
        CHECK(closed == via_inverse(p));
        CHECK(closed == mu(p));
        CHECK(closed == lattice_moebius(p, Partition::coarsest(p.degree()), true));
    }
}

TEST_CASE("inverses of the universal maps, degree <= 5") {
    MixedInverseProducts mp = mixed_inverse_products(5);
    for (const Partition& p : all_nc_up_to(5)) {
        int k = p.block_count();
        Rational sign(k % 2 == 0 ? -1 : 1);
        CHECK(mp.succ_inverse(p) == (is_boolean(p) ? sign : Rational(0)));
        CHECK(mp.succ_inverse_star_prec(p) == Rational(is_irreducible(p) ? 1 : 0));
        CHECK(mp.prec_inverse_star_succ(p) == (is_irreducible(p) ? sign : Rational(0)));
    }
    CHECK(mp.succ_inverse_star_prec(P({{1, 3}, {2}})) == Rational(1));
    CHECK(mp.succ_inverse_star_prec(Partition::finest(2)) == Rational(0));
    CHECK(mp.prec_inverse_star_succ(Partition::coarsest(3)) == Rational(1));
}

TEST_CASE("catalan identity") {
    CHECK(catalan_lemma_check(1));
    // n = 4: -5 + 6 - 1 = 0.
    Integer n4 = -catalan_number(3) * binomial(4, 0) + catalan_number(2) * binomial(3, 1) -
                 catalan_number(1) * binomial(2, 2);
    CHECK(n4 == 0);
    CHECK(catalan_lemma_check(12));
}

TEST_CASE("memoized forms are safe under concurrent evaluation") {
    LinearForm mu = moebius(Algebra::block_nc, 5);
    Partition j5 = Partition::finest(5);
    Rational expected(catalan_number(4));  // mu(J_5) = +14
    std::vector<std::thread> threads;
    std::vector<Rational> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = mu(j5); });
    for (auto& th : threads) th.join();
    for (const Rational& r : results) CHECK(r == expected);
}
