#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cumulantkit/characters.hpp"
#include "cumulantkit/moments.hpp"
#include "helpers.hpp"

using namespace ckit;
using test::RationalSource;

namespace {

Sequence random_sequence(unsigned long seed, int n) {
    RationalSource src(seed);
    Sequence s;
    for (int i = 0; i < n; ++i) s.values.push_back(src.rational());
    return s;
}

Polynomial::Exponents exps(std::vector<int> e) { return e; }

}  // namespace

TEST_CASE("free moment polynomials match the worked table") {
    Polynomial m2 = symbolic_moment(Flavor::free_probability, 2);
    CHECK(m2.str("k") == "k1^2 + k2");
    Polynomial m3 = symbolic_moment(Flavor::free_probability, 3);
    CHECK(m3.str("k") == "k1^3 + 3*k1*k2 + k3");
    Polynomial m4 = symbolic_moment(Flavor::free_probability, 4);
    CHECK(m4.str("k") == "k1^4 + 6*k1^2*k2 + 4*k1*k3 + 2*k2^2 + k4");
    CHECK(m4.coefficient(exps({0, 2})) == Rational(2));
}

TEST_CASE("classical moment polynomials") {
    CHECK(symbolic_moment(Flavor::classical, 2).str("c") == "c1^2 + c2");
    Polynomial m4 = symbolic_moment(Flavor::classical, 4);
    CHECK(m4.str("c") == "c1^4 + 6*c1^2*c2 + 4*c1*c3 + 3*c2^2 + c4");
    CHECK(m4.coefficient(exps({0, 2})) == Rational(3));
    // Free and classical agree through degree 3 and split at the pair-pair
    // coefficient in degree 4.
    for (int n = 1; n <= 3; ++n)
        CHECK(symbolic_moment(Flavor::classical, n) == symbolic_moment(Flavor::free_probability, n));
    CHECK(symbolic_moment(Flavor::classical, 4).coefficient(exps({0, 2})) !=
          symbolic_moment(Flavor::free_probability, 4).coefficient(exps({0, 2})));
}

TEST_CASE("free cumulant polynomials") {
    CHECK(symbolic_cumulant(Flavor::free_probability, 2).coefficient(exps({0, 1})) == Rational(1));
    CHECK(symbolic_cumulant(Flavor::free_probability, 2).coefficient(exps({2})) == Rational(-1));
    CHECK(symbolic_cumulant(Flavor::free_probability, 3).str("m") == "2*m1^3 - 3*m1*m2 + m3");
    // Moebius inversion fixes the quartic coefficients, in particular -5 on
    // the fourth power of the mean.
    Polynomial k4 = symbolic_cumulant(Flavor::free_probability, 4);
    CHECK(k4.coefficient(exps({0, 0, 0, 1})) == Rational(1));
    CHECK(k4.coefficient(exps({1, 0, 1})) == Rational(-4));
    CHECK(k4.coefficient(exps({0, 2})) == Rational(-2));
    CHECK(k4.coefficient(exps({2, 1})) == Rational(10));
    CHECK(k4.coefficient(exps({4})) == Rational(-5));
}

TEST_CASE("boolean and monotone moment polynomials") {
    CHECK(symbolic_moment(Flavor::boolean_probability, 3).str("b") == "b1^3 + 2*b1*b2 + b3");
    Polynomial m3 = symbolic_moment(Flavor::monotone, 3);
    CHECK(m3.coefficient(exps({1, 1})) == Rational(5, 2));
    CHECK(m3.coefficient(exps({3})) == Rational(1));
    CHECK(symbolic_moment(Flavor::monotone, 2).str("h") == "h1^2 + h2");
    // Triangular elimination in the other direction.
    CHECK(symbolic_cumulant(Flavor::boolean_probability, 3).str("m") == "m1^3 - 2*m1*m2 + m3");
    CHECK(symbolic_cumulant(Flavor::monotone, 3).str("m") == "3/2*m1^3 - 5/2*m1*m2 + m3");
}

TEST_CASE("numeric free transforms agree with the polynomials and round-trip") {
    Sequence k = random_sequence(5, 7);
    Sequence m = free_moments(k);
    // Evaluate the symbolic polynomial on the same data.
    for (int n = 1; n <= 7; ++n) {
        Rational expected(0);
        for (const auto& [e, c] : symbolic_moment(Flavor::free_probability, n).terms()) {
            Rational term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int rep = 0; rep < e[i]; ++rep) term *= k.at(static_cast<int>(i) + 1);
            expected += term;
        }
        CHECK(m.at(n) == expected);
    }
    CHECK(free_cumulants(m) == k);
    CHECK(free_moments(free_cumulants(m)) == m);
}

TEST_CASE("numeric classical transforms round-trip") {
    Sequence c = random_sequence(9, 6);
    Sequence m = classical_moments(c);
    CHECK(classical_cumulants(m) == c);
    // m2 = c1^2 + c2 directly.
    CHECK(m.at(2) == c.at(1) * c.at(1) + c.at(2));
}

TEST_CASE("boolean and monotone transforms round-trip") {
    Sequence b = random_sequence(13, 6);
    Sequence mb = boolean_moments(b);
    CHECK(cumulants_from_moments(Flavor::boolean_probability, mb) == b);
    CHECK(mb.at(3) == b.at(3) + Rational(2) * b.at(1) * b.at(2) + b.at(1) * b.at(1) * b.at(1));
    Sequence h = random_sequence(17, 6);
    Sequence mh = monotone_moments(h);
    CHECK(cumulants_from_moments(Flavor::monotone, mh) == h);
    CHECK(mh.at(2) == h.at(2) + h.at(1) * h.at(1));
}

TEST_CASE("free cumulants from classical ones") {
    Sequence c = random_sequence(19, 6);
    Sequence k = free_from_classical(c);
    CHECK(k.at(1) == c.at(1));
    CHECK(k.at(2) == c.at(2));
    CHECK(k.at(3) == c.at(3));
    // Only the crossing pair partition contributes at degree 4.
    CHECK(k.at(4) == c.at(4) + c.at(2) * c.at(2));
    // The composite pipeline reproduces the classical moments.
    CHECK(free_moments(free_from_classical(c)) == classical_moments(c));
}

TEST_CASE("monotone weights lie in (0,1] and sum like the heap series") {
    for (int n = 1; n <= 6; ++n) {
        Rational total(0);
        for (const Partition& p : enumerate_noncrossing_partitions(n)) {
            Rational w = moment_weight(Flavor::monotone, p);
            CHECK(w > Rational(0));
            CHECK(w <= Rational(1));
            CHECK((w == Rational(1)) ==
                  (heap_order_count(p) == factorial(p.block_count())));
            total += w;
        }
        Sequence ones;
        for (int i = 0; i < n; ++i) ones.values.push_back(Rational(1));
        CHECK(monotone_moments(ones).at(n) == total);
        // Same sum through the exponential series.
        LinearForm expo = exp_star(unit_infinitesimal(Algebra::gap_nc, 6), 6);
        Rational via_series(0);
        for (const Partition& p : enumerate_noncrossing_partitions(n))
            via_series += expo(Monomial::of(p));
        CHECK(via_series == total);
    }
}

TEST_CASE("the half-shuffle lift of the classical relations") {
    // Only singleton cumulants: the lift counts nothing beyond sticks.
    Sequence delta;
    delta.values = {Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK(shuffle_lift_check(delta, 4));
    Sequence c = random_sequence(23, 4);
    CHECK(shuffle_lift_check(c, 4));
}

TEST_CASE("sequence access") {
    Sequence s = random_sequence(1, 3);
    CHECK_THROWS_AS(s.at(0), error);
    CHECK_THROWS_AS(s.at(4), error);
}
