#include "cumulantkit/moments.hpp"

#include "cumulantkit/characters.hpp"

namespace ckit {

const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::free_probability: return "free";
        case Flavor::classical: return "classical";
        case Flavor::boolean_probability: return "boolean";
        case Flavor::monotone: return "monotone";
    }
    return "?";
}

Flavor flavor_from_name(const std::string& name) {
    if (name == "free") return Flavor::free_probability;
    if (name == "classical") return Flavor::classical;
    if (name == "boolean") return Flavor::boolean_probability;
    if (name == "monotone") return Flavor::monotone;
    fail(errc::invalid_argument, "unknown flavor '" + name + "'");
}

const char* cumulant_variable(Flavor f) {
    switch (f) {
        case Flavor::free_probability: return "k";
        case Flavor::classical: return "c";
        case Flavor::boolean_probability: return "b";
        case Flavor::monotone: return "h";
    }
    return "?";
}

Rational moment_weight(Flavor f, const Partition& p) {
    switch (f) {
        case Flavor::classical:
            return Rational(1);
        case Flavor::free_probability:
            return Rational(is_noncrossing(p) ? 1 : 0);
        case Flavor::boolean_probability:
            return Rational(is_noncrossing(p) && is_boolean(p) ? 1 : 0);
        case Flavor::monotone:
            if (!is_noncrossing(p)) return Rational(0);
            return Rational(heap_order_count(p), factorial(p.block_count()));
    }
    return Rational(0);
}

namespace {

std::vector<Partition> summation_domain(Flavor f, int n) {
    return f == Flavor::classical ? enumerate_set_partitions(n)
                                  : enumerate_noncrossing_partitions(n);
}

Rational direct_moment(Flavor f, const Sequence& cum, int n) {
    Rational acc(0);
    for (const Partition& q : summation_domain(f, n)) {
        Rational w = moment_weight(f, q);
        if (w.is_zero()) continue;
        Rational prod(1);
        for (const auto& b : q.blocks()) prod *= cum.at(static_cast<int>(b.size()));
        acc += w * prod;
    }
    return acc;
}

void require_equal_routes(const Rational& a, const Rational& b, const char* what) {
    if (!(a == b))
        fail(errc::internal_inconsistency, std::string("route disagreement in ") + what);
}

// Block character supported on the finest partitions, with prescribed values.
LinearForm sticks_character(Algebra tag, int n, const Sequence& values) {
    return LinearForm::character(tag, n, [values](const Partition& p) {
        if (p.block_count() == p.degree()) return values.at(p.degree());
        return Rational(0);
    });
}

// Infinitesimal gap character supported on the coarsest partitions.
LinearForm coarsest_infinitesimal(Algebra tag, int n, const Sequence& values) {
    return LinearForm::infinitesimal(tag, n, [values](const Partition& p) {
        if (p.block_count() == 1) return values.at(p.degree());
        return Rational(0);
    });
}

}  // namespace

Sequence moments_from_cumulants(Flavor f, const Sequence& cum) {
    Sequence out;
    for (int n = 1; n <= cum.size(); ++n) out.values.push_back(direct_moment(f, cum, n));
    return out;
}

Sequence cumulants_from_moments(Flavor f, const Sequence& m) {
    // Triangular: the coarsest partition carries weight one, every other
    // summand only involves strictly smaller degrees.
    Sequence cum;
    for (int n = 1; n <= m.size(); ++n) {
        Rational acc = m.at(n);
        for (const Partition& q : summation_domain(f, n)) {
            if (q.block_count() == 1) continue;
            Rational w = moment_weight(f, q);
            if (w.is_zero()) continue;
            Rational prod(1);
            for (const auto& b : q.blocks()) prod *= cum.at(static_cast<int>(b.size()));
            acc -= w * prod;
        }
        cum.values.push_back(acc);
    }
    return cum;
}

Sequence free_moments(const Sequence& k) {
    int n = k.size();
    Sequence direct = moments_from_cumulants(Flavor::free_probability, k);
    // Route two: convolution of the all-ones character with the cumulant
    // character, evaluated on the finest partitions.
    LinearForm kappa_char = sticks_character(Algebra::block_nc, n, k);
    LinearForm conv = convolve_block(zeta(Algebra::block_nc, n), kappa_char);
    // Route three: the left half-shuffle fixpoint acted on by zeta.
    LinearForm kappa_inf = coarsest_infinitesimal(Algebra::gap_nc, n, k);
    LinearForm phi = solve_fixpoint_prec(kappa_inf, n);
    LinearForm acted = coaction_act(phi, zeta(Algebra::block_nc, n));
    for (int i = 1; i <= n; ++i) {
        Partition finest = Partition::finest(i);
        require_equal_routes(direct.at(i), conv(finest), "free moments (convolution route)");
        require_equal_routes(direct.at(i), acted(finest), "free moments (fixpoint route)");
    }
    return direct;
}

Sequence free_cumulants(const Sequence& m) {
    int n = m.size();
    Sequence triangular = cumulants_from_moments(Flavor::free_probability, m);
    LinearForm moment_char = sticks_character(Algebra::block_nc, n, m);
    LinearForm conv = convolve_block(moebius(Algebra::block_nc, n), moment_char);
    for (int i = 1; i <= n; ++i)
        require_equal_routes(triangular.at(i), conv(Partition::finest(i)),
                             "free cumulants (moebius route)");
    return triangular;
}

Sequence classical_moments(const Sequence& c) {
    int n = c.size();
    Sequence direct = moments_from_cumulants(Flavor::classical, c);
    LinearForm kappa_char = sticks_character(Algebra::block_sp, n, c);
    LinearForm conv = convolve_block(zeta(Algebra::block_sp, n), kappa_char);
    for (int i = 1; i <= n; ++i)
        require_equal_routes(direct.at(i), conv(Partition::finest(i)),
                             "classical moments (convolution route)");
    return direct;
}

Sequence classical_cumulants(const Sequence& m) {
    int n = m.size();
    Sequence triangular = cumulants_from_moments(Flavor::classical, m);
    LinearForm moment_char = sticks_character(Algebra::block_sp, n, m);
    LinearForm conv = convolve_block(moebius(Algebra::block_sp, n), moment_char);
    for (int i = 1; i <= n; ++i)
        require_equal_routes(triangular.at(i), conv(Partition::finest(i)),
                             "classical cumulants (moebius route)");
    return triangular;
}

Sequence boolean_moments(const Sequence& b) {
    int n = b.size();
    Sequence direct = moments_from_cumulants(Flavor::boolean_probability, b);
    // Character route: the boolean universal character acted on by the
    // cumulant data transported to the block side.
    LinearForm acted = coaction_act(psi_succ(n), sticks_character(Algebra::block_nc, n, b));
    for (int i = 1; i <= n; ++i)
        require_equal_routes(direct.at(i), acted(Partition::finest(i)),
                             "boolean moments (character route)");
    return direct;
}

Sequence monotone_moments(const Sequence& h) {
    int n = h.size();
    Sequence direct = moments_from_cumulants(Flavor::monotone, h);
    LinearForm acted = coaction_act(psi_star(n), sticks_character(Algebra::block_nc, n, h));
    for (int i = 1; i <= n; ++i)
        require_equal_routes(direct.at(i), acted(Partition::finest(i)),
                             "monotone moments (character route)");
    return direct;
}

Sequence free_from_classical(const Sequence& c) {
    Sequence k;
    for (int n = 1; n <= c.size(); ++n) {
        Rational acc(0);
        Partition coarsest = Partition::coarsest(n);
        for (const Partition& p : enumerate_set_partitions(n)) {
            if (!(nc_closure(p) == coarsest)) continue;
            Rational prod(1);
            for (const auto& b : p.blocks()) prod *= c.at(static_cast<int>(b.size()));
            acc += prod;
        }
        k.values.push_back(acc);
    }
    return k;
}

bool shuffle_lift_check(const Sequence& c, int n) {
    // gamma lives on general partitions, supported on those whose closure is
    // the one-block partition, with value the product of classical cumulants.
    LinearForm gamma = LinearForm::infinitesimal(Algebra::gap_sp, n, [c](const Partition& p) {
        if (!(nc_closure(p) == Partition::coarsest(p.degree()))) return Rational(0);
        Rational prod(1);
        for (const auto& b : p.blocks()) prod *= c.at(static_cast<int>(b.size()));
        return prod;
    });
    LinearForm psi = solve_fixpoint_prec(gamma, n);

    Sequence k = free_from_classical(c);
    LinearForm kappa = coarsest_infinitesimal(Algebra::gap_nc, n, k);
    LinearForm phi = solve_fixpoint_prec(kappa, n);

    // phi = psi o nc* on noncrossing words.
    int word_bound = std::min(n, 5);
    std::vector<std::vector<Partition>> by_degree(static_cast<std::size_t>(word_bound) + 1);
    for (int d = 1; d <= word_bound; ++d)
        by_degree[static_cast<std::size_t>(d)] = enumerate_noncrossing_partitions(d);
    std::vector<Partition> current;
    bool ok = true;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!ok) return;
        if (!current.empty()) {
            Monomial w((std::vector<Partition>(current)));
            Rational via_star(0);
            for (const auto& [word, coeff] : nc_star(w).terms()) via_star += coeff * psi(word);
            if (!(phi(w) == via_star)) ok = false;
        }
        for (int d = 1; d <= remaining; ++d)
            for (const Partition& p : by_degree[static_cast<std::size_t>(d)]) {
                current.push_back(p);
                self(self, remaining - d);
                current.pop_back();
            }
    };
    rec(rec, word_bound);
    if (!ok) return false;

    // The classical moments come out of psi summed over all set partitions.
    Sequence m = classical_moments(c);
    for (int d = 1; d <= n; ++d) {
        Rational acc(0);
        for (const Partition& p : enumerate_set_partitions(d)) acc += psi(Monomial::of(p));
        if (!(acc == m.at(d))) return false;
    }
    return true;
}

Polynomial symbolic_moment(Flavor f, int n) {
    Polynomial out;
    for (const Partition& q : summation_domain(f, n)) {
        Rational w = moment_weight(f, q);
        if (w.is_zero()) continue;
        Polynomial mono = Polynomial::constant(w);
        for (const auto& b : q.blocks())
            mono = mono * Polynomial::variable(static_cast<int>(b.size()));
        out += mono;
    }
    return out;
}

Polynomial symbolic_cumulant(Flavor f, int n) {
    // Triangular elimination of the moment formulas, as polynomials in the
    // moment variables.
    std::vector<Polynomial> cum;  // cum[i] = cumulant of degree i+1
    for (int d = 1; d <= n; ++d) {
        Polynomial acc = Polynomial::variable(d);
        for (const Partition& q : summation_domain(f, d)) {
            if (q.block_count() == 1) continue;
            Rational w = moment_weight(f, q);
            if (w.is_zero()) continue;
            Polynomial mono = Polynomial::constant(w);
            for (const auto& b : q.blocks())
                mono = mono * cum[static_cast<std::size_t>(b.size() - 1)];
            acc -= mono;
        }
        cum.push_back(acc);
    }
    return cum.back();
}

}  // namespace ckit
