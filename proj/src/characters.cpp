#include "cumulantkit/characters.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "cumulantkit/comodule.hpp"

namespace ckit {

const char* algebra_name(Algebra a) {
    switch (a) {
        case Algebra::gap_nc: return "gap-nc";
        case Algebra::gap_sp: return "gap-sp";
        case Algebra::block_nc: return "block-nc";
        case Algebra::block_sp: return "block-sp";
    }
    return "?";
}

struct LinearForm::Impl {
    Algebra tag = Algebra::gap_nc;
    FormKind kind = FormKind::generic;
    int max_degree = 0;
    GenRule gen;
    WordRule word;
    CWordRule cword;
    std::map<Partition, Rational> gen_memo;
    std::map<Monomial, Rational> word_memo;
    std::map<CMonomial, Rational> cword_memo;
    std::mutex mu;
};

LinearForm LinearForm::character(Algebra tag, int max_degree, GenRule gen) {
    LinearForm f;
    f.impl_ = std::make_shared<Impl>();
    f.impl_->tag = tag;
    f.impl_->kind = FormKind::character;
    f.impl_->max_degree = max_degree;
    f.impl_->gen = std::move(gen);
    return f;
}

LinearForm LinearForm::infinitesimal(Algebra tag, int max_degree, GenRule gen) {
    LinearForm f = character(tag, max_degree, std::move(gen));
    f.impl_->kind = FormKind::infinitesimal;
    return f;
}

LinearForm LinearForm::word_backed(Algebra tag, FormKind kind, int max_degree, WordRule rule) {
    if (!is_gap(tag)) fail(errc::algebra_mismatch, "word rules belong to gap algebras");
    LinearForm f;
    f.impl_ = std::make_shared<Impl>();
    f.impl_->tag = tag;
    f.impl_->kind = kind;
    f.impl_->max_degree = max_degree;
    f.impl_->word = std::move(rule);
    return f;
}

LinearForm LinearForm::cword_backed(Algebra tag, FormKind kind, int max_degree, CWordRule rule) {
    if (is_gap(tag)) fail(errc::algebra_mismatch, "cword rules belong to block algebras");
    LinearForm f;
    f.impl_ = std::make_shared<Impl>();
    f.impl_->tag = tag;
    f.impl_->kind = kind;
    f.impl_->max_degree = max_degree;
    f.impl_->cword = std::move(rule);
    return f;
}

Algebra LinearForm::tag() const { return impl_->tag; }
FormKind LinearForm::kind() const { return impl_->kind; }
int LinearForm::max_degree() const { return impl_->max_degree; }

Rational LinearForm::operator()(const Partition& p) const {
    if (is_gap(impl_->tag)) return (*this)(Monomial::of(p));
    return (*this)(CMonomial::of(p));
}

Rational LinearForm::operator()(const Monomial& m_in) const {
    if (!is_gap(impl_->tag)) fail(errc::algebra_mismatch, "block form applied to a gap word");
    Monomial m = m_in.reduced();
    if (m.total_degree() > impl_->max_degree)
        fail(errc::truncation_exceeded, "evaluation beyond the truncation degree");
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->word_memo.find(m);
    if (it != impl_->word_memo.end()) return it->second;
    Rational v;
    if (impl_->word) {
        v = impl_->word(m);
    } else if (impl_->kind == FormKind::character) {
        v = Rational(1);
        for (const Partition& f : m.factors()) {
            auto git = impl_->gen_memo.find(f);
            if (git == impl_->gen_memo.end())
                git = impl_->gen_memo.emplace(f, impl_->gen(f)).first;
            v *= git->second;
        }
    } else if (impl_->kind == FormKind::infinitesimal) {
        if (m.size() != 1) {
            v = Rational(0);
        } else {
            auto git = impl_->gen_memo.find(m.factor(0));
            if (git == impl_->gen_memo.end())
                git = impl_->gen_memo.emplace(m.factor(0), impl_->gen(m.factor(0))).first;
            v = git->second;
        }
    } else {
        fail(errc::internal_inconsistency, "generic form without an evaluation rule");
    }
    impl_->word_memo.emplace(std::move(m), v);
    return v;
}

Rational LinearForm::operator()(const CMonomial& m) const {
    if (is_gap(impl_->tag)) fail(errc::algebra_mismatch, "gap form applied to a block monomial");
    if (m.total_degree() > impl_->max_degree)
        fail(errc::truncation_exceeded, "evaluation beyond the truncation degree");
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->cword_memo.find(m);
    if (it != impl_->cword_memo.end()) return it->second;
    Rational v;
    if (impl_->cword) {
        v = impl_->cword(m);
    } else if (impl_->kind == FormKind::character) {
        v = Rational(1);
        for (const Partition& f : m.factors()) {
            auto git = impl_->gen_memo.find(f);
            if (git == impl_->gen_memo.end())
                git = impl_->gen_memo.emplace(f, impl_->gen(f)).first;
            v *= git->second;
        }
    } else if (impl_->kind == FormKind::infinitesimal) {
        if (m.size() != 1) {
            v = Rational(0);
        } else {
            const Partition& f = m.factors().front();
            auto git = impl_->gen_memo.find(f);
            if (git == impl_->gen_memo.end())
                git = impl_->gen_memo.emplace(f, impl_->gen(f)).first;
            v = git->second;
        }
    } else {
        fail(errc::internal_inconsistency, "generic form without an evaluation rule");
    }
    impl_->cword_memo.emplace(m, v);
    return v;
}

// --- basic forms -------------------------------------------------------------

LinearForm counit_form(Algebra tag, int max_degree) {
    if (is_gap(tag))
        return LinearForm::character(tag, max_degree, [](const Partition&) { return Rational(0); });
    return LinearForm::character(tag, max_degree, [](const Partition& p) {
        return Rational(p.block_count() == 1 ? 1 : 0);
    });
}

LinearForm zeta(Algebra block_tag, int max_degree) {
    if (is_gap(block_tag)) fail(errc::algebra_mismatch, "zeta lives on a block bialgebra");
    return LinearForm::character(block_tag, max_degree, [](const Partition&) { return Rational(1); });
}

namespace {

struct MoebiusSolver {
    bool nc;
    std::map<Partition, Rational> memo;
    std::mutex mu;
    Rational value(const Partition& p) {
        std::lock_guard<std::mutex> lock(mu);
        return value_rec(p);
    }
    Rational value_rec(const Partition& p) {
        if (p.block_count() == 1) return Rational(1);
        auto it = memo.find(p);
        if (it != memo.end()) return it->second;
        Rational v(0);
        for (const Partition& q : enumerate_coarsenings(p, nc))
            if (!(q == p)) v -= value_rec(q);
        memo.emplace(p, v);
        return v;
    }
};

}  // namespace

LinearForm moebius(Algebra block_tag, int max_degree) {
    if (is_gap(block_tag)) fail(errc::algebra_mismatch, "moebius lives on a block bialgebra");
    auto solver = std::make_shared<MoebiusSolver>();
    solver->nc = is_noncrossing_mode(block_tag);
    return LinearForm::character(block_tag, max_degree,
                                 [solver](const Partition& p) { return solver->value(p); });
}

LinearForm unit_infinitesimal(Algebra gap_tag, int max_degree) {
    if (!is_gap(gap_tag)) fail(errc::algebra_mismatch, "expected a gap algebra");
    return LinearForm::infinitesimal(gap_tag, max_degree, [](const Partition& p) {
        return Rational(p.block_count() == 1 ? 1 : 0);
    });
}

// --- structure maps ----------------------------------------------------------

namespace {

LinearForm retag_by_generators(const LinearForm& f, Algebra to) {
    if (f.kind() == FormKind::generic)
        fail(errc::algebra_mismatch, "only generator-determined forms transfer between algebras");
    auto rule = [f](const Partition& p) { return f(p); };
    if (f.kind() == FormKind::character)
        return LinearForm::character(to, f.max_degree(), rule);
    return LinearForm::infinitesimal(to, f.max_degree(), rule);
}

}  // namespace

LinearForm bar(const LinearForm& gap_form) {
    if (!is_gap(gap_form.tag())) fail(errc::algebra_mismatch, "bar expects a gap form");
    return retag_by_generators(gap_form, block_counterpart(gap_form.tag()));
}

LinearForm hat(const LinearForm& block_form) {
    if (is_gap(block_form.tag())) fail(errc::algebra_mismatch, "hat expects a block form");
    return retag_by_generators(block_form, gap_counterpart(block_form.tag()));
}

LinearForm theta(const LinearForm& kappa) {
    return LinearForm::character(kappa.tag(), kappa.max_degree(),
                                 [kappa](const Partition& p) { return kappa(p); });
}

LinearForm theta_inv(const LinearForm& phi) {
    return LinearForm::infinitesimal(phi.tag(), phi.max_degree(),
                                     [phi](const Partition& p) { return phi(p); });
}

// --- convolution -------------------------------------------------------------

namespace {

void require_same_tag(const LinearForm& a, const LinearForm& b) {
    if (a.tag() != b.tag()) fail(errc::algebra_mismatch, "operands live on different bialgebras");
}

bool both_characters(const LinearForm& a, const LinearForm& b) {
    return a.kind() == FormKind::character && b.kind() == FormKind::character;
}

}  // namespace

LinearForm convolve_block(const LinearForm& a, const LinearForm& b) {
    require_same_tag(a, b);
    if (is_gap(a.tag())) fail(errc::algebra_mismatch, "convolve_block needs block forms");
    bool nc = is_noncrossing_mode(a.tag());
    int n = std::min(a.max_degree(), b.max_degree());
    if (both_characters(a, b)) {
        return LinearForm::character(a.tag(), n, [a, b, nc](const Partition& p) {
            Rational acc(0);
            for (const Partition& q : enumerate_coarsenings(p, nc))
                acc += a(q) * b(fibre(p, q));
            return acc;
        });
    }
    return LinearForm::cword_backed(a.tag(), FormKind::generic, n, [a, b, nc](const CMonomial& m) {
        Rational acc(0);
        for (const auto& [pair, c] : block_coproduct(m, nc).terms())
            acc += c * a(pair.first) * b(pair.second);
        return acc;
    });
}

LinearForm convolve_gap(const LinearForm& a, const LinearForm& b) {
    require_same_tag(a, b);
    if (!is_gap(a.tag())) fail(errc::algebra_mismatch, "convolve_gap needs gap forms");
    int n = std::min(a.max_degree(), b.max_degree());
    FormKind kind = both_characters(a, b) ? FormKind::character : FormKind::generic;
    return LinearForm::word_backed(a.tag(), kind, n, [a, b](const Monomial& m) {
        Rational acc(0);
        for (const auto& [pair, c] : gap_coproduct(m).terms())
            acc += c * a(pair.first) * b(pair.second);
        return acc;
    });
}

LinearForm half_shuffle_prec(const LinearForm& a, const LinearForm& b) {
    require_same_tag(a, b);
    if (!is_gap(a.tag())) fail(errc::algebra_mismatch, "half-shuffles need gap forms");
    int n = std::min(a.max_degree(), b.max_degree());
    return LinearForm::word_backed(a.tag(), FormKind::generic, n, [a, b](const Monomial& m) {
        if (m.is_unit()) return a(Monomial::unit()) * b(Monomial::unit());
        Rational acc(0);
        for (const auto& [pair, c] : gap_coproduct_prec(m).terms())
            acc += c * a(pair.first) * b(pair.second);
        return acc;
    });
}

LinearForm half_shuffle_succ(const LinearForm& a, const LinearForm& b) {
    require_same_tag(a, b);
    if (!is_gap(a.tag())) fail(errc::algebra_mismatch, "half-shuffles need gap forms");
    int n = std::min(a.max_degree(), b.max_degree());
    return LinearForm::word_backed(a.tag(), FormKind::generic, n, [a, b](const Monomial& m) {
        if (m.is_unit()) return Rational(0);
        Rational acc(0);
        for (const auto& [pair, c] : gap_coproduct_succ(m).terms())
            acc += c * a(pair.first) * b(pair.second);
        return acc;
    });
}

namespace {

struct InverseSolver {
    LinearForm phi;
    bool nc;
    std::map<Partition, Rational> memo;
    std::mutex mu;

    Rational value(const Partition& p) {
        std::lock_guard<std::mutex> lock(mu);
        return value_rec(p);
    }
    Rational value_rec(const Partition& p) {
        auto it = memo.find(p);
        if (it != memo.end()) return it->second;
        Partition coarsest = Partition::coarsest(p.degree());
        Rational lead = phi(coarsest);
        if (lead.is_zero())
            fail(errc::not_invertible, "character vanishes on a coarsest partition");
        // (phi * psi)(p) = counit(p); the coarsest term isolates psi(p), every
        // other fibre factor has strictly smaller degree.
        Rational acc = Rational(p.block_count() == 1 ? 1 : 0);
        for (const Partition& q : enumerate_coarsenings(p, nc)) {
            if (q == coarsest) continue;
            Rational fib(1);
            for (const Partition& f : fibre(p, q).factors()) fib *= value_rec(f);
            acc -= phi(q) * fib;
        }
        Rational v = acc / lead;
        memo.emplace(p, v);
        return v;
    }
};

}  // namespace

LinearForm convolution_inverse(const LinearForm& phi) {
    if (is_gap(phi.tag())) fail(errc::algebra_mismatch, "convolution inverse is taken in the block monoid");
    if (phi.kind() != FormKind::character)
        fail(errc::invalid_argument, "only characters are invertible");
    auto solver = std::make_shared<InverseSolver>();
    solver->phi = phi;
    solver->nc = is_noncrossing_mode(phi.tag());
    return LinearForm::character(phi.tag(), phi.max_degree(),
                                 [solver](const Partition& p) { return solver->value(p); });
}

LinearForm coaction_act(const LinearForm& alpha, const LinearForm& phi) {
    if (!is_gap(alpha.tag()) || is_gap(phi.tag()))
        fail(errc::algebra_mismatch, "coaction acts on gap forms by block forms");
    if (block_counterpart(alpha.tag()) != phi.tag())
        fail(errc::algebra_mismatch, "coaction operands disagree on the noncrossing mode");
    bool nc = is_noncrossing_mode(alpha.tag());
    int n = std::min(alpha.max_degree(), phi.max_degree());
    if (alpha.kind() != FormKind::generic && phi.kind() == FormKind::character) {
        auto rule = [alpha, phi, nc](const Partition& p) {
            Rational acc(0);
            for (const Partition& q : enumerate_coarsenings(p, nc))
                acc += alpha(q) * phi(fibre(p, q));
            return acc;
        };
        if (alpha.kind() == FormKind::character)
            return LinearForm::character(alpha.tag(), n, rule);
        return LinearForm::infinitesimal(alpha.tag(), n, rule);
    }
    return LinearForm::word_backed(alpha.tag(), FormKind::generic, n,
                                   [alpha, phi, nc](const Monomial& m) {
                                       Rational acc(0);
                                       for (const auto& [pair, c] : rho(m, nc).terms())
                                           acc += c * alpha(pair.first) * phi(pair.second);
                                       return acc;
                                   });
}

// --- exponential bijections ---------------------------------------------------

namespace {

struct PrecSolver {
    LinearForm kappa;
    std::map<Monomial, Rational> memo;
    std::mutex mu;
    Rational value(const Monomial& m) {
        std::lock_guard<std::mutex> lock(mu);
        return value_rec(m);
    }
    Rational value_rec(const Monomial& m) {
        if (m.is_unit()) return Rational(1);
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Rational acc(0);
        for (const auto& [pair, c] : gap_coproduct_prec(m).terms())
            acc += c * kappa(pair.first) * value_rec(pair.second);
        memo.emplace(m, acc);
        return acc;
    }
};

struct SuccSolver {
    LinearForm kappa;
    std::map<Monomial, Rational> memo;
    std::mutex mu;
    Rational value(const Monomial& m) {
        std::lock_guard<std::mutex> lock(mu);
        return value_rec(m);
    }
    Rational value_rec(const Monomial& m) {
        if (m.is_unit()) return Rational(1);
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Rational acc(0);
        for (const auto& [pair, c] : gap_coproduct_succ(m).terms())
            acc += c * value_rec(pair.first) * kappa(pair.second);
        memo.emplace(m, acc);
        return acc;
    }
};

}  // namespace

LinearForm solve_fixpoint_prec(const LinearForm& kappa, int max_degree) {
    if (!is_gap(kappa.tag())) fail(errc::algebra_mismatch, "fixpoints are solved on gap forms");
    auto solver = std::make_shared<PrecSolver>();
    solver->kappa = kappa;
    return LinearForm::word_backed(kappa.tag(), FormKind::character, max_degree,
                                   [solver](const Monomial& m) { return solver->value(m); });
}

LinearForm solve_fixpoint_succ(const LinearForm& kappa, int max_degree) {
    if (!is_gap(kappa.tag())) fail(errc::algebra_mismatch, "fixpoints are solved on gap forms");
    auto solver = std::make_shared<SuccSolver>();
    solver->kappa = kappa;
    return LinearForm::word_backed(kappa.tag(), FormKind::character, max_degree,
                                   [solver](const Monomial& m) { return solver->value(m); });
}

namespace {

struct ExpSolver {
    LinearForm kappa;
    std::vector<LinearForm> powers;  // powers[l-1] = kappa^{* l}
    std::mutex mu;
    Rational value(const Monomial& m) {
        if (m.is_unit()) return Rational(1);
        int kmax = m.total_blocks();
        std::vector<LinearForm> needed;
        {
            std::lock_guard<std::mutex> lock(mu);
            while (static_cast<int>(powers.size()) < kmax) {
                if (powers.empty())
                    powers.push_back(kappa);
                else
                    powers.push_back(convolve_gap(powers.back(), kappa));
            }
            needed.assign(powers.begin(), powers.begin() + kmax);
        }
        // kappa^{*l} kills words with fewer than l blocks, so the series is
        // summed exactly.
        Rational acc(0);
        Rational lfact(1);
        for (int l = 1; l <= kmax; ++l) {
            lfact *= Rational(l);
            acc += needed[static_cast<std::size_t>(l - 1)](m) / lfact;
        }
        return acc;
    }
};

}  // namespace

LinearForm exp_star(const LinearForm& kappa, int max_degree) {
    if (!is_gap(kappa.tag())) fail(errc::algebra_mismatch, "exp_star lives on gap forms");
    auto solver = std::make_shared<ExpSolver>();
    solver->kappa = kappa;
    return LinearForm::word_backed(kappa.tag(), FormKind::character, max_degree,
                                   [solver](const Monomial& m) { return solver->value(m); });
}

// --- universal characters ------------------------------------------------------

LinearForm psi_prec(int max_degree) {
    return LinearForm::character(Algebra::gap_nc, max_degree,
                                 [](const Partition&) { return Rational(1); });
}

LinearForm psi_succ(int max_degree) {
    return LinearForm::character(Algebra::gap_nc, max_degree, [](const Partition& p) {
        return Rational(is_boolean(p) ? 1 : 0);
    });
}

LinearForm psi_star(int max_degree) {
    return LinearForm::character(Algebra::gap_nc, max_degree, [](const Partition& p) {
        return Rational(heap_order_count(p), factorial(p.block_count()));
    });
}

Rational psi_prec_inverse_closed(const Partition& p) {
    if (!is_noncrossing(p)) fail(errc::unsupported_for_crossing, "closed inverse needs a noncrossing partition");
    if (p.empty()) return Rational(1);
    std::vector<Partition> components = irreducible_components(p);
    int k = static_cast<int>(components.size());
    Rational v = Rational((k % 2 == 0 ? -1 : 1) * catalan_number(k - 1));
    for (const Partition& e : components) {
        const std::vector<int>& base = e.block(e.block_of(1));
        for (std::size_t j = 0; j + 1 < base.size(); ++j) {
            std::vector<int> window;
            for (int x = base[j] + 1; x < base[j + 1]; ++x) window.push_back(x);
            Partition interior = restrict_to(e, window);
            v *= psi_prec_inverse_closed(ordinal_sum(Partition::coarsest(1), interior));
        }
    }
    return v;
}

MixedInverseProducts mixed_inverse_products(int max_degree) {
    MixedInverseProducts out;
    out.succ_inverse = convolution_inverse(bar(psi_succ(max_degree)));
    out.succ_inverse_star_prec = convolve_block(out.succ_inverse, bar(psi_prec(max_degree)));
    out.prec_inverse_star_succ =
        convolve_block(convolution_inverse(bar(psi_prec(max_degree))), bar(psi_succ(max_degree)));
    return out;
}

bool catalan_lemma_check(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        Integer sum = 0;
        for (int k = 0; 2 * k <= n; ++k) {
            Integer term = catalan_number(n - k - 1) * binomial(n - k, k);
            sum += ((n - k) % 2 == 0) ? -term : term;  // sign (-1)^{n-k+1}
        }
        if (sum != Integer(n == 1 ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace ckit
