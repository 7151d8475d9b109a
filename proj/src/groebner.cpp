#include "agraded/groebner.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace agraded {

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis) {
    for (const Polynomial& g : basis) {
        if (!same_ring(f.ring(), g.ring()))
            throw std::invalid_argument("normal_form: ring mismatch");
        if (g.is_zero())
            throw std::invalid_argument("normal_form: zero basis element");
    }
    Polynomial r = f;
    std::size_t start = 0;  // terms before `start` are known irreducible
    while (true) {
        const auto& terms = r.terms();
        std::size_t k = start;
        const Polynomial* reducer = nullptr;
        for (; k < terms.size(); ++k) {
            for (const Polynomial& g : basis) {
                if (g.leading_monomial().divides(terms[k].exp)) {
                    reducer = &g;
                    break;
                }
            }
            if (reducer) break;
        }
        if (!reducer) break;
        Scalar c = terms[k].coeff / reducer->leading_coefficient();
        ExponentVector q = terms[k].exp.minus(reducer->leading_monomial());
        r = r - reducer->times_term(c, q);
        start = k;
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial of zero polynomial");
    if (!same_ring(f.ring(), g.ring()))
        throw std::invalid_argument("s_polynomial: ring mismatch");
    ExponentVector l =
        ExponentVector::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(f.leading_coefficient().inverse(),
                                l.minus(f.leading_monomial()));
    Polynomial b = g.times_term(g.leading_coefficient().inverse(),
                                l.minus(g.leading_monomial()));
    return a - b;
}

namespace {

struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
};

bool coprime(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0 && b[k] != 0) return false;
    return true;
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : generators)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return basis;
    const MonomialOrder& ord = basis.front().ring()->order();

    std::vector<Pair> pending;
    auto add_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back(Pair{
                i, j,
                ExponentVector::lcm(basis[i].leading_monomial(),
                                    basis[j].leading_monomial())});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_with(j);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        for (const Pair& p : pending)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!pending.empty()) {
        // normal selection: smallest lcm degree, then order, then indices
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &p = pending[k], &q = pending[best];
            if (p.lcm.total_degree() != q.lcm.total_degree()) {
                if (p.lcm.total_degree() < q.lcm.total_degree()) best = k;
                continue;
            }
            int c = ord.compare(p.lcm, q.lcm);
            if (c < 0 || (c == 0 && (p.i < q.i || (p.i == q.i && p.j < q.j))))
                best = k;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

        if (coprime(basis[p.i].leading_monomial(),
                    basis[p.j].leading_monomial()))
            continue;
        // chain criterion: some lm(k) divides the lcm and both pairs with k
        // are already treated
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].leading_monomial().divides(p.lcm) &&
                !is_pending(p.i, k) && !is_pending(p.j, k))
                skip = true;
        }
        if (skip) continue;

        Polynomial r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (!r.is_zero()) {
            basis.push_back(std::move(r));
            add_pairs_with(basis.size() - 1);
        }
    }
    return basis;
}

std::vector<Polynomial> reduced_basis(std::vector<Polynomial> gb) {
    std::vector<Polynomial> monic;
    for (Polynomial& g : gb)
        if (!g.is_zero()) monic.push_back(g.monic());
    if (monic.empty()) return monic;
    const MonomialOrder& ord = monic.front().ring()->order();

    // autoreduce to a fixpoint: each element fully reduced by the others,
    // vanishing elements dropped
    std::vector<Polynomial> minimal = std::move(monic);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others);
            if (r.is_zero()) {
                minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
                changed = true;
                continue;
            }
            r = r.monic();
            if (!(r == minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ord.compare(a.leading_monomial(),
                                     b.leading_monomial()) < 0;
              });
    return minimal;
}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
    for (Polynomial& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_))
            throw std::invalid_argument("ideal generator ring mismatch");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::from_groebner(Ring ring, std::vector<Polynomial> reduced_gb) {
    Ideal I(std::move(ring), reduced_gb);
    I.gb_ =
        std::make_shared<const std::vector<Polynomial>>(std::move(reduced_gb));
    return I;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
    if (!gb_)
        gb_ = std::make_shared<const std::vector<Polynomial>>(
            reduced_basis(buchberger(gens_)));
    return *gb_;
}

bool Ideal::contains(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_))
        throw std::invalid_argument("membership test: ring mismatch");
    return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().is_constant();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("ideal_equal: ring mismatch");
    const auto &ga = a.groebner_basis(), &gb = b.groebner_basis();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i])) return false;
    return true;
}

}  // namespace agraded
