#include "agraded/ideal_ops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace agraded {

GradingMatrix::GradingMatrix(std::size_t rows, std::size_t cols,
                             std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("grading matrix entry count mismatch");
}

GradingMatrix GradingMatrix::identity(std::size_t n) {
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return GradingMatrix(n, n, std::move(e));
}

GradingMatrix GradingMatrix::zero(std::size_t rows, std::size_t cols) {
    return GradingMatrix(rows, cols,
                         std::vector<std::int64_t>(rows * cols, 0));
}

std::vector<std::int64_t> GradingMatrix::column(std::size_t c) const {
    std::vector<std::int64_t> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<std::int64_t> a_degree(const ExponentVector& b,
                                   const GradingMatrix& A) {
    if (b.size() != A.cols())
        throw std::invalid_argument("a_degree: dimension mismatch");
    std::vector<std::int64_t> deg(A.rows(), 0);
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
            deg[r] += A.at(r, c) * static_cast<std::int64_t>(b[c]);
    return deg;
}

std::string fresh_name(std::string stem,
                       const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), stem) != taken.end())
        stem += "_";
    return stem;
}

ExtendedRing make_extended_ring(const Ring& base, std::size_t d) {
    if (d == 0) return ExtendedRing{base, 0, base};
    std::vector<std::string> names = base->variables();
    std::vector<std::string> combined;
    for (std::size_t i = 1; i <= d; ++i) {
        std::string t = fresh_name("t" + std::to_string(i), names);
        names.push_back(t);
        combined.push_back(std::move(t));
    }
    combined.insert(combined.end(), base->variables().begin(),
                    base->variables().end());
    MonomialOrder ord = MonomialOrder::block(d, MonomialOrder::grevlex(),
                                             MonomialOrder::grevlex());
    return ExtendedRing{base, d,
                        make_ring(std::move(combined), base->field(),
                                  std::move(ord))};
}

Polynomial map_to_ring(const Polynomial& f, const Ring& target,
                       const std::vector<std::size_t>& index_map) {
    if (index_map.size() != f.ring()->variable_count())
        throw std::invalid_argument("map_to_ring: index map arity mismatch");
    const std::size_t m = target->variable_count();
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        std::vector<std::uint32_t> e(m, 0);
        for (std::size_t i = 0; i < index_map.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (index_map[i] == RingContext::npos)
                throw std::invalid_argument(
                    "map_to_ring: dropped variable occurs in polynomial");
            e[index_map[i]] = t.exp[i];
        }
        out.push_back(Term{t.coeff, ExponentVector(std::move(e))});
    }
    return Polynomial(target, std::move(out));
}

Ideal extend_ring(const Ideal& I, const ExtendedRing& ext) {
    if (ext.t_count == 0) return I;
    const std::size_t n = I.ring()->variable_count();
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) map[i] = ext.t_count + i;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        gens.push_back(map_to_ring(g, ext.combined, map));
    return Ideal(ext.combined, std::move(gens));
}

Ideal substitute_grading(const Ideal& I, const GradingMatrix& A,
                         const ExtendedRing& ext) {
    const std::size_t n = I.ring()->variable_count();
    const std::size_t d = A.rows();
    if (A.cols() != n)
        throw std::invalid_argument(
            "substitute_grading: matrix width does not match ring");
    if (ext.t_count != d || !same_ring(ext.base, I.ring()))
        throw std::invalid_argument(
            "substitute_grading: extended ring does not fit");
    if (d == 0) return I;

    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) {
        // per-term t-exponents A*b, then clear the componentwise minimum
        std::vector<std::vector<std::int64_t>> texp;
        texp.reserve(g.terms().size());
        for (const Term& t : g.terms()) texp.push_back(a_degree(t.exp, A));
        std::vector<std::int64_t> low = texp.front();
        for (const auto& v : texp)
            for (std::size_t r = 0; r < d; ++r)
                low[r] = std::min(low[r], v[r]);
        // minimal clearing monomial: shift only where exponents go negative
        std::vector<std::int64_t> shift(d, 0);
        for (std::size_t r = 0; r < d; ++r)
            shift[r] = low[r] < 0 ? -low[r] : 0;
        std::vector<Term> out;
        for (std::size_t k = 0; k < g.terms().size(); ++k) {
            const Term& t = g.terms()[k];
            std::vector<std::uint32_t> e(d + n, 0);
            for (std::size_t r = 0; r < d; ++r)
                e[r] = static_cast<std::uint32_t>(texp[k][r] + shift[r]);
            for (std::size_t i = 0; i < n; ++i) e[d + i] = t.exp[i];
            out.push_back(Term{t.coeff, ExponentVector(std::move(e))});
        }
        gens.push_back(Polynomial(ext.combined, std::move(out)));
    }
    return Ideal(ext.combined, std::move(gens));
}

Ideal substitute_grading(const Ideal& I, const GradingMatrix& A) {
    return substitute_grading(I, A, make_extended_ring(I.ring(), A.rows()));
}

Polynomial t_product(const ExtendedRing& ext) {
    if (ext.t_count == 0) return Polynomial::one(ext.combined);
    std::vector<std::uint32_t> e(ext.combined->variable_count(), 0);
    for (std::size_t i = 0; i < ext.t_count; ++i) e[i] = 1;
    return Polynomial::monomial(ext.combined,
                                Scalar::one(ext.combined->field()),
                                ExponentVector(std::move(e)));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("saturate: f must be nonzero");
    if (!same_ring(f.ring(), I.ring()))
        throw std::invalid_argument("saturate: ring mismatch");
    if (f.is_constant()) return I;  // a unit changes nothing

    const Ring& R = I.ring();
    const std::size_t n = R->variable_count();
    std::vector<std::string> names;
    names.push_back(fresh_name("u", R->variables()));
    names.insert(names.end(), R->variables().begin(), R->variables().end());
    Ring big = make_ring(std::move(names), R->field(),
                         MonomialOrder::block(1, MonomialOrder::grevlex(),
                                              R->order()));

    std::vector<std::size_t> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = i + 1;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        gens.push_back(map_to_ring(g, big, up));
    Polynomial uf = map_to_ring(f, big, up) * Polynomial::variable(big, 0);
    gens.push_back(Polynomial::one(big) - uf);

    std::vector<Polynomial> gb = reduced_basis(buchberger(gens));

    std::vector<std::size_t> down(n + 1, RingContext::npos);
    for (std::size_t i = 0; i < n; ++i) down[i + 1] = i;
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb) {
        bool u_free = true;
        for (const Term& t : g.terms())
            if (t.exp[0] != 0) u_free = false;
        if (u_free) kept.push_back(map_to_ring(g, R, down));
    }
    // the u-free part of the reduced block-order basis is the reduced
    // basis of the elimination ideal under the inner order
    return Ideal::from_groebner(R, std::move(kept));
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars,
                const MonomialOrder& target_order) {
    const Ring& R = I.ring();
    const std::size_t n = R->variable_count();
    std::set<std::size_t> drop;
    for (std::size_t v : drop_vars) {
        if (v >= n) throw std::out_of_range("eliminate: variable index");
        drop.insert(v);
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!drop.count(i)) keep.push_back(i);

    std::vector<std::string> small_names;
    for (std::size_t i : keep) small_names.push_back(R->variables()[i]);
    Ring small = make_ring(std::move(small_names), R->field(), target_order);

    if (drop.empty()) {
        std::vector<std::size_t> ident(n);
        for (std::size_t i = 0; i < n; ++i) ident[i] = i;
        std::vector<Polynomial> gens;
        for (const Polynomial& g : I.generators())
            gens.push_back(map_to_ring(g, small, ident));
        return Ideal(small, std::move(gens));
    }

    const std::size_t k = drop.size();
    std::vector<std::string> perm_names;
    for (std::size_t i : drop) perm_names.push_back(R->variables()[i]);
    for (std::size_t i : keep) perm_names.push_back(R->variables()[i]);
    Ring perm = make_ring(std::move(perm_names), R->field(),
                          MonomialOrder::block(k, MonomialOrder::grevlex(),
                                               target_order));

    std::vector<std::size_t> to_perm(n);
    std::size_t pos = 0;
    for (std::size_t i : drop) to_perm[i] = pos++;
    for (std::size_t i : keep) to_perm[i] = pos++;

    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        gens.push_back(map_to_ring(g, perm, to_perm));
    std::vector<Polynomial> gb = reduced_basis(buchberger(gens));

    std::vector<std::size_t> to_small(n, RingContext::npos);
    for (std::size_t j = 0; j < keep.size(); ++j) to_small[k + j] = j;
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb) {
        bool free_of_drop = true;
        for (const Term& t : g.terms())
            for (std::size_t i = 0; i < k && free_of_drop; ++i)
                if (t.exp[i] != 0) free_of_drop = false;
        if (free_of_drop) kept.push_back(map_to_ring(g, small, to_small));
    }
    return Ideal::from_groebner(small, std::move(kept));
}

}  // namespace agraded
