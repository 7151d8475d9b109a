#include "agraded/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace agraded {

namespace {

std::size_t pivot_of(const std::vector<Scalar>& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!row[i].is_zero()) return i;
    return row.size();
}

std::vector<Scalar> reduce_against(std::vector<Scalar> v,
                                   const ScalarMatrix& rows) {
    for (const auto& r : rows) {
        std::size_t p = pivot_of(r);
        if (p == r.size() || v[p].is_zero()) continue;
        Scalar c = v[p];
        for (std::size_t i = p; i < v.size(); ++i)
            v[i] = v[i] - c * r[i];
    }
    return v;
}

}  // namespace

MonomialBasis::MonomialBasis(Ring ring, std::uint64_t D)
    : ring_(std::move(ring)), D_(D) {
    const std::size_t n = ring_->variable_count();
    std::vector<std::uint32_t> cur(n, 0);
    std::function<void(std::size_t, std::uint64_t)> rec =
        [&](std::size_t i, std::uint64_t left) {
            if (i == n) {
                monos_.push_back(ExponentVector(cur));
                return;
            }
            for (std::uint32_t e = 0; e <= left; ++e) {
                cur[i] = e;
                rec(i + 1, left - e);
            }
            cur[i] = 0;
        };
    rec(0, D);
    MonomialOrder grevlex = MonomialOrder::grevlex();
    std::sort(monos_.begin(), monos_.end(),
              [&](const ExponentVector& a, const ExponentVector& b) {
                  return grevlex.compare(a, b) > 0;
              });
    for (std::size_t i = 0; i < monos_.size(); ++i) {
        std::vector<std::uint32_t> key(monos_[i].entries().begin(),
                                       monos_[i].entries().end());
        index_[std::move(key)] = i;
    }
}

std::size_t MonomialBasis::index_of(const ExponentVector& e) const {
    std::vector<std::uint32_t> key(e.entries().begin(), e.entries().end());
    auto it = index_.find(key);
    if (it == index_.end())
        throw std::out_of_range("monomial outside the degree bound");
    return it->second;
}

std::vector<Scalar> MonomialBasis::row_of(const Polynomial& f) const {
    std::vector<Scalar> row(size(), Scalar::zero(ring_->field()));
    for (const Term& t : f.terms()) row[index_of(t.exp)] = t.coeff;
    return row;
}

Polynomial MonomialBasis::polynomial_of(const std::vector<Scalar>& row) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!row[i].is_zero()) terms.push_back(Term{row[i], monos_[i]});
    return Polynomial(ring_, std::move(terms));
}

std::vector<std::size_t> rref(ScalarMatrix& m, FieldSpec field) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t ncols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t r = rank; r < m.size(); ++r)
            if (!m[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        Scalar inv = m[rank][col].inverse();
        for (std::size_t i = col; i < ncols; ++i)
            m[rank][i] = m[rank][i] * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Scalar c = m[r][col];
            for (std::size_t i = col; i < ncols; ++i)
                m[r][i] = m[r][i] - c * m[rank][i];
        }
        pivots.push_back(col);
        ++rank;
    }
    m.resize(rank, std::vector<Scalar>(ncols, Scalar::zero(field)));
    return pivots;
}

bool TruncatedIdealSpace::member(const Polynomial& f) const {
    std::vector<Scalar> v = reduce_against(basis.row_of(f), rows);
    return pivot_of(v) == v.size();
}

TruncatedIdealSpace truncate(const Ideal& I, std::uint64_t D) {
    if (I.ring()->order().kind() != MonomialOrder::Kind::GrevLex)
        throw std::invalid_argument(
            "truncate: requires a grevlex (degree-compatible) ring order");
    MonomialBasis basis(I.ring(), D);
    ScalarMatrix rows;
    for (const Polynomial& g : I.groebner_basis()) {
        std::uint64_t dg = g.total_degree();
        if (dg > D) continue;
        MonomialBasis multipliers(I.ring(), D - dg);
        for (std::size_t i = 0; i < multipliers.size(); ++i) {
            Polynomial mg = g.times_term(Scalar::one(I.ring()->field()),
                                         multipliers.at(i));
            rows.push_back(basis.row_of(mg));
        }
    }
    rref(rows, I.ring()->field());
    return TruncatedIdealSpace{D, std::move(basis), std::move(rows)};
}

std::map<ADegreeKey, ScalarMatrix> homogeneous_part(
    const TruncatedIdealSpace& S, const GradingMatrix& A) {
    const std::size_t ncols = S.basis.size();
    if (A.cols() != S.basis.ring()->variable_count())
        throw std::invalid_argument("homogeneous_part: dimension mismatch");
    FieldSpec field = S.basis.ring()->field();

    std::map<ADegreeKey, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < ncols; ++i)
        classes[a_degree(S.basis.at(i), A)].push_back(i);

    std::map<ADegreeKey, ScalarMatrix> out;
    for (const auto& [key, cols] : classes) {
        // column permutation: other classes first, this class last; rows
        // with pivots in the class block are supported on the class alone
        std::vector<std::size_t> perm;
        std::vector<bool> in_class(ncols, false);
        for (std::size_t c : cols) in_class[c] = true;
        for (std::size_t c = 0; c < ncols; ++c)
            if (!in_class[c]) perm.push_back(c);
        const std::size_t n_other = perm.size();
        for (std::size_t c : cols) perm.push_back(c);

        ScalarMatrix permuted;
        permuted.reserve(S.rows.size());
        for (const auto& row : S.rows) {
            std::vector<Scalar> r(ncols, Scalar::zero(field));
            for (std::size_t c = 0; c < ncols; ++c) r[c] = row[perm[c]];
            permuted.push_back(std::move(r));
        }
        std::vector<std::size_t> pivots = rref(permuted, field);

        ScalarMatrix piece;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < n_other) continue;
            std::vector<Scalar> orig(ncols, Scalar::zero(field));
            for (std::size_t c = 0; c < ncols; ++c) orig[perm[c]] = permuted[r][c];
            piece.push_back(std::move(orig));
        }
        if (piece.empty()) continue;
        rref(piece, field);  // canonical under the original column order
        out[key] = std::move(piece);
    }
    return out;
}

MaximalityVerdict verify_maximality(const Ideal& I, const GradingMatrix& A,
                                    const Ideal& candidate, std::uint64_t D) {
    if (!same_ring(I.ring(), candidate.ring()))
        return {MaximalityVerdict::Kind::PrecondViolation, std::nullopt,
                "candidate lives in a different ring"};
    if (A.cols() != I.ring()->variable_count())
        throw std::invalid_argument("verify_maximality: dimension mismatch");
    for (const Polynomial& g : candidate.generators())
        if (!I.contains(g))
            return {MaximalityVerdict::Kind::PrecondViolation, std::nullopt,
                    "candidate generator not contained in I: " + g.str()};

    // the oracle works in a grevlex copy of the ring
    const Ring& R = I.ring();
    Ring grv = make_ring(R->variables(), R->field(), MonomialOrder::grevlex());
    std::vector<std::size_t> ident(R->variable_count());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
    auto reframe = [&](const Ideal& J) {
        std::vector<Polynomial> gens;
        for (const Polynomial& g : J.generators())
            gens.push_back(map_to_ring(g, grv, ident));
        return Ideal(grv, std::move(gens));
    };
    TruncatedIdealSpace SI = truncate(reframe(I), D);
    TruncatedIdealSpace SC = truncate(reframe(candidate), D);
    auto HI = homogeneous_part(SI, A);
    auto HC = homogeneous_part(SC, A);

    auto witness_from = [&](const ScalarMatrix& from, const ScalarMatrix& to,
                            const std::string& what) -> MaximalityVerdict {
        for (const auto& row : from) {
            std::vector<Scalar> res = reduce_against(row, to);
            if (pivot_of(res) != res.size()) {
                Polynomial w = SI.basis.polynomial_of(res);
                return {MaximalityVerdict::Kind::Fail,
                        map_to_ring(w, R, ident), what};
            }
        }
        return {MaximalityVerdict::Kind::Pass, std::nullopt, ""};
    };

    std::map<ADegreeKey, const ScalarMatrix*> keys;
    for (const auto& [k, m] : HI) keys.emplace(k, nullptr);
    for (const auto& [k, m] : HC) keys.emplace(k, nullptr);
    ScalarMatrix empty;
    for (const auto& [key, unused] : keys) {
        const ScalarMatrix& vi = HI.count(key) ? HI.at(key) : empty;
        const ScalarMatrix& vc = HC.count(key) ? HC.at(key) : empty;
        MaximalityVerdict v = witness_from(
            vi, vc, "A-homogeneous element of I missing from the candidate");
        if (v.kind != MaximalityVerdict::Kind::Pass) return v;
        v = witness_from(vc, vi,
                         "candidate element not among the homogeneous "
                         "elements of I");
        if (v.kind != MaximalityVerdict::Kind::Pass) return v;
    }
    return {MaximalityVerdict::Kind::Pass, std::nullopt, ""};
}

}  // namespace agraded
