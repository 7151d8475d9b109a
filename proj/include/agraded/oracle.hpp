#pragma once

#include <map>
#include <optional>

#include "agraded/pipeline.hpp"

namespace agraded {

// Brute-force linear-algebra verifiers for the main pipeline, independent
// of it: truncated ideals as exact row spaces over a fixed monomial basis.

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// All monomials of total degree <= D in the ring, sorted descending
// grevlex; fixed column indexing for row spaces.
class MonomialBasis {
  public:
    MonomialBasis(Ring ring, std::uint64_t D);

    const Ring& ring() const { return ring_; }
    std::uint64_t degree_bound() const { return D_; }
    std::size_t size() const { return monos_.size(); }
    const ExponentVector& at(std::size_t i) const { return monos_[i]; }
    std::size_t index_of(const ExponentVector& e) const;

    // Coefficient row of f over this basis; f must have degree <= D.
    std::vector<Scalar> row_of(const Polynomial& f) const;
    Polynomial polynomial_of(const std::vector<Scalar>& row) const;

  private:
    Ring ring_;
    std::uint64_t D_;
    std::vector<ExponentVector> monos_;
    std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

// Reduces `m` in place to reduced row-echelon form; returns the pivot
// column of each surviving row. Exact arithmetic throughout.
std::vector<std::size_t> rref(ScalarMatrix& m, FieldSpec field);

// The vector space of elements of I with total degree <= D, as a reduced
// row-echelon matrix over the monomial basis. Requires a grevlex cached
// basis (degree-compatible orders give degree-bounded representations).
struct TruncatedIdealSpace {
    std::uint64_t D;
    MonomialBasis basis;
    ScalarMatrix rows;  // reduced row-echelon form

    std::size_t dimension() const { return rows.size(); }
    bool member(const Polynomial& f) const;
};

TruncatedIdealSpace truncate(const Ideal& I, std::uint64_t D);

using ADegreeKey = std::vector<std::int64_t>;

// Splits the row space by A-degree: for each degree class, the subspace of
// rows supported on that class's monomials alone, in reduced row-echelon
// form over the full column indexing. Classes with zero intersection are
// omitted.
std::map<ADegreeKey, ScalarMatrix> homogeneous_part(
    const TruncatedIdealSpace& S, const GradingMatrix& A);

struct MaximalityVerdict {
    enum class Kind { Pass, Fail, PrecondViolation };
    Kind kind;
    std::optional<Polynomial> witness;  // Fail: A-homogeneous separator
    std::string detail;

    bool passed() const { return kind == Kind::Pass; }
};

// Certifies degree-by-degree that `candidate` is the largest A-graded
// subideal of I up to degree D: every A-homogeneous element of I of degree
// <= D must lie in candidate. PrecondViolation is reported when candidate
// is not contained in I.
MaximalityVerdict verify_maximality(const Ideal& I, const GradingMatrix& A,
                                    const Ideal& candidate, std::uint64_t D);

}  // namespace agraded
