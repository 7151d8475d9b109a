#pragma once

#include <string>
#include <utility>
#include <vector>

#include "agraded/ring.hpp"

namespace agraded {

struct Term {
    Scalar coeff;
    ExponentVector exp;
};

// Sparse multivariate polynomial in canonical form: terms strictly
// descending under the ring's order, no zero coefficients, pairwise
// distinct exponent vectors. The zero polynomial has an empty term list.
class Polynomial {
  public:
    // Normalizes: merges duplicate exponents, drops zeros, sorts.
    Polynomial(Ring ring, std::vector<Term> terms);

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring), {}); }
    static Polynomial constant(Ring ring, Scalar c);
    static Polynomial one(Ring ring) {
        Scalar c = Scalar::one(ring->field());
        return constant(std::move(ring), c);
    }
    static Polynomial monomial(Ring ring, Scalar c, ExponentVector e);
    static Polynomial variable(Ring ring, std::size_t i);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Single term with coefficient 1, or a nonzero constant scaled monic.
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
    }

    const Term& leading_term() const;
    const ExponentVector& leading_monomial() const { return leading_term().exp; }
    const Scalar& leading_coefficient() const { return leading_term().coeff; }

    std::uint64_t total_degree() const;  // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Scalar& c, const ExponentVector& e) const;
    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Canonical text: terms descending, explicit '*' and '^'.
    std::string str() const;

  private:
    Ring ring_;
    std::vector<Term> terms_;

    void check_same_ring(const Polynomial& o) const;
};

std::string monomial_str(const RingContext& ring, const ExponentVector& e);

}  // namespace agraded
