#pragma once

#include <vector>

#include "agraded/polynomial.hpp"

namespace agraded {

// Remainder of multivariate division of f by `basis`. Deterministic: the
// greatest reducible term is reduced by the first basis element whose
// leading monomial divides it. No term of the result is divisible by any
// basis leading monomial, and f minus the result lies in (basis).
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis);

// S(f, g) = (lcm/lt(f))·f - (lcm/lt(g))·g, lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm under the generators' ring order. Normal pair
// selection (smallest lcm degree, then order on the lcm, then indices)
// with the coprimality and chain criteria.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators);

// Interreduces a Groebner basis to the unique reduced one: monic, tails
// reduced, sorted ascending by leading monomial.
std::vector<Polynomial> reduced_basis(std::vector<Polynomial> gb);

// Ideal given by generators, with a lazily computed reduced Groebner
// basis. Values are immutable; derived ideals are fresh objects.
class Ideal {
  public:
    Ideal(Ring ring, std::vector<Polynomial> generators);

    // Adopts an already-reduced Groebner basis as both generators and cache.
    static Ideal from_groebner(Ring ring, std::vector<Polynomial> reduced_gb);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const std::vector<Polynomial>& groebner_basis() const;

    bool contains(const Polynomial& f) const;
    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }

  private:
    Ring ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);

}  // namespace agraded
