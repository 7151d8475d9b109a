#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace agraded {

// Base field of a polynomial ring: the rationals (p == 0) or Z/p for a
// prime p < 2^31.
struct FieldSpec {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq_class canonical form); prime-field values live in [0, p).
class Scalar {
  public:
    Scalar() = default;

    static Scalar rational(mpq_class v) {
        Scalar s;
        v.canonicalize();
        s.rat_ = std::move(v);
        return s;
    }

    static Scalar mod_p(std::uint32_t p, std::int64_t v) {
        Scalar s;
        s.p_ = p;
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        s.fp_ = static_cast<std::uint64_t>(r);
        return s;
    }

    static Scalar zero(FieldSpec f) { return of_int(f, 0); }
    static Scalar one(FieldSpec f) { return of_int(f, 1); }

    static Scalar of_int(FieldSpec f, std::int64_t v) {
        return f.is_rational() ? rational(mpq_class(static_cast<long>(v)))
                               : mod_p(f.p, v);
    }

    // Reduces an arbitrary-precision integer into the field.
    static Scalar of_integer(FieldSpec f, const mpz_class& v);

    FieldSpec field() const { return FieldSpec{p_}; }

    bool is_zero() const { return p_ == 0 ? rat_ == 0 : fp_ == 0; }
    bool is_one() const { return p_ == 0 ? rat_ == 1 : fp_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.p_ != b.p_) return false;
        return a.p_ == 0 ? a.rat_ == b.rat_ : a.fp_ == b.fp_;
    }

    // Canonical textual form: "a" or "a/b" over the rationals, the
    // representative in [0, p) over a prime field.
    std::string str() const;

    const mpq_class& rational_value() const { return rat_; }
    std::uint64_t mod_value() const { return fp_; }

  private:
    std::uint32_t p_ = 0;
    std::uint64_t fp_ = 0;
    mpq_class rat_ = 0;

    void check_same_field(const Scalar& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("scalar field mismatch");
    }
};

}  // namespace agraded
