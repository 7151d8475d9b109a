#include "agraded/scalar.hpp"

namespace agraded {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p),
                 new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("modulus is not prime");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::of_integer(FieldSpec f, const mpz_class& v) {
    if (f.is_rational()) return rational(mpq_class(v));
    mpz_class r = v % f.p;
    if (r < 0) r += f.p;
    return mod_p(f.p, r.get_si());
}

Scalar Scalar::operator-() const {
    if (p_ == 0) return rational(-rat_);
    return fp_ == 0 ? *this : mod_p(p_, static_cast<std::int64_t>(p_ - fp_));
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return rational(rat_ + o.rat_);
    std::uint64_t s = fp_ + o.fp_;
    if (s >= p_) s -= p_;
    Scalar r;
    r.p_ = p_;
    r.fp_ = s;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return rational(rat_ * o.rat_);
    Scalar r;
    r.p_ = p_;
    r.fp_ = (fp_ * o.fp_) % p_;  // p < 2^31 keeps the product in range
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (p_ == 0) return rational(rat_ / o.rat_);
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (p_ == 0) return rational(1 / rat_);
    Scalar r;
    r.p_ = p_;
    r.fp_ = mod_inverse(fp_, p_);
    return r;
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(fp_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

}  // namespace agraded
