#include "agraded/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace agraded {

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    if (!ring_) throw std::invalid_argument("polynomial needs a ring");
    const std::size_t n = ring_->variable_count();
    for (const Term& t : terms_) {
        if (t.exp.size() != n)
            throw std::invalid_argument("term arity does not match ring");
        if (t.coeff.field() != ring_->field())
            throw std::invalid_argument("coefficient field does not match ring");
    }
    const MonomialOrder& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.exp, b.exp) > 0;
    });
    // merge equal exponents, drop zeros
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp) {
            merged.back().coeff = merged.back().coeff + t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (Term& t : merged)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

Polynomial Polynomial::constant(Ring ring, Scalar c) {
    std::size_t n = ring->variable_count();
    std::vector<Term> ts;
    ts.push_back(Term{std::move(c), ExponentVector::zero(n)});
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::monomial(Ring ring, Scalar c, ExponentVector e) {
    std::vector<Term> ts;
    ts.push_back(Term{std::move(c), std::move(e)});
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
    std::size_t n = ring->variable_count();
    if (i >= n) throw std::out_of_range("variable index out of range");
    Scalar c = Scalar::one(ring->field());
    return monomial(std::move(ring), std::move(c), ExponentVector::unit(n, i));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.exp.total_degree());
    return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_))
        throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    // merge two sorted term lists
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].exp, o.terms_[j].exp);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back(Term{std::move(s), terms_[i].exp});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r = zero(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::times_term(const Scalar& c,
                                  const ExponentVector& e) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back(Term{t.coeff * c, t.exp + e});
    return r;  // multiplying by a single term preserves sortedness
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial acc = zero(ring_);
    for (const Term& t : o.terms_) acc = acc + times_term(t.coeff, t.exp);
    return acc;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    return times_term(c, ExponentVector::zero(ring_->variable_count()));
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coefficient().inverse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].exp == b.terms_[i].exp)) return false;
        if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
}

std::string monomial_str(const RingContext& ring, const ExponentVector& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << ring.variables()[i];
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    return os.str();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Scalar c = t.coeff;
        bool negative = false;
        if (ring_->field().is_rational() && c.rational_value() < 0) {
            negative = true;
            c = -c;
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string mono = monomial_str(*ring_, t.exp);
        if (mono.empty()) {
            os << c.str();
        } else if (c.is_one()) {
            os << mono;
        } else {
            os << c.str() << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace agraded
