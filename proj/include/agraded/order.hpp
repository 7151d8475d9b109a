#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace agraded {

// Exponent vector of a monomial x^b. Entries are bounded machine integers;
// overflow on addition is a hard error, never wraparound.
class ExponentVector {
  public:
    static constexpr std::uint32_t kMaxExponent = (1u << 30);

    explicit ExponentVector(std::vector<std::uint32_t> e)
        : e_(std::move(e)), deg_(0) {
        for (auto v : e_) {
            if (v > kMaxExponent)
                throw std::overflow_error("exponent out of range");
            deg_ += v;
        }
    }

    static ExponentVector zero(std::size_t n) {
        return ExponentVector(std::vector<std::uint32_t>(n, 0));
    }

    static ExponentVector unit(std::size_t n, std::size_t i) {
        std::vector<std::uint32_t> e(n, 0);
        e.at(i) = 1;
        return ExponentVector(std::move(e));
    }

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint64_t total_degree() const { return deg_; }
    bool is_zero() const { return deg_ == 0; }
    std::span<const std::uint32_t> entries() const { return e_; }

    ExponentVector operator+(const ExponentVector& o) const {
        check_len(o);
        std::vector<std::uint32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::uint64_t s = std::uint64_t{e_[i]} + o.e_[i];
            if (s > kMaxExponent)
                throw std::overflow_error("exponent overflow in product");
            r[i] = static_cast<std::uint32_t>(s);
        }
        return ExponentVector(std::move(r));
    }

    bool divides(const ExponentVector& o) const {
        check_len(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Quotient o / this; requires divisibility the other way around:
    // this->divides == caller's responsibility. a.minus(b) = a - b.
    ExponentVector minus(const ExponentVector& o) const {
        check_len(o);
        std::vector<std::uint32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i])
                throw std::invalid_argument("exponent subtraction underflow");
            r[i] = e_[i] - o.e_[i];
        }
        return ExponentVector(std::move(r));
    }

    static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
        a.check_len(b);
        std::vector<std::uint32_t> r(a.e_.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        return ExponentVector(std::move(r));
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.e_ == b.e_;
    }

  private:
    std::vector<std::uint32_t> e_;
    std::uint64_t deg_;

    void check_len(const ExponentVector& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("exponent vector length mismatch");
    }
};

// Total order on exponent vectors. Lex, grevlex, a weight vector refined by
// grevlex, or a two-block elimination order.
class MonomialOrder {
  public:
    enum class Kind { Lex, GrevLex, WeightedGrevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }

    static MonomialOrder weighted_grevlex(std::vector<std::int64_t> weights) {
        MonomialOrder o(Kind::WeightedGrevLex);
        o.weights_ = std::move(weights);
        return o;
    }

    // Compares the first `split` coordinates under `first`; ties fall
    // through to the remaining coordinates under `second`.
    static MonomialOrder block(std::size_t split, MonomialOrder first,
                               MonomialOrder second) {
        MonomialOrder o(Kind::Block);
        o.split_ = split;
        o.first_ = std::make_shared<MonomialOrder>(std::move(first));
        o.second_ = std::make_shared<MonomialOrder>(std::move(second));
        return o;
    }

    Kind kind() const { return kind_; }

    // Three-way comparison: -1, 0, +1 for a < b, a = b, a > b.
    int compare(std::span<const std::uint32_t> a,
                std::span<const std::uint32_t> b) const;

    int compare(const ExponentVector& a, const ExponentVector& b) const {
        if (a.size() != b.size())
            throw std::invalid_argument("exponent vector length mismatch");
        return compare(a.entries(), b.entries());
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

  private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<std::int64_t> weights_;
    std::size_t split_ = 0;
    std::shared_ptr<const MonomialOrder> first_;
    std::shared_ptr<const MonomialOrder> second_;
};

}  // namespace agraded
