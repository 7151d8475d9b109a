#include "agraded/order.hpp"

namespace agraded {

namespace {

int lex_cmp(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int grevlex_cmp(std::span<const std::uint32_t> a,
                std::span<const std::uint32_t> b) {
    std::uint64_t da = 0, db = 0;
    for (auto v : a) da += v;
    for (auto v : b) db += v;
    if (da != db) return da > db ? 1 : -1;
    // equal degree: the last coordinate where they differ decides,
    // with the smaller exponent winning
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(std::span<const std::uint32_t> a,
                           std::span<const std::uint32_t> b) const {
    if (a.size() != b.size())
        throw std::invalid_argument("exponent vector length mismatch");
    switch (kind_) {
        case Kind::Lex:
            return lex_cmp(a, b);
        case Kind::GrevLex:
            return grevlex_cmp(a, b);
        case Kind::WeightedGrevLex: {
            if (weights_.size() != a.size())
                throw std::invalid_argument("weight vector length mismatch");
            std::int64_t wa = 0, wb = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                wa += weights_[i] * static_cast<std::int64_t>(a[i]);
                wb += weights_[i] * static_cast<std::int64_t>(b[i]);
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            return grevlex_cmp(a, b);
        }
        case Kind::Block: {
            if (split_ > a.size())
                throw std::invalid_argument("block split exceeds length");
            int c = first_->compare(a.subspan(0, split_), b.subspan(0, split_));
            if (c != 0) return c;
            return second_->compare(a.subspan(split_), b.subspan(split_));
        }
    }
    throw std::logic_error("unreachable");
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case MonomialOrder::Kind::Lex:
        case MonomialOrder::Kind::GrevLex:
            return true;
        case MonomialOrder::Kind::WeightedGrevLex:
            return a.weights_ == b.weights_;
        case MonomialOrder::Kind::Block:
            return a.split_ == b.split_ && *a.first_ == *b.first_ &&
                   *a.second_ == *b.second_;
    }
    return false;
}

}  // namespace agraded
