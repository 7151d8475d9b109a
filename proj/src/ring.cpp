#include "agraded/ring.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace agraded {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    }
    return true;
}

}  // namespace

RingContext::RingContext(std::vector<std::string> variables, FieldSpec field,
                         MonomialOrder order)
    : vars_(std::move(variables)), field_(field), order_(std::move(order)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!valid_identifier(v))
            throw std::invalid_argument("invalid variable name: '" + v + "'");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name: '" + v + "'");
    }
    if (!field_.is_rational()) {
        if (field_.p >= (1u << 31) || !is_prime(field_.p))
            throw std::invalid_argument("field modulus must be a prime < 2^31");
    }
}

std::size_t RingContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return npos;
}

Ring make_ring(std::vector<std::string> variables, FieldSpec field,
               MonomialOrder order) {
    return std::make_shared<const RingContext>(std::move(variables), field,
                                               std::move(order));
}

}  // namespace agraded
