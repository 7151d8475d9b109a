#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agraded/order.hpp"
#include "agraded/scalar.hpp"

namespace agraded {

// A named polynomial ring k[x_1,...,x_n] with a fixed monomial order.
// Polynomials interoperate only when their rings compare equal.
class RingContext {
  public:
    RingContext(std::vector<std::string> variables, FieldSpec field,
                MonomialOrder order);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t variable_count() const { return vars_.size(); }
    FieldSpec field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    // Index of a declared variable, or npos.
    std::size_t index_of(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.vars_ == b.vars_ && a.field_ == b.field_ &&
               a.order_ == b.order_;
    }

  private:
    std::vector<std::string> vars_;
    FieldSpec field_;
    MonomialOrder order_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(std::vector<std::string> variables, FieldSpec field,
               MonomialOrder order);

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace agraded
