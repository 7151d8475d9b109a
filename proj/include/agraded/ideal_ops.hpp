#pragma once

#include <cstdint>
#include <vector>

#include "agraded/groebner.hpp"

namespace agraded {

// d x n integer matrix whose columns assign each variable its degree
// vector. Entries may be negative.
class GradingMatrix {
  public:
    GradingMatrix(std::size_t rows, std::size_t cols,
                  std::vector<std::int64_t> entries);

    static GradingMatrix identity(std::size_t n);
    static GradingMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::vector<std::int64_t> column(std::size_t c) const;

    friend bool operator==(const GradingMatrix&, const GradingMatrix&) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<std::int64_t> entries_;
};

// The degree vector A*b of a monomial x^b.
std::vector<std::int64_t> a_degree(const ExponentVector& b,
                                   const GradingMatrix& A);

// Base ring extended by d fresh grading variables t1..td (renamed with
// trailing underscores on collision), placed in front under a two-block
// elimination order: t-block first, grevlex inside each block. With
// d == 0 the combined ring is the base ring itself.
struct ExtendedRing {
    Ring base;
    std::size_t t_count;
    Ring combined;  // variables: t1..td, then the base variables
};

ExtendedRing make_extended_ring(const Ring& base, std::size_t d);

// Same generators viewed in the combined ring.
Ideal extend_ring(const Ideal& I, const ExtendedRing& ext);

// Maps a polynomial into `target`; index_map[i] gives the target index of
// source variable i.
Polynomial map_to_ring(const Polynomial& f, const Ring& target,
                       const std::vector<std::size_t>& index_map);

// Applies x_i -> t^{a_i} x_i to each generator, a_i the i-th column of A,
// then clears t-denominators per generator: the componentwise minimum of
// the t-exponent vectors over its terms is subtracted, so the result is
// polynomial in t and the minimum becomes zero.
Ideal substitute_grading(const Ideal& I, const GradingMatrix& A,
                         const ExtendedRing& ext);
Ideal substitute_grading(const Ideal& I, const GradingMatrix& A);

// (I : f^infinity), computed by adjoining a fresh variable u in front, adding
// 1 - u*f, and eliminating u.
Ideal saturate(const Ideal& I, const Polynomial& f);

// I intersected with the subring on the kept variables: Groebner basis
// under a block order with the dropped variables in front, keep the
// elements free of them, reinterpret in the smaller ring whose order is
// `target_order`.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars,
                const MonomialOrder& target_order);

// Product t1*...*td of the extension variables (1 when d == 0).
Polynomial t_product(const ExtendedRing& ext);

// Fresh name not already used in `taken`: `stem` with underscores appended.
std::string fresh_name(std::string stem, const std::vector<std::string>& taken);

}  // namespace agraded
