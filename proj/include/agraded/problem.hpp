#pragma once

#include <optional>
#include <string>

#include "agraded/ideal_ops.hpp"

namespace agraded {

// Positional diagnostic for the line-oriented problem format.
struct ParseError {
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
    std::string message;

    std::string str() const;
};

// One parsed input file: a ring declaration, a generator list, and an
// optional grading matrix.
//
// Format (one directive per line, '#' starts a comment):
//   vars x y z
//   field QQ            | field Fp <prime>      (default: QQ)
//   poly <expr>
//   grading <d> <n>     followed by d rows of n integers
//
// Expressions use integers, declared variables, + - * ^ and parentheses;
// multiplication is always explicit and '^' takes a nonnegative integer.
struct ProblemFile {
    Ring ring;
    std::vector<Polynomial> polynomials;
    std::optional<GradingMatrix> grading;

    Ideal ideal() const { return Ideal(ring, polynomials); }
};

// Throws ParseError on malformed input. The monomial order is not part of
// the format; the caller supplies it.
ProblemFile parse_problem(const std::string& text, const MonomialOrder& order);

// Canonical text that reparses to an equal ProblemFile.
std::string print_problem(const ProblemFile& p);

}  // namespace agraded
