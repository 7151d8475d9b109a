#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agraded/ideal_ops.hpp"

namespace agraded {

// Provenance of one pipeline run, for debugging and reports. Purely
// informational; never feeds back into results.
struct ComputationReport {
    struct Stage {
        std::string name;
        std::size_t basis_size = 0;
        double millis = 0.0;
    };
    std::size_t input_generators = 0;
    std::size_t variables = 0;
    std::size_t grading_rows = 0;
    std::vector<Stage> stages;
    std::vector<std::string> flags;  // short-circuits taken

    std::string str() const;
};

// True iff every reduced Groebner basis element of I has all terms of one
// A-degree. Sound and complete: the reduced basis of a graded ideal is
// homogeneous.
bool is_a_graded(const Ideal& I, const GradingMatrix& A);

// The largest A-graded ideal contained in I, presented by its reduced
// Groebner basis under I's ring order. Pipeline: substitute the grading,
// saturate by the product of the grading variables, eliminate them.
Ideal largest_agraded_subideal(const Ideal& I, const GradingMatrix& A,
                               ComputationReport* report = nullptr);

// Identity-grading special case: the ideal generated by all monomials in I.
Ideal largest_monomial_subideal(const Ideal& I,
                                ComputationReport* report = nullptr);

// True iff I contains at least one monomial, i.e. the saturation of I at
// the product of all variables is the unit ideal.
bool contains_monomial(const Ideal& I);

// All exponent vectors b with total degree <= D and x^b in I, sorted
// ascending under I's ring order.
std::vector<ExponentVector> monomials_up_to(const Ideal& I, std::uint64_t D);

}  // namespace agraded
