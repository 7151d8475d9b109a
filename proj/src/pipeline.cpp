#include "agraded/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace agraded {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

void note_stage(ComputationReport* rep, const std::string& name,
                std::size_t basis_size, double millis) {
    if (rep) rep->stages.push_back({name, basis_size, millis});
}

void note_flag(ComputationReport* rep, const std::string& flag) {
    if (rep) rep->flags.push_back(flag);
}

}  // namespace

std::string ComputationReport::str() const {
    std::ostringstream os;
    os << "input: " << input_generators << " generators, " << variables
       << " variables, grading rows " << grading_rows << "\n";
    for (const auto& f : flags) os << "flag: " << f << "\n";
    for (const auto& s : stages)
        os << "stage " << s.name << ": basis size " << s.basis_size << ", "
           << s.millis << " ms\n";
    return os.str();
}

bool is_a_graded(const Ideal& I, const GradingMatrix& A) {
    if (A.cols() != I.ring()->variable_count())
        throw std::invalid_argument("is_a_graded: dimension mismatch");
    for (const Polynomial& g : I.groebner_basis()) {
        auto d0 = a_degree(g.terms().front().exp, A);
        for (const Term& t : g.terms())
            if (a_degree(t.exp, A) != d0) return false;
    }
    return true;
}

Ideal largest_agraded_subideal(const Ideal& I, const GradingMatrix& A,
                               ComputationReport* report) {
    const Ring& R = I.ring();
    if (A.cols() != R->variable_count())
        throw std::invalid_argument(
            "largest_agraded_subideal: dimension mismatch");
    if (report) {
        report->input_generators = I.generators().size();
        report->variables = R->variable_count();
        report->grading_rows = A.rows();
    }
    if (I.is_zero()) {
        note_flag(report, "zero ideal");
        return I;
    }
    if (A.rows() == 0) {
        note_flag(report, "empty grading");
        return Ideal::from_groebner(R, I.groebner_basis());
    }
    if (is_a_graded(I, A)) {
        note_flag(report, "input already A-graded");
        return Ideal::from_groebner(R, I.groebner_basis());
    }

    auto t0 = Clock::now();
    ExtendedRing ext = make_extended_ring(R, A.rows());
    Ideal substituted = substitute_grading(I, A, ext);
    note_stage(report, "substitute", substituted.generators().size(),
               ms_since(t0));

    t0 = Clock::now();
    Ideal saturated = saturate(substituted, t_product(ext));
    note_stage(report, "saturate", saturated.groebner_basis().size(),
               ms_since(t0));

    t0 = Clock::now();
    std::vector<std::size_t> t_vars(ext.t_count);
    for (std::size_t i = 0; i < ext.t_count; ++i) t_vars[i] = i;
    Ideal result = eliminate(saturated, t_vars, R->order());
    note_stage(report, "eliminate", result.groebner_basis().size(),
               ms_since(t0));
    return result;
}

Ideal largest_monomial_subideal(const Ideal& I, ComputationReport* report) {
    return largest_agraded_subideal(
        I, GradingMatrix::identity(I.ring()->variable_count()), report);
}

bool contains_monomial(const Ideal& I) {
    const Ring& R = I.ring();
    const std::size_t n = R->variable_count();
    Polynomial prod = Polynomial::one(R);
    for (std::size_t i = 0; i < n; ++i)
        prod = prod * Polynomial::variable(R, i);
    return saturate(I, prod).is_unit();
}

std::vector<ExponentVector> monomials_up_to(const Ideal& I, std::uint64_t D) {
    Ideal M = largest_monomial_subideal(I);
    std::vector<ExponentVector> gens;
    for (const Polynomial& g : M.groebner_basis())
        gens.push_back(g.leading_monomial());

    const std::size_t n = I.ring()->variable_count();
    std::vector<ExponentVector> out;
    std::vector<std::uint32_t> cur(n, 0);
    // enumerate all b with deg b <= D, keep multiples of a generator
    std::function<void(std::size_t, std::uint64_t)> rec =
        [&](std::size_t i, std::uint64_t left) {
            if (i == n) {
                ExponentVector b(cur);
                for (const ExponentVector& g : gens)
                    if (g.divides(b)) {
                        out.push_back(std::move(b));
                        break;
                    }
                return;
            }
            for (std::uint32_t e = 0; e <= left; ++e) {
                cur[i] = e;
                rec(i + 1, left - e);
            }
            cur[i] = 0;
        };
    rec(0, D);
    const MonomialOrder& ord = I.ring()->order();
    std::sort(out.begin(), out.end(),
              [&](const ExponentVector& a, const ExponentVector& b) {
                  return ord.compare(a, b) < 0;
              });
    return out;
}

}  // namespace agraded
