#include <doctest.h>

#include "test_support.hpp"

using namespace ts;

TEST_CASE("a_degree examples") {
    CHECK(a_degree(ev({2, 1}), GradingMatrix::identity(2)) ==
          std::vector<std::int64_t>{2, 1});
    CHECK(a_degree(ev({1, 1}), GradingMatrix(1, 2, {1, -1})) ==
          std::vector<std::int64_t>{0});
    CHECK(a_degree(ev({5, 7}), GradingMatrix::zero(3, 2)) ==
          std::vector<std::int64_t>{0, 0, 0});
    CHECK_THROWS_AS(a_degree(ev({1}), GradingMatrix::identity(2)),
                    std::invalid_argument);
}

TEST_CASE("is_a_graded examples") {
    Ring R = make({"x", "y"});
    GradingMatrix total(1, 2, {1, 1});
    CHECK(is_a_graded(ideal_of(R, {"x^2 + x*y", "y^3"}), total));
    CHECK(!is_a_graded(ideal_of(R, {"x + y^2"}), total));
    CHECK(is_a_graded(ideal_of(R, {"x + y^2"}), GradingMatrix::zero(2, 2)));
}

TEST_CASE("largest_agraded_subideal examples") {
    Ring R = make({"x", "y"});
    SUBCASE("graded input is returned unchanged") {
        Ideal I = ideal_of(R, {"x^2 + x*y", "y^3"});
        ComputationReport rep;
        Ideal out =
            largest_agraded_subideal(I, GradingMatrix(1, 2, {1, 1}), &rep);
        CHECK(ideal_equal(out, I));
        REQUIRE(rep.flags.size() == 1);
        CHECK(rep.flags[0] == "input already A-graded");
    }
    SUBCASE("empty grading grades everything") {
        Ideal I = ideal_of(R, {"x + y^2", "x*y - 1"});
        Ideal out = largest_agraded_subideal(I, GradingMatrix::zero(0, 2));
        CHECK(ideal_equal(out, I));
    }
    SUBCASE("principal non-graded ideal collapses to zero") {
        Ideal out = largest_agraded_subideal(ideal_of(R, {"x + y"}),
                                             GradingMatrix::identity(2));
        CHECK(out.is_zero());
    }
    SUBCASE("zero ideal short-circuits") {
        ComputationReport rep;
        Ideal out = largest_agraded_subideal(Ideal(R, {}),
                                             GradingMatrix::identity(2), &rep);
        CHECK(out.is_zero());
        CHECK(rep.stages.empty());
    }
}

TEST_CASE("largest_monomial_subideal examples") {
    Ring R = make({"x", "y"});
    CHECK(ideal_equal(largest_monomial_subideal(ideal_of(R, {"x"})),
                      ideal_of(R, {"x"})));
    CHECK(largest_monomial_subideal(ideal_of(R, {"x + y"})).is_zero());
    Ideal out = largest_monomial_subideal(ideal_of(R, {"x^2 + y^2", "x*y"}));
    CHECK(ideal_equal(out, ideal_of(R, {"x*y", "x^3", "y^3"})));
}

TEST_CASE("contains_monomial examples") {
    Ring R = make({"x", "y"});
    CHECK(contains_monomial(ideal_of(R, {"x"})));
    CHECK(!contains_monomial(ideal_of(R, {"x + y"})));
    CHECK(contains_monomial(ideal_of(R, {"x^2 + y^2", "x*y"})));
}

TEST_CASE("monomials_up_to examples") {
    Ring R = make({"x", "y"});
    SUBCASE("principal monomial ideal") {
        auto ms = monomials_up_to(ideal_of(R, {"x"}), 2);
        REQUIRE(ms.size() == 3);
        CHECK(std::find(ms.begin(), ms.end(), ev({1, 0})) != ms.end());
        CHECK(std::find(ms.begin(), ms.end(), ev({2, 0})) != ms.end());
        CHECK(std::find(ms.begin(), ms.end(), ev({1, 1})) != ms.end());
    }
    SUBCASE("no monomials in (x + y)") {
        CHECK(monomials_up_to(ideal_of(R, {"x + y"}), 8).empty());
    }
    SUBCASE("curated example at degree 3") {
        auto ms = monomials_up_to(ideal_of(R, {"x^2 + y^2", "x*y"}), 3);
        std::vector<ExponentVector> expected = {ev({1, 1}), ev({3, 0}),
                                                ev({0, 3}), ev({2, 1}),
                                                ev({1, 2})};
        REQUIRE(ms.size() == expected.size());
        for (const auto& e : expected)
            CHECK(std::find(ms.begin(), ms.end(), e) != ms.end());
    }
}

TEST_CASE("pipeline output properties on random instances") {
    std::mt19937 rng(21);
    Ring R = make({"x", "y"}, FieldSpec{32003});
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int it = 0; it < 8; ++it) {
        Ideal I = random_ideal(rng, R, 1, 2, 3, 2);
        std::vector<std::int64_t> e(2);
        for (auto& v : e) v = entry(rng);
        GradingMatrix A(1, 2, e);
        Ideal out = largest_agraded_subideal(I, A);

        for (const Polynomial& g : out.generators()) CHECK(I.contains(g));
        CHECK(is_a_graded(out, A));
        CHECK(ideal_equal(largest_agraded_subideal(out, A), out));
    }
}

TEST_CASE("identity-grading output consists of monomials") {
    std::mt19937 rng(23);
    Ring R = make({"x", "y"}, FieldSpec{32003});
    for (int it = 0; it < 8; ++it) {
        Ideal I = random_ideal(rng, R, 1, 2, 3, 2);
        Ideal out = largest_monomial_subideal(I);
        for (const Polynomial& g : out.groebner_basis())
            CHECK(g.is_monomial());
    }
}

TEST_CASE("monotonicity at desk scale") {
    std::mt19937 rng(27);
    Ring R = make({"x", "y"}, FieldSpec{32003});
    for (int it = 0; it < 6; ++it) {
        Ideal I = random_ideal(rng, R, 1, 2, 3, 2);
        std::vector<Polynomial> more = I.generators();
        more.push_back(random_nonzero_poly(rng, R, 3, 2));
        Ideal J(R, more);
        Ideal oI = largest_monomial_subideal(I);
        Ideal oJ = largest_monomial_subideal(J);
        for (const Polynomial& g : oI.generators()) CHECK(oJ.contains(g));
    }
}

TEST_CASE("unit ideal is a fixed point") {
    Ring R = make({"x", "y"});
    Ideal unit = ideal_of(R, {"1"});
    for (const GradingMatrix& A :
         {GradingMatrix::identity(2), GradingMatrix(1, 2, {1, -1}),
          GradingMatrix::zero(2, 2)}) {
        CHECK(largest_agraded_subideal(unit, A).is_unit());
    }
}
