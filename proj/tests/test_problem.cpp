#include <doctest.h>

#include "test_support.hpp"

using namespace ts;

namespace {

bool problems_equal(const ProblemFile& a, const ProblemFile& b) {
    if (!same_ring(a.ring, b.ring)) return false;
    if (a.polynomials.size() != b.polynomials.size()) return false;
    for (std::size_t i = 0; i < a.polynomials.size(); ++i)
        if (!(a.polynomials[i] == b.polynomials[i])) return false;
    if (a.grading.has_value() != b.grading.has_value()) return false;
    if (a.grading && !(*a.grading == *b.grading)) return false;
    return true;
}

}  // namespace

TEST_CASE("parse_problem examples") {
    SUBCASE("two generators over QQ") {
        ProblemFile pf = parse_problem(
            "vars x y\nfield QQ\npoly x^2 + y^2 - 1\npoly x*y\n",
            MonomialOrder::grevlex());
        CHECK(pf.ring->variables() == std::vector<std::string>{"x", "y"});
        REQUIRE(pf.polynomials.size() == 2);
        CHECK(pf.polynomials[0] == pp(pf.ring, "x^2 + y^2 - 1"));
        CHECK(pf.polynomials[1] == pp(pf.ring, "x*y"));
    }
    SUBCASE("modular reduction of coefficients") {
        ProblemFile pf = parse_problem("vars x\nfield Fp 7\npoly 8*x\n",
                                       MonomialOrder::grevlex());
        CHECK(pf.polynomials[0] == Polynomial::variable(pf.ring, 0));
    }
    SUBCASE("unknown variable carries its position") {
        try {
            parse_problem("vars x y\npoly x^2 + z\n",
                          MonomialOrder::grevlex());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(e.column == 12);
            CHECK(e.message.find("unknown variable") != std::string::npos);
        }
    }
}

TEST_CASE("parse_problem error cases") {
    MonomialOrder g = MonomialOrder::grevlex();
    SUBCASE("malformed exponent") {
        try {
            parse_problem("vars x\npoly x^y\n", g);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(e.message.find("malformed exponent") != std::string::npos);
        }
    }
    SUBCASE("non-prime modulus") {
        CHECK_THROWS_AS(parse_problem("vars x\nfield Fp 6\npoly x\n", g),
                        ParseError);
    }
    SUBCASE("grading shape mismatch") {
        CHECK_THROWS_AS(
            parse_problem("vars x y\npoly x\ngrading 1 3\n1 2 3\n", g),
            ParseError);
        CHECK_THROWS_AS(
            parse_problem("vars x y\npoly x\ngrading 2 2\n1 2\n", g),
            ParseError);
        CHECK_THROWS_AS(
            parse_problem("vars x y\npoly x\ngrading 1 2\n1 2 3\n", g),
            ParseError);
    }
    SUBCASE("missing vars") {
        CHECK_THROWS_AS(parse_problem("poly x\n", g), ParseError);
    }
    SUBCASE("implicit multiplication is rejected") {
        CHECK_THROWS_AS(parse_problem("vars x y\npoly 2 x\n", g), ParseError);
        CHECK_THROWS_AS(parse_problem("vars x y\npoly x y\n", g), ParseError);
    }
}

TEST_CASE("comments, negatives and parentheses") {
    ProblemFile pf = parse_problem(
        "# a comment\nvars x y  # trailing\nfield QQ\n"
        "poly -(x - 2)*(x + 2) + x^2\n"
        "grading 2 2\n1 -1\n0 2\n",
        MonomialOrder::grevlex());
    CHECK(pf.polynomials[0] == pp(pf.ring, "4"));
    REQUIRE(pf.grading.has_value());
    CHECK(pf.grading->at(0, 1) == -1);
    CHECK(pf.grading->at(1, 1) == 2);
}

TEST_CASE("print/parse round trip") {
    MonomialOrder g = MonomialOrder::grevlex();
    std::vector<std::string> corpus = {
        "vars x y\nfield QQ\npoly x^2 + y^2 - 1\npoly x*y\n",
        "vars x y z\nfield Fp 32003\npoly 31*x*y - z^3\n",
        "vars a b\nfield QQ\npoly -a + b\npoly a*b - 1\ngrading 1 2\n1 -1\n",
        "vars x\nfield QQ\npoly -2*x - 1\n",
    };
    for (const std::string& text : corpus) {
        ProblemFile once = parse_problem(text, g);
        std::string printed = print_problem(once);
        ProblemFile twice = parse_problem(printed, g);
        CHECK(problems_equal(once, twice));
        CHECK(print_problem(twice) == printed);
    }
}
