#include <doctest.h>

#include "test_support.hpp"

using namespace ts;

TEST_CASE("grading matrix basics") {
    GradingMatrix A = GradingMatrix::identity(3);
    CHECK(A.at(1, 1) == 1);
    CHECK(A.at(0, 2) == 0);
    CHECK(A.column(2) == std::vector<std::int64_t>{0, 0, 1});
    CHECK_THROWS_AS(GradingMatrix(2, 2, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("substitute_grading examples") {
    Ring R = make({"x", "y"});
    SUBCASE("identity grading tags each variable") {
        Ideal I = ideal_of(R, {"x + y"});
        Ideal J = substitute_grading(I, GradingMatrix::identity(2));
        Ring E = J.ring();
        CHECK(E->variables() ==
              std::vector<std::string>{"t1", "t2", "x", "y"});
        REQUIRE(J.generators().size() == 1);
        CHECK(J.generators()[0] == pp(E, "t1*x + t2*y"));
    }
    SUBCASE("negative entries are cleared minimally") {
        Ideal I = ideal_of(R, {"x + y"});
        Ideal J = substitute_grading(I, GradingMatrix(1, 2, {1, -1}));
        CHECK(J.generators()[0] == pp(J.ring(), "t1^2*x + y"));
    }
    SUBCASE("already homogeneous generators pick up a common t factor") {
        Ideal I = ideal_of(R, {"x^2 + y"});
        Ideal J = substitute_grading(I, GradingMatrix(1, 2, {1, 2}));
        CHECK(J.generators()[0] == pp(J.ring(), "t1^2*x^2 + t1^2*y"));
    }
    SUBCASE("dimension mismatch") {
        Ideal I = ideal_of(R, {"x"});
        CHECK_THROWS_AS(substitute_grading(I, GradingMatrix::identity(3)),
                        std::invalid_argument);
    }
}

TEST_CASE("clearing minimality on random input") {
    std::mt19937 rng(7);
    Ring R = make({"x", "y", "z"}, FieldSpec{32003});
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int it = 0; it < 30; ++it) {
        Ideal I = random_ideal(rng, R, 1, 3, 4, 3);
        std::vector<std::int64_t> e(6);
        for (auto& v : e) v = entry(rng);
        GradingMatrix A(2, 3, e);
        Ideal J = substitute_grading(I, A);
        REQUIRE(J.generators().size() == I.generators().size());
        for (std::size_t gi = 0; gi < J.generators().size(); ++gi) {
            const Polynomial& g = J.generators()[gi];
            const Polynomial& src = I.generators()[gi];
            for (std::size_t r = 0; r < 2; ++r) {
                std::int64_t raw_low = a_degree(src.terms()[0].exp, A)[r];
                for (const Term& t : src.terms())
                    raw_low = std::min(raw_low, a_degree(t.exp, A)[r]);
                std::uint32_t low = ExponentVector::kMaxExponent;
                for (const Term& t : g.terms()) low = std::min(low, t.exp[r]);
                // only negative exponents are cleared, and minimally so
                CHECK(static_cast<std::int64_t>(low) ==
                      std::max<std::int64_t>(raw_low, 0));
            }
        }
    }
}

TEST_CASE("saturate examples") {
    Ring R = make({"x", "y"});
    CHECK(ideal_equal(saturate(ideal_of(R, {"x*y"}), pp(R, "x")),
                      ideal_of(R, {"y"})));
    CHECK(saturate(ideal_of(R, {"x^2"}), pp(R, "x")).is_unit());
    Ideal P = ideal_of(R, {"x + y"});
    Ideal S = saturate(P, pp(R, "x"));
    CHECK(ideal_equal(S, P));
    CHECK_THROWS_AS(saturate(P, Polynomial::zero(R)), std::invalid_argument);
}

TEST_CASE("saturate (x+y) by x agrees with brute force at low degree") {
    // x^k * m in (x+y) never holds for monomials m of degree <= 4 unless
    // m itself is in (x+y)
    Ring R = make({"x", "y"});
    Ideal P = ideal_of(R, {"x + y"});
    MonomialBasis monos(R, 4);
    for (std::size_t i = 0; i < monos.size(); ++i) {
        Polynomial m = Polynomial::monomial(R, Scalar::one(R->field()),
                                            monos.at(i));
        bool in_sat = false;
        Polynomial xk = Polynomial::one(R);
        for (int k = 0; k <= 4; ++k) {
            if (P.contains(xk * m)) in_sat = true;
            xk = xk * pp(R, "x");
        }
        CHECK(in_sat == P.contains(m));
    }
}

TEST_CASE("saturation absorbs and is idempotent") {
    std::mt19937 rng(11);
    Ring R = make({"x", "y"}, FieldSpec{32003});
    for (int it = 0; it < 15; ++it) {
        Ideal I = random_ideal(rng, R, 1, 2, 3, 3);
        Polynomial f = random_nonzero_poly(rng, R, 2, 2);
        Ideal S = saturate(I, f);
        for (const Polynomial& g : I.generators()) CHECK(S.contains(g));
        CHECK(ideal_equal(saturate(S, f), S));
        // multiplying a member by f keeps it a member of the saturation
        for (const Polynomial& g : S.generators())
            CHECK(saturate(I, f).contains(g * f * f));
    }
}

TEST_CASE("eliminate examples") {
    Ring R = make({"x", "y"});
    SUBCASE("dropping the only generator's variable") {
        Ideal E = eliminate(ideal_of(R, {"y"}), {1}, MonomialOrder::grevlex());
        CHECK(E.ring()->variables() == std::vector<std::string>{"x"});
        CHECK(E.is_zero());
    }
    SUBCASE("empty drop set is the identity") {
        Ideal I = ideal_of(R, {"x^2 - y"});
        Ideal E = eliminate(I, {}, MonomialOrder::grevlex());
        CHECK(ideal_equal(E, I));
    }
    SUBCASE("diagonal substitution leaves x^2") {
        Ideal I = ideal_of(R, {"x - y", "y^2"});
        Ideal E = eliminate(I, {1}, MonomialOrder::grevlex());
        Ring S = E.ring();
        REQUIRE(E.groebner_basis().size() == 1);
        CHECK(E.groebner_basis()[0] == pp(S, "x^2"));
        // no linear polynomial in x alone lies in I
        CHECK(!I.contains(pp(R, "x")));
        CHECK(!I.contains(pp(R, "x + 1")));
        CHECK(!I.contains(pp(R, "x - 1")));
    }
    SUBCASE("invalid index") {
        CHECK_THROWS_AS(
            eliminate(ideal_of(R, {"x"}), {5}, MonomialOrder::grevlex()),
            std::out_of_range);
    }
}

TEST_CASE("elimination soundness and desk-scale completeness") {
    std::mt19937 rng(13);
    Ring R = make({"x", "y", "z"}, FieldSpec{32003});
    for (int it = 0; it < 10; ++it) {
        Ideal I = random_ideal(rng, R, 2, 3, 3, 3);
        Ideal E = eliminate(I, {2}, MonomialOrder::grevlex());
        Ring S = E.ring();
        std::vector<std::size_t> into_big = {0, 1};
        for (const Polynomial& g : E.groebner_basis()) {
            for (const Term& t : g.terms()) CHECK(t.exp.size() == 2);
            CHECK(I.contains(map_to_ring(g, R, into_big)));
        }
        for (int k = 0; k < 10; ++k) {
            Polynomial p = random_poly(rng, S, 4, 4);
            if (I.contains(map_to_ring(p, R, into_big)))
                CHECK(E.contains(p));
        }
    }
}

TEST_CASE("extend_ring examples") {
    Ring R = make({"x", "y"});
    ExtendedRing ext = make_extended_ring(R, 2);
    Ideal I = extend_ring(ideal_of(R, {"x + y"}), ext);
    CHECK(I.ring()->variables() ==
          std::vector<std::string>{"t1", "t2", "x", "y"});
    CHECK(I.generators()[0] == pp(ext.combined, "x + y"));
    CHECK(extend_ring(Ideal(R, {}), ext).is_zero());
    ExtendedRing none = make_extended_ring(R, 0);
    CHECK(same_ring(none.combined, R));
}

TEST_CASE("fresh variable names avoid capture") {
    Ring R = make({"t1", "u", "x"});
    ExtendedRing ext = make_extended_ring(R, 1);
    CHECK(ext.combined->variables()[0] == "t1_");
    Ideal I = ideal_of(R, {"x^2"});
    // saturation by x must not capture the user's own 'u'
    CHECK(saturate(I, pp(R, "x")).is_unit());
}

TEST_CASE("unit invariance of Laurent clearing") {
    std::mt19937 rng(17);
    Ring R = make({"x", "y"}, FieldSpec{32003});
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<std::uint32_t> shift(0, 2);
    for (int it = 0; it < 10; ++it) {
        Ideal I = random_ideal(rng, R, 1, 2, 3, 2);
        std::vector<std::int64_t> e(2);
        for (auto& v : e) v = entry(rng);
        GradingMatrix A(1, 2, e);
        ExtendedRing ext = make_extended_ring(R, 1);
        Ideal J = substitute_grading(I, A, ext);

        auto finish = [&](const Ideal& K) {
            return eliminate(saturate(K, t_product(ext)), {0}, R->order());
        };
        Ideal expected = finish(J);

        // extra t^c unit multipliers per generator change nothing
        std::vector<Polynomial> scaled;
        for (const Polynomial& g : J.generators()) {
            std::vector<std::uint32_t> c(ext.combined->variable_count(), 0);
            c[0] = shift(rng);
            scaled.push_back(g.times_term(
                Scalar::one(R->field()), ExponentVector(std::move(c))));
        }
        Ideal got = finish(Ideal(ext.combined, std::move(scaled)));
        CHECK(ideal_equal(got, expected));
    }
}
