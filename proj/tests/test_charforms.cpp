#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flowres/charforms.hpp"

using namespace flowres;

TEST_CASE("pfaffian polynomial")
{
    for (int m : {1, 2, 3}) {
        InvariantPoly chi = pfaffian_poly(m);
        CHECK(chi.label == "euler");
        CHECK(chi.psi_hat.terms().size() == 1);
        CHECK(chi.psi_hat.coeff(Expo(m, 1)) == 1);
    }
}

TEST_CASE("pontryagin polynomials")
{
    InvariantPoly p1 = pontryagin_poly({1}, 2);
    CHECK(p1.psi_hat.coeff({2, 0}) == 1);
    CHECK(p1.psi_hat.coeff({0, 2}) == 1);
    CHECK(p1.psi_hat.terms().size() == 2);

    // (1,1): the square of e1 of the squares
    InvariantPoly p11 = pontryagin_poly({1, 1}, 4);
    CHECK(p11.psi_hat.coeff({4, 0, 0, 0}) == 1);
    CHECK(p11.psi_hat.coeff({2, 2, 0, 0}) == 2);

    // (2): e2 of the squares
    InvariantPoly p2 = pontryagin_poly({2}, 4);
    CHECK(p2.psi_hat.coeff({2, 2, 0, 0}) == 1);
    CHECK(p2.psi_hat.coeff({4, 0, 0, 0}) == 0);
    CHECK(p2.psi_hat.terms().size() == 6);

    CHECK_THROWS_AS(pontryagin_poly({1}, 3), invalid_partition_error);
    CHECK_THROWS_AS(pontryagin_poly({2}, 2), invalid_partition_error);
}

TEST_CASE("L-genus polynomial")
{
    // m = 2: (a1^2 + a2^2)/3, i.e. the classical L_1 = p_1/3
    InvariantPoly l2 = l_genus_poly(2);
    CHECK(l2.psi_hat.coeff({2, 0}) == Rat(1, 3));
    CHECK(l2.psi_hat.coeff({0, 2}) == Rat(1, 3));
    CHECK(l2.psi_hat.terms().size() == 2);
    CHECK(l2.psi_hat == (pontryagin_poly({1}, 2).psi_hat * Rat(1, 3)));

    // m = 4 coefficients from the series product
    InvariantPoly l4 = l_genus_poly(4);
    CHECK(l4.psi_hat.coeff({2, 2, 0, 0}) == Rat(1, 9));
    CHECK(l4.psi_hat.coeff({4, 0, 0, 0}) == Rat(-1, 45));

    // evaluation of L_1 at (1,2)
    CHECK(l2.psi_hat.evaluate({Rat(1), Rat(2)}) == Rat(5, 3));

    CHECK_THROWS_AS(l_genus_poly(3), unsupported_dimension_error);
}

TEST_CASE("parser accepts the catalog and basic expressions")
{
    CHECK(parse_invariant("a1*a2", 2).psi_hat == pfaffian_poly(2).psi_hat);
    CHECK(parse_invariant("E", 3).psi_hat == pfaffian_poly(3).psi_hat);
    CHECK(parse_invariant("1/3*p[1]", 2).psi_hat == l_genus_poly(2).psi_hat);

    // (p[1])^2 - 2*p[2] is a valid degree-4 invariant
    InvariantPoly q = parse_invariant("(p[1])^2 - 2*p[2]", 4);
    TruncatedPoly expected =
        pontryagin_poly({1, 1}, 4).psi_hat - pontryagin_poly({2}, 4).psi_hat * Rat(2);
    CHECK(q.psi_hat == expected);

    // e macro over an explicit variable list
    InvariantPoly s = parse_invariant("e[2](a1,a2)", 2);
    CHECK(s.psi_hat == pfaffian_poly(2).psi_hat);
}

TEST_CASE("Newton identity spot check for m = 2")
{
    // p[1]^2 - 2*p[2] equals the power sum a1^4 + a2^4 with p[2] = e2(a^2);
    // both sides expanded by brute force in the raw polynomial ring.
    auto sq = [](const TruncatedPoly& p) { return p * p; };
    TruncatedPoly a1 = TruncatedPoly::variable(2, 4, 0);
    TruncatedPoly a2 = TruncatedPoly::variable(2, 4, 1);
    TruncatedPoly power1 = sq(a1) + sq(a2);       // e1 of squares
    TruncatedPoly e2sq = sq(a1) * sq(a2);         // e2 of squares
    TruncatedPoly lhs = sq(power1) - e2sq * Rat(2);
    TruncatedPoly rhs = sq(sq(a1)) + sq(sq(a2));
    CHECK(lhs == rhs);
}

TEST_CASE("parser round trip through the canonical rendering")
{
    std::vector<InvariantPoly> catalog;
    catalog.push_back(pfaffian_poly(2));
    catalog.push_back(pfaffian_poly(3));
    catalog.push_back(pontryagin_poly({1}, 2));
    catalog.push_back(pontryagin_poly({2}, 4));
    catalog.push_back(pontryagin_poly({1, 1}, 4));
    catalog.push_back(l_genus_poly(2));
    catalog.push_back(l_genus_poly(4));
    catalog.push_back(l_genus_poly(6));
    for (const auto& p : catalog)
        CHECK(parse_invariant(render(p), p.m).psi_hat == p.psi_hat);
}

TEST_CASE("validation failures are reported distinctly")
{
    // not permutation-symmetric
    CHECK_THROWS_WITH_AS(parse_invariant("a1^2", 2), doctest::Contains("symmetry violation"),
                         invariant_violation_error);
    // wrong degree
    CHECK_THROWS_WITH_AS(parse_invariant("a1 + a2", 3),
                         doctest::Contains("homogeneity violation"),
                         invariant_violation_error);
    CHECK_THROWS_WITH_AS(parse_invariant("a1*a2 + 1", 2),
                         doctest::Contains("homogeneity violation"),
                         invariant_violation_error);
    // symmetric and homogeneous, but a single sign flip changes it:
    // for m = 2 that is exactly the Pfaffian-like odd part a1*a2... use m=4
    // with e2: symmetric, degree 2 != 4 fails homogeneity first, so build a
    // degree-4 sign-flip violator: a1*a2*a3*a4 is fine (even flips), while
    // e1^4 contains a1^3*a2 terms with odd pair sums -> flip violation is
    // impossible for symmetric homogeneous polys of even parity; check the
    // odd-parity witness a1*a2*(a1^2+a2^2) symmetrized for m = 2:
    CHECK_THROWS_WITH_AS(parse_invariant("a1^3*a2 + a1*a2^3", 4),
                         doctest::Contains("symmetry violation"),
                         invariant_violation_error);
    // degree-3 in m = 3: E is invariant only under even flips; a genuine
    // sign-flip violation needs odd total parity in a pair, e.g. e[1] cubed
    CHECK_THROWS_WITH_AS(parse_invariant("(a1 + a2 + a3)^3", 3),
                         doctest::Contains("sign-flip-invariance violation"),
                         invariant_violation_error);
    // zero polynomial
    CHECK_THROWS_AS(parse_invariant("a1*a2 - a1*a2", 2), invariant_violation_error);
}

TEST_CASE("syntax errors carry a position")
{
    CHECK_THROWS_WITH_AS(parse_invariant("a1 *", 2), doctest::Contains("position"),
                         parse_error);
    CHECK_THROWS_AS(parse_invariant("a1 $ a2", 2), parse_error);
    CHECK_THROWS_AS(parse_invariant("a9", 2), parse_error);
    CHECK_THROWS_AS(parse_invariant("a1^(1/2)", 2), parse_error);
    CHECK_THROWS_AS(parse_invariant("e[3](a1,a2)", 2), parse_error);
}

TEST_CASE("constructor invariants re-checked on catalog output")
{
    for (const auto& p : {pfaffian_poly(4), pontryagin_poly({2}, 4), l_genus_poly(4)}) {
        CHECK(p.psi_hat.degree() == p.m);
        for (const auto& [e, c] : p.psi_hat.terms())
            CHECK(total_degree(e) == p.m);
    }
}
