#include <doctest.h>

#include "abct/classes.hpp"
#include "abct/matrix.hpp"
#include "abct/symfunc.hpp"

using namespace abct;

namespace {

SchurExpansion expansion(std::initializer_list<std::pair<Partition, long>> terms) {
    SchurExpansion e;
    for (const auto& [p, c] : terms) e.add_term(p, c);
    return e;
}

Partition random_partition(Rng& rng, int max_part) {
    const int a = static_cast<int>(rng.draw_int(0, max_part));
    const int b = static_cast<int>(rng.draw_int(0, a));
    const int c = static_cast<int>(rng.draw_int(0, b));
    return Partition(a, b, c);
}

SchurExpansion random_expansion(Rng& rng, int max_part, int nterms, bool nonnegative = false) {
    SchurExpansion e;
    for (int t = 0; t < nterms; ++t) {
        long c = rng.draw_nonzero(9);
        if (nonnegative) c = std::abs(c);
        e.add_term(random_partition(rng, max_part), c);
    }
    return e;
}

}  // namespace

TEST_CASE("pieri rule, single box") {
    const auto s1 = SchurExpansion::single(Partition(1));
    CHECK(pieri_mul(s1, 1) == expansion({{Partition(2), 1}, {Partition(1, 1), 1}}));
}

TEST_CASE("pieri rule on s_{2,1}") {
    const auto s21 = SchurExpansion::single(Partition(2, 1));
    CHECK(pieri_mul(s21, 1) ==
          expansion({{Partition(3, 1), 1}, {Partition(2, 2), 1}, {Partition(2, 1, 1), 1}}));
}

TEST_CASE("pieri rejects m < 1") {
    CHECK_THROWS_AS(pieri_mul(SchurExpansion::unit(), 0), std::invalid_argument);
}

TEST_CASE("schur_mul column times box") {
    const auto prod = schur_mul(SchurExpansion::single(Partition(1, 1)), SchurExpansion::single(Partition(1)));
    CHECK(prod == expansion({{Partition(2, 1), 1}, {Partition(1, 1, 1), 1}}));
}

TEST_CASE("schur_mul s_{2,1} * s_{1,1}") {
    const auto prod =
        schur_mul(SchurExpansion::single(Partition(2, 1)), SchurExpansion::single(Partition(1, 1)));
    CHECK(prod == expansion({{Partition(3, 2), 1}, {Partition(3, 1, 1), 1}, {Partition(2, 2, 1), 1}}));
}

TEST_CASE("schur_mul e3 squared") {
    const auto e3 = SchurExpansion::single(Partition(1, 1, 1));
    CHECK(schur_mul(e3, e3) == SchurExpansion::single(Partition(2, 2, 2)));
}

TEST_CASE("monomial form of s_1, s_{1,1}, s_2") {
    SymPoly3 x = to_monomial_form(SchurExpansion::single(Partition(1)));
    CHECK(x == SymPoly3::linear(1, 1, 1));

    SymPoly3 e2 = to_monomial_form(SchurExpansion::single(Partition(1, 1)));
    SymPoly3 e2_expected;
    e2_expected.add_term({1, 1, 0}, 1);
    e2_expected.add_term({1, 0, 1}, 1);
    e2_expected.add_term({0, 1, 1}, 1);
    CHECK(e2 == e2_expected);

    SymPoly3 h2 = to_monomial_form(SchurExpansion::single(Partition(2)));
    SymPoly3 h2_expected = e2_expected;
    h2_expected.add_term({2, 0, 0}, 1);
    h2_expected.add_term({0, 2, 0}, 1);
    h2_expected.add_term({0, 0, 2}, 1);
    CHECK(h2 == h2_expected);
}

TEST_CASE("decompose e_2 and s_1 squared") {
    SymPoly3 e2;
    e2.add_term({1, 1, 0}, 1);
    e2.add_term({1, 0, 1}, 1);
    e2.add_term({0, 1, 1}, 1);
    CHECK(decompose_to_schur(e2) == SchurExpansion::single(Partition(1, 1)));

    const SymPoly3 s1 = SymPoly3::linear(1, 1, 1);
    CHECK(decompose_to_schur(s1 * s1) == expansion({{Partition(2), 1}, {Partition(1, 1), 1}}));
}

TEST_CASE("decompose rejects non-symmetric input") {
    SymPoly3 p;
    p.add_term({1, 0, 0}, 1);  // x1 alone
    CHECK_FALSE(p.is_symmetric());
    CHECK_THROWS_AS(decompose_to_schur(p), std::invalid_argument);
}

TEST_CASE("f_4 round-trips through monomial form") {
    const SchurExpansion f4 = abct_recursion(4);
    CHECK(f4 == expansion({{Partition(4), 57},
                           {Partition(3, 1), 63},
                           {Partition(2, 2), 27},
                           {Partition(2, 1, 1), 18}}));
    CHECK(decompose_to_schur(to_monomial_form(f4)) == f4);
}

TEST_CASE("round-trip property, random expansions up to degree 12") {
    Rng rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = random_expansion(rng, 4, 1 + static_cast<int>(rng.draw_int(0, 3)));
        CHECK(decompose_to_schur(to_monomial_form(e)) == e);
    }
}

TEST_CASE("schur_mul agrees with the monomial-basis oracle") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_expansion(rng, 3, 2);
        const auto b = random_expansion(rng, 2, 2);
        const auto via_lr = schur_mul(a, b);
        const auto via_monomials = decompose_to_schur(to_monomial_form(a) * to_monomial_form(b));
        CHECK(via_lr == via_monomials);
    }
}

TEST_CASE("pieri_mul equals schur_mul by a one-row partition") {
    Rng rng(11);
    for (int m = 1; m <= 6; ++m) {
        const auto e = random_expansion(rng, 3, 2);
        CHECK(pieri_mul(e, m) == schur_mul(e, SchurExpansion::single(Partition(m))));
    }
}

TEST_CASE("LR positivity on products of nonnegative expansions") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_expansion(rng, 3, 2, /*nonnegative=*/true);
        const auto b = random_expansion(rng, 2, 2, /*nonnegative=*/true);
        const auto prod = schur_mul(a, b);
        for (const auto& [p, c] : prod.terms()) CHECK(c > 0);
    }
}

TEST_CASE("homogeneous inputs multiply to homogeneous outputs with degrees adding") {
    const auto a = expansion({{Partition(3, 1), 2}, {Partition(2, 2), 5}});
    const auto b = expansion({{Partition(2, 1), 1}, {Partition(1, 1, 1), 3}});
    REQUIRE(a.is_homogeneous());
    REQUIRE(b.is_homogeneous());
    const auto prod = schur_mul(a, b);
    CHECK(prod.is_homogeneous());
    CHECK(prod.degree() == a.degree() + b.degree());
}

TEST_CASE("symmetry invariant of monomial forms") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto e = random_expansion(rng, 4, 2);
        CHECK(to_monomial_form(e).is_symmetric());
    }
}
