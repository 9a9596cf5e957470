#include <doctest.h>

#include <algorithm>

#include "abct/groebner.hpp"
#include "abct/matrix.hpp"

using namespace abct;

namespace {

// x - y^2 and x under lex x > y
MultiPoly poly_x_minus_y2(const LexOrder& ord) {
    return MultiPoly::from_terms({{{1, 0}, 1}, {{0, 2}, -1}}, ord);
}

MultiPoly poly_x(const LexOrder& ord) { return MultiPoly::from_terms({{{1, 0}, 1}}, ord); }

}  // namespace

TEST_CASE("generator counts and squarefree terms") {
    CHECK(minors_ideal_generators(3).size() == 1);
    const auto gens = minors_ideal_generators(6);
    CHECK(gens.size() == 20);
    for (const auto& g : gens) {
        CHECK(g.term_count() == 6);
        for (const auto& t : g.terms) {
            CHECK((t.coeff == 1 || t.coeff == -1));
            int degree = 0;
            for (int e : t.mono) {
                CHECK(e <= 1);  // squarefree
                degree += e;
            }
            CHECK(degree == 6);
        }
    }
}

TEST_CASE("generators vanish when all columns lie on a common conic") {
    // conic a*x1x2 + b*x1x3 + c*x2x3 = 0 through the coordinate points;
    // pick x3 from (x1, x2) so each column satisfies it
    Rng rng(15);
    const Rat a(3), b(-2), c(5);
    std::vector<Rat> values(18);
    for (int j = 0; j < 6; ++j) {
        Rat x1, x2;
        Rat denom = 0;
        while (denom == 0) {
            x1 = Rat(rng.draw_nonzero(20));
            x2 = Rat(rng.draw_nonzero(20));
            denom = b * x1 + c * x2;
        }
        const Rat x3 = -(a * x1 * x2) / denom;
        values[static_cast<size_t>(j)] = x1;
        values[static_cast<size_t>(6 + j)] = x2;
        values[static_cast<size_t>(12 + j)] = x3;
    }
    for (const auto& g : minors_ideal_generators(6)) CHECK(g.evaluate(values) == 0);
}

TEST_CASE("s-polynomial basics") {
    const LexOrder ord = LexOrder::standard(2);
    const auto f = poly_x_minus_y2(ord);
    CHECK(s_polynomial(f, f, ord).is_zero());
    const auto s = s_polynomial(f, poly_x(ord), ord);
    CHECK(s == MultiPoly::from_terms({{{0, 2}, -1}}, ord));
}

TEST_CASE("coprime leading monomials are skipped by the product criterion") {
    const LexOrder ord = LexOrder::standard(2);
    const auto f = MultiPoly::from_terms({{{1, 0}, 1}, {{0, 0}, 1}}, ord);  // x + 1
    const auto g = MultiPoly::from_terms({{{0, 1}, 1}, {{0, 0}, 1}}, ord);  // y + 1
    CHECK(mono_coprime(f.lt().mono, g.lt().mono));
    const auto rep = buchberger_check({f, g}, ord);
    CHECK(rep.is_groebner);
    CHECK(rep.pairs_skipped_coprime == 1);
    CHECK(rep.pairs_reduced == 0);
}

TEST_CASE("reduce basics") {
    const LexOrder ord = LexOrder::standard(2);
    const auto g = poly_x_minus_y2(ord);
    CHECK(reduce(g, {g}, ord).is_zero());

    const auto f = MultiPoly::from_terms({{{2, 0}, 1}, {{0, 1}, 1}}, ord);  // x^2 + y
    CHECK(reduce(f, {poly_x(ord)}, ord) == MultiPoly::from_terms({{{0, 1}, 1}}, ord));
}

TEST_CASE("reduce is idempotent and deterministic") {
    const LexOrder ord = LexOrder::standard(2);
    const auto f = MultiPoly::from_terms({{{3, 1}, 4}, {{2, 2}, -3}, {{1, 0}, 2}, {{0, 3}, 7}}, ord);
    const std::vector<MultiPoly> G{poly_x_minus_y2(ord)};
    const auto r1 = reduce(f, G, ord);
    CHECK(reduce(r1, G, ord) == r1);
    CHECK(reduce(f, G, ord) == r1);  // bit-identical on identical input
}

TEST_CASE("buchberger failure is reported with the failing pair") {
    const LexOrder ord = LexOrder::standard(2);
    const auto rep = buchberger_check({poly_x_minus_y2(ord), poly_x(ord)}, ord);
    CHECK_FALSE(rep.is_groebner);
    REQUIRE(rep.failing_pair.has_value());
    CHECK(*rep.failing_pair == std::pair<int, int>{1, 2});
}

TEST_CASE("single polynomial is a groebner basis") {
    const LexOrder ord = LexOrder::standard(2);
    const auto rep = buchberger_check({poly_x_minus_y2(ord)}, ord);
    CHECK(rep.is_groebner);
    CHECK(rep.pairs_total == 0);
}

TEST_CASE("minors form a groebner basis in the 4-column case") {
    const auto gens = minors_ideal_generators(4);
    const LexOrder ord = LexOrder::standard(12);
    const auto serial = buchberger_check(gens, ord, {.parallel = false, .trace = true});
    const auto parallel = buchberger_check(gens, ord, {.parallel = true, .trace = true});
    CHECK(serial.is_groebner);
    CHECK(parallel.is_groebner);
    CHECK(serial.pairs_total == 6);
    CHECK(serial.pairs_skipped_coprime == parallel.pairs_skipped_coprime);
    CHECK(serial.trace == parallel.trace);  // parallel fan-out is transparent
}
