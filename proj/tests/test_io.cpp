#include <doctest.h>

#include "abct/io.hpp"

using namespace abct;

TEST_CASE("schur text rendering") {
    SchurExpansion e;
    e.add_term(Partition(2), 11);
    e.add_term(Partition(1, 1), 6);
    CHECK(render_schur_text(e) == "11*s[2] + 6*s[1,1]");
    CHECK(render_schur_text(SchurExpansion::unit()) == "1*s[0]");
    CHECK(render_schur_text(SchurExpansion()) == "0");

    SchurExpansion f3;
    f3.add_term(Partition(3), 26);
    f3.add_term(Partition(2, 1), 23);
    f3.add_term(Partition(1, 1, 1), 4);
    CHECK(render_schur_text(f3) == "26*s[3] + 23*s[2,1] + 4*s[1,1,1]");
}

TEST_CASE("schur json rendering") {
    SchurExpansion e;
    e.add_term(Partition(2), 11);
    e.add_term(Partition(1, 1), 6);
    const auto j = schur_terms_json(e);
    CHECK(j.dump() == R"([{"partition":[2],"coeff":"11"},{"partition":[1,1],"coeff":"6"}])");
}

TEST_CASE("class result json") {
    ClassResult r;
    r.n = 6;
    r.codim = 1;
    r.expansion.add_term(Partition(1), 4);
    const Int degree = 168;
    const auto j = class_result_json(r, &degree);
    CHECK(j.dump() == R"({"n":6,"codim":1,"terms":[{"partition":[1],"coeff":"4"}],"degree":"168"})");
}

TEST_CASE("rational formatting and parsing") {
    CHECK(format_rational(Rat(3)) == "3");
    CHECK(format_rational(Rat(-3, 7)) == "-3/7");
    CHECK(parse_rational("22/-4") == Rat(-11, 2));
    CHECK(parse_rational("5") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("matrix csv round-trip") {
    ExactMatrix M(2, 3);
    M.at(0, 0) = Rat(1, 2);
    M.at(0, 1) = Rat(-3);
    M.at(1, 2) = Rat(7, 5);
    const std::string csv = matrix_to_csv(M);
    CHECK(csv == "1/2,-3,0\n0,0,7/5\n");
    CHECK(matrix_from_csv(csv) == M);
    CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), std::invalid_argument);
}

TEST_CASE("matrix json round-trip") {
    ExactMatrix M(2, 2);
    M.at(0, 0) = Rat(1, 3);
    M.at(1, 1) = Rat(-2);
    const auto j = matrix_json(M);
    CHECK(j.dump() == R"({"rows":2,"cols":2,"entries":[["1/3","0"],["0","-2"]]})");
    CHECK(matrix_from_json(j) == M);
}

TEST_CASE("pluecker json uses 1-based subset labels") {
    ExactMatrix M(2, 3);
    M.at(0, 0) = 1;
    M.at(0, 1) = 1;
    M.at(0, 2) = 1;
    M.at(1, 1) = 1;
    M.at(1, 2) = 2;
    const auto j = pluecker_json(pluecker_coordinates(M));
    CHECK(j.dump() == R"({"1,2":"1","1,3":"2","2,3":"1"})");
}

TEST_CASE("matroid json round-trip") {
    const auto M = Rank2Matroid::from_classes(4, {{0}, {1, 3}, {2}});
    const auto j = rank2_matroid_json(M);
    CHECK(j.dump() == R"({"n":4,"bases":[[1,2],[1,3],[1,4],[2,3],[3,4]]})");
    CHECK(rank2_matroid_from_json(j) == M);

    const auto img = matroid_k_json(veronese_image_matroid(M, 2));
    CHECK(img.dump() == R"({"n":4,"k":3,"bases":[[1,2,3],[1,3,4]]})");
}
