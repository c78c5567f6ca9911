#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semihole/holes.hpp"
#include "semihole/oracle.hpp"

#include <set>

using namespace semihole;

namespace {

Mat fixture(const char* name) { return parse_matrix_file(std::string(SEMIHOLE_FIXTURES) + "/" + name); }

}  // namespace

TEST_CASE("census of a numerical semigroup box") {
    SemigroupContext ctx = make_context(fixture("a357.mat"));
    BoxCensus c = census(ctx, Vec{Int(0)}, Vec{Int(20)});
    std::set<long> gaps{1, 2, 4};
    for (long v = 0; v <= 20; ++v) {
        Vec p{Int(v)};
        REQUIRE(c.classification.count(p) == 1);
        if (gaps.count(v))
            CHECK(c.classification.at(p) == BoxCensus::Cls::HOLE);
        else
            CHECK(c.classification.at(p) == BoxCensus::Cls::IN_Q);
    }
    CHECK(c.region_holes == std::vector<Vec>{Vec{Int(1)}, Vec{Int(2)}, Vec{Int(4)}});
    // non-saturation points in the box are exactly 0 and 3
    for (long v = 0; v <= 20; ++v) {
        Vec p{Int(v)};
        if (c.classification.at(p) != BoxCensus::Cls::IN_Q) continue;
        CHECK(c.sat.at(p) == (v != 0 && v != 3));
    }
}

TEST_CASE("census minimal sets match the analyzer") {
    SemigroupContext ctx = make_context(fixture("a357.mat"));
    BoxCensus c = census(ctx, Vec{Int(0)}, Vec{Int(0)}, Int(14));
    OracleMinSets ms = oracle_min_sets(ctx, c, Int(10));
    std::vector<Vec> ss, sq, sqs;
    for (long v : {5, 6, 7, 8, 9}) ss.push_back(Vec{Int(v)});
    for (long v : {5, 6, 7}) sq.push_back(Vec{Int(v)});
    sqs.push_back(Vec{Int(5)});
    CHECK(ms.minSS == ss);
    CHECK(ms.minSQ == sq);
    CHECK(ms.minSQsat == sqs);
}

TEST_CASE("census of the two-dimensional example") {
    SemigroupContext ctx = make_context(fixture("gap2.mat"));
    BoxCensus c = census(ctx, Vec{Int(0), Int(0)}, Vec{Int(3), Int(8)});
    CHECK(c.region_holes == std::vector<Vec>{Vec{Int(1), Int(2)}});
    CHECK(c.classification.at(Vec{Int(1), Int(2)}) == BoxCensus::Cls::HOLE);
    CHECK(c.classification.at(Vec{Int(2), Int(4)}) == BoxCensus::Cls::IN_Q);
    CHECK(c.classification.at(Vec{Int(0), Int(1)}) == BoxCensus::Cls::OUTSIDE_QSAT);
    CHECK(c.classification.at(Vec{Int(1), Int(5)}) == BoxCensus::Cls::OUTSIDE_QSAT);
    CHECK(!c.sat.at(Vec{Int(0), Int(0)}));
    CHECK(c.sat.at(Vec{Int(1), Int(0)}));
}

TEST_CASE("census respects the lattice") {
    // columns generate the even numbers only
    Mat A(1, 2);
    A(0, 0) = 4, A(0, 1) = 6;
    BoxCensus c = census(make_context(A), Vec{Int(0)}, Vec{Int(13)});
    for (long v = 0; v <= 13; ++v) {
        auto cls = c.classification.at(Vec{Int(v)});
        if (v % 2 == 1)
            CHECK(cls == BoxCensus::Cls::OUTSIDE_QSAT);
        else if (v == 2)
            CHECK(cls == BoxCensus::Cls::HOLE);
        else
            CHECK(cls == BoxCensus::Cls::IN_Q);
    }
}

TEST_CASE("random instances are reproducible and well formed") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Mat A = random_instance(seed);
        Mat B = random_instance(seed);
        CHECK(A.rows == B.rows);
        CHECK(A.a == B.a);
        CHECK(A.rows >= 1);
        CHECK(A.rows <= 3);
        CHECK(A.cols >= 1);
        CHECK(A.cols <= 5);
        for (std::size_t j = 0; j < A.cols; ++j) {
            CHECK(!is_zero(A.col(j)));
            for (std::size_t i = 0; i < A.rows; ++i) {
                CHECK(A(i, j) >= 0);
                CHECK(A(i, j) <= 4);
            }
        }
        CHECK_NOTHROW(pointedness_certificate(A));
    }
    CHECK(random_instance(1).a != random_instance(2).a);
}
