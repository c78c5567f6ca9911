#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semihole/diophantine.hpp"
#include "semihole/errors.hpp"
#include "semihole/normal_form.hpp"
#include "semihole/oracle.hpp"

#include <random>
#include <set>

using namespace semihole;

namespace {

Mat fixture(const char* name) { return parse_matrix_file(std::string(SEMIHOLE_FIXTURES) + "/" + name); }

// all sign-respecting integer solutions of Mx = b with |x_j| <= box
std::vector<Vec> brute_solutions(const Mat& M, const Vec& b, const std::vector<VarSign>& signs, long box) {
    std::vector<Vec> out;
    const std::size_t n = M.cols;
    auto sign_of = [&](std::size_t j) { return signs.empty() ? VarSign::NonNeg : signs[j]; };
    Vec x(n);
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            if (mat_vec(M, x) == b) out.push_back(x);
            return;
        }
        long lo = sign_of(j) == VarSign::NonNeg ? 0 : -box;
        long hi = sign_of(j) == VarSign::NonPos ? 0 : box;
        for (long v = lo; v <= hi; ++v) {
            x[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// componentwise domination; solutions of one system share coordinate signs
bool dominates(const Vec& small, const Vec& big) {
    for (std::size_t j = 0; j < small.size(); ++j) {
        if (sgn(small[j]) * sgn(big[j]) < 0) return false;
        if (abs(small[j]) > abs(big[j])) return false;
    }
    return true;
}

bool in_box(const Vec& v, long box) {
    for (const auto& x : v)
        if (abs(x) > box) return false;
    return true;
}

}  // namespace

TEST_CASE("numerical semigroup systems") {
    Mat M(1, 3);
    M(0, 0) = 3, M(0, 1) = 5, M(0, 2) = 7;

    DioSolutionSet zero = solve_diophantine(M, Vec{Int(0)}, {});
    CHECK(zero.homogeneousBasis.empty());
    REQUIRE(zero.inhomogeneousMinimal.size() == 1);
    CHECK(is_zero(zero.inhomogeneousMinimal[0]));

    CHECK_THROWS_AS(solve_diophantine(M, Vec{Int(0)}, {VarSign::Free, VarSign::Free, VarSign::Free}),
                    UnsupportedSystemError);

    CHECK(solve_diophantine(M, Vec{Int(4)}, {}).inhomogeneousMinimal.empty());

    DioSolutionSet twelve = solve_diophantine(M, Vec{Int(12)}, {});
    std::vector<Vec> want{Vec{Int(0), Int(1), Int(1)}, Vec{Int(4), Int(0), Int(0)}};
    CHECK(twelve.inhomogeneousMinimal == want);
    CHECK(twelve.homogeneousBasis.empty());
}

TEST_CASE("nonpositive variable") {
    Mat M(1, 2);
    M(0, 0) = 3, M(0, 1) = 5;
    DioSolutionSet s = solve_diophantine(M, Vec{Int(1)}, {VarSign::NonPos, VarSign::NonNeg});
    REQUIRE(s.inhomogeneousMinimal.size() == 1);
    CHECK(s.inhomogeneousMinimal[0] == Vec{Int(-3), Int(2)});
}

TEST_CASE("homogeneous basis of a simple kernel") {
    Mat M(1, 3);
    M(0, 0) = 1, M(0, 1) = 1, M(0, 2) = -1;
    DioSolutionSet s = solve_diophantine(M, Vec{Int(0)}, {});
    std::vector<Vec> want{Vec{Int(0), Int(1), Int(1)}, Vec{Int(1), Int(0), Int(1)}};
    CHECK(s.homogeneousBasis == want);
}

TEST_CASE("minimal solutions match brute force") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> coef(-3, 3), rhs(-4, 4);
    std::uniform_int_distribution<int> nr(1, 2), nc(2, 4), sp(0, 4);
    const long box = 6;
    for (int it = 0; it < 120; ++it) {
        Mat M(std::size_t(nr(rng)), std::size_t(nc(rng)));
        for (auto& v : M.a) v = coef(rng);
        std::vector<VarSign> signs;
        for (std::size_t j = 0; j < M.cols; ++j) signs.push_back(sp(rng) == 0 ? VarSign::NonPos : VarSign::NonNeg);
        Vec b(M.rows);
        for (auto& v : b) v = rhs(rng);
        if (is_zero(b)) b[0] = 1;

        DioSolutionSet got = solve_diophantine(M, b, signs);
        DioOptions raw;
        raw.truncate = false;
        CHECK(solve_diophantine(M, b, signs, raw).inhomogeneousMinimal == got.inhomogeneousMinimal);
        CHECK(solve_diophantine(M, b, signs, raw).homogeneousBasis == got.homogeneousBasis);

        std::vector<Vec> all = brute_solutions(M, b, signs, box);
        std::set<Vec> all_set(all.begin(), all.end());
        for (const auto& x : got.inhomogeneousMinimal) {
            CHECK(mat_vec(M, x) == b);
            if (in_box(x, box)) CHECK(all_set.count(x) == 1);
        }
        // brute-force minimal elements inside the box must all be reported
        std::set<Vec> got_set(got.inhomogeneousMinimal.begin(), got.inhomogeneousMinimal.end());
        for (const auto& x : all) {
            bool minimal = true;
            for (const auto& y : all)
                if (y != x && dominates(y, x)) {
                    minimal = false;
                    break;
                }
            if (minimal) CHECK(got_set.count(x) == 1);
        }
        // every homogeneous solution reduces to zero through the basis
        std::vector<Vec> hom = brute_solutions(M, Vec(M.rows, Int(0)), signs, 4);
        for (Vec h : hom) {
            bool stuck = false;
            while (!is_zero(h) && !stuck) {
                stuck = true;
                for (const auto& g : got.homogeneousBasis)
                    if (dominates(g, h)) {
                        h = vec_sub(h, g);
                        stuck = false;
                        break;
                    }
            }
            CHECK(is_zero(h));
        }
    }
}

TEST_CASE("membership in a numerical semigroup") {
    SemigroupContext ctx = make_context(fixture("a357.mat"));
    std::set<long> gaps{1, 2, 4};
    for (long v = 0; v <= 20; ++v) {
        Vec b{Int(v)};
        MembershipResult m = semigroup_member(ctx, b);
        CHECK(m.member == (gaps.count(v) == 0));
        if (m.member) CHECK(mat_vec(ctx.A, m.witness) == b);
    }
}

TEST_CASE("hilbert basis generates the saturation and is minimal") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        Mat A = random_instance(seed);
        SemigroupContext ctx = make_context(A);
        std::vector<HilbertElement> hb = hilbert_basis_of_cone(ctx);
        REQUIRE(!hb.empty());

        Mat B(A.rows, hb.size());
        for (std::size_t j = 0; j < hb.size(); ++j) B.set_col(j, hb[j].v);
        SemigroupContext ctxB = make_context(B);
        Int D = 0;
        for (const auto& e : hb) D = std::max(D, ctx.degree(e.v));
        D = 2 * D + 2;
        BoxCensus c = census(ctxB, Vec(A.rows, Int(0)), Vec(A.rows, Int(0)), D);
        CHECK(c.region_holes.empty());  // the basis generates every Q_sat point

        // every Q_sat point of the original region is generated by the basis
        BoxCensus cA = census(ctx, Vec(A.rows, Int(0)), Vec(A.rows, Int(0)), D);
        Int DB = 0;
        for (const auto& [p, q] : cA.region_in_q) DB = std::max(DB, ctxB.degree(p));
        BoxCensus cB = census(ctxB, Vec(A.rows, Int(0)), Vec(A.rows, Int(0)), DB);
        for (const auto& [p, q] : cA.region_in_q) {
            REQUIRE(cB.region_in_q.count(p) == 1);
            CHECK(cB.region_in_q.at(p));
        }

        for (std::size_t j = 0; j < hb.size() && hb.size() > 1; ++j) {
            Mat others(A.rows, hb.size() - 1);
            std::size_t t = 0;
            for (std::size_t k = 0; k < hb.size(); ++k)
                if (k != j) others.set_col(t++, hb[k].v);
            // dropping any element loses it: it must not be generated by the rest
            SemigroupContext ctxO = make_context(others);
            Vec z;
            if (!ctxO.lat.normalize_point(hb[j].v, z)) continue;
            BoxCensus cj = census(ctxO, hb[j].v, hb[j].v);
            CHECK(cj.classification.at(hb[j].v) != BoxCensus::Cls::IN_Q);
        }

        // flags
        std::set<Vec> cols;
        for (std::size_t j = 0; j < A.cols; ++j) cols.insert(A.col(j));
        for (const auto& e : hb) {
            CHECK(e.is_generator == (cols.count(e.v) > 0));
            CHECK(e.is_hole == !semigroup_member(ctx, e.v).member);
        }
    }
}

TEST_CASE("shift values on the worked examples") {
    SemigroupContext one = make_context(fixture("a357.mat"));
    ShiftValue s = min_shift(one, Vec{Int(1)}, 0);
    REQUIRE(s.finite);
    CHECK(s.value == 2);
    s = min_shift(one, Vec{Int(1)}, 1);
    REQUIRE(s.finite);
    CHECK(s.value == 1);
    s = min_shift(one, Vec{Int(2)}, 0);
    REQUIRE(s.finite);
    CHECK(s.value == 1);

    SemigroupContext two = make_context(fixture("gap2.mat"));
    for (std::size_t j = 0; j < 4; ++j) {
        ShiftValue v = min_shift(two, Vec{Int(1), Int(2)}, j);
        REQUIRE(v.finite);
        CHECK(v.value == 1);
        // witness reconstructs the shifted point
        Vec w(v.witness.begin(), v.witness.end() - 1);
        CHECK(mat_vec(two.A, w) == vec_add(Vec{Int(1), Int(2)}, vec_scale(v.value, two.A.col(j))));
    }

    SemigroupContext inf = make_context(fixture("gap2inf.mat"));
    CHECK(!min_shift(inf, Vec{Int(1), Int(1)}, 0).finite);

    SemigroupContext blk = make_context(fixture("block.mat"));
    CHECK(!min_shift(blk, Vec{Int(1), Int(2), Int(0)}, 4).finite);
    ShiftValue bs = min_shift(blk, Vec{Int(1), Int(2), Int(0)}, 0);
    REQUIRE(bs.finite);
    CHECK(bs.value == 1);
}

TEST_CASE("shift of a member is zero") {
    SemigroupContext ctx = make_context(fixture("a357.mat"));
    ShiftValue s = min_shift(ctx, Vec{Int(10)}, 2);
    REQUIRE(s.finite);
    CHECK(s.value == 0);
}
