#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semihole/errors.hpp"
#include "semihole/lattice.hpp"
#include "semihole/lp.hpp"
#include "semihole/normal_form.hpp"
#include "semihole/oracle.hpp"

#include <array>
#include <random>
#include <sstream>

using namespace semihole;

namespace {

Mat rand_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    Mat M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = d(rng);
    return M;
}

bool is_zero_mat(const Mat& M) {
    for (const auto& v : M.a)
        if (v != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("parse and render matrix text") {
    std::istringstream in("2 3\n1 -2 3\n0 4 5\n");
    Mat A = parse_matrix_text(in);
    CHECK(A.rows == 2);
    CHECK(A.cols == 3);
    CHECK(A(0, 1) == -2);
    CHECK(render_matrix_text(A) == "2 3\n1 -2 3\n0 4 5\n");
    std::istringstream bad("2 3\n1 2\n");
    CHECK_THROWS_AS(parse_matrix_text(bad), UsageError);
}

TEST_CASE("hermite normal form reassembles") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + it % 4, c = 1 + (it / 4) % 5;
        Mat M = rand_mat(rng, r, c, -6, 6);
        HnfResult h = hermite_normal_form(M);
        CHECK(mat_mul(M, h.U) == h.H);
        Mat Uinv = unimodular_inverse(h.U);
        CHECK(mat_mul(h.U, Uinv) == Mat::identity(c));
        CHECK(h.rank == h.pivot_rows.size());
        // echelon: pivot rows strictly increase, columns past rank vanish
        for (std::size_t k = 0; k + 1 < h.rank; ++k) CHECK(h.pivot_rows[k] < h.pivot_rows[k + 1]);
        for (std::size_t k = h.rank; k < c; ++k) CHECK(is_zero(h.H.col(k)));
        for (std::size_t k = 0; k < h.rank; ++k) {
            const Int& p = h.H(h.pivot_rows[k], k);
            CHECK(p > 0);
            for (std::size_t t = 0; t < k; ++t) {
                const Int& e = h.H(h.pivot_rows[k], t);
                CHECK(e >= 0);
                CHECK(e < p);
            }
        }
    }
}

TEST_CASE("smith normal form invariants") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + it % 4, c = 1 + (it / 4) % 4;
        Mat M = rand_mat(rng, r, c, -5, 5);
        SnfResult s = smith_normal_form(M);
        CHECK(mat_mul(mat_mul(s.U, M), s.V) == s.D);
        CHECK(mat_mul(s.U, unimodular_inverse(s.U)) == Mat::identity(r));
        CHECK(mat_mul(s.V, unimodular_inverse(s.V)) == Mat::identity(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        for (std::size_t k = 0; k + 1 < std::min(r, c); ++k) {
            if (s.D(k + 1, k + 1) != 0) {
                CHECK(s.D(k, k) != 0);
                CHECK(s.D(k + 1, k + 1) % s.D(k, k) == 0);
            }
        }
    }
    Mat M(2, 2);
    M(0, 0) = 2, M(0, 1) = 4, M(1, 0) = 6, M(1, 1) = 8;
    SnfResult s = smith_normal_form(M);
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 4);
}

TEST_CASE("integer kernel") {
    Mat M(1, 3);
    M(0, 0) = 3, M(0, 1) = 5, M(0, 2) = 7;
    Mat K = integer_kernel(M);
    CHECK(K.cols == 2);
    CHECK(is_zero_mat(mat_mul(M, K)));
    // (5,-3,0) and (7,0,-3) style relations live in the kernel lattice
    Vec target{Int(5), Int(-3), Int(0)};
    bool found = false;
    for (long a = -20; a <= 20 && !found; ++a)
        for (long b = -20; b <= 20 && !found; ++b) {
            Vec v = vec_add(vec_scale(Int(a), K.col(0)), vec_scale(Int(b), K.col(1)));
            if (v == target) found = true;
        }
    CHECK(found);

    std::mt19937_64 rng(13);
    for (int it = 0; it < 40; ++it) {
        Mat A = rand_mat(rng, 1 + it % 3, 2 + it % 4, -4, 4);
        Mat Ker = integer_kernel(A);
        CHECK(is_zero_mat(mat_mul(A, Ker)));
        CHECK(Ker.cols == A.cols - hermite_normal_form(A).rank);
    }
}

TEST_CASE("lattice normalization round trip") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 40; ++it) {
        Mat A = rand_mat(rng, 1 + it % 3, 1 + (it / 3) % 5, -4, 4);
        bool zero_col = false;
        for (std::size_t j = 0; j < A.cols; ++j)
            if (is_zero(A.col(j))) zero_col = true;
        if (zero_col) continue;
        LatticeNormalization lat = lattice_normalize(A);
        CHECK(lat.reduced.rows == lat.r);
        std::uniform_int_distribution<long> co(-3, 3);
        for (int t = 0; t < 10; ++t) {
            Vec x(A.rows, Int(0));
            Vec zc(A.cols);
            for (std::size_t j = 0; j < A.cols; ++j) zc[j] = co(rng);
            x = mat_vec(A, zc);
            CHECK(lat.in_lattice(x));
            Vec z;
            REQUIRE(lat.normalize_point(x, z));
            CHECK(lat.lift_point(z) == x);
            CHECK(z == mat_vec(lat.reduced, zc));
        }
    }
    // even lattice in dimension one
    Mat A(1, 2);
    A(0, 0) = 2, A(0, 1) = 4;
    LatticeNormalization lat = lattice_normalize(A);
    CHECK(lat.in_lattice(Vec{Int(6)}));
    CHECK(!lat.in_lattice(Vec{Int(3)}));
}

TEST_CASE("lp feasibility on fixed systems") {
    // 3c >= 1, 5c >= 1, 7c >= 1 with c free
    LinSystem sys;
    sys.nvars = 1;
    sys.signs = {VarSign::Free};
    for (long a : {3L, 5L, 7L}) sys.add_row({Rat(a)}, Rel::GE, Rat(1));
    LpResult res = lp_feasible(sys);
    REQUIRE(res.feasible);
    CHECK(check_witness(sys, res.witness));

    // x + y = 1, x - y = 3, x,y >= 0 is infeasible
    LinSystem bad;
    bad.nvars = 2;
    bad.add_row({Rat(1), Rat(1)}, Rel::EQ, Rat(1));
    bad.add_row({Rat(1), Rat(-1)}, Rel::EQ, Rat(3));
    LpResult r2 = lp_feasible(bad);
    REQUIRE(!r2.feasible);
    CHECK(check_infeasibility_certificate(bad, r2.certificate));
}

TEST_CASE("lp agrees with elimination on random systems") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> nv(1, 4), nr(1, 5), relpick(0, 2), signpick(0, 2);
    for (int it = 0; it < 300; ++it) {
        LinSystem sys;
        sys.nvars = std::size_t(nv(rng));
        for (std::size_t j = 0; j < sys.nvars; ++j)
            sys.signs.push_back(std::array<VarSign, 3>{VarSign::NonNeg, VarSign::NonPos, VarSign::Free}[signpick(rng)]);
        int rows = nr(rng);
        for (int k = 0; k < rows; ++k) {
            QVec a(sys.nvars);
            for (auto& v : a) v = coef(rng);
            sys.add_row(std::move(a), std::array<Rel, 3>{Rel::LE, Rel::EQ, Rel::GE}[relpick(rng)], Rat(coef(rng)));
        }
        LpResult res = lp_feasible(sys);
        CHECK(res.feasible == fm_feasible(sys));
        if (res.feasible)
            CHECK(check_witness(sys, res.witness));
        else
            CHECK(check_infeasibility_certificate(sys, res.certificate));
    }
}
