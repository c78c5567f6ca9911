#include "semihole/lattice.hpp"

#include "semihole/normal_form.hpp"

#include <cassert>

namespace semihole {



bool LatticeNormalization::in_lattice(const Vec& x) const {
    Vec y = mat_vec(full_U, x);
    for (std::size_t i = r; i < d; ++i)
        if (y[i] != 0) return false;
    for (std::size_t i = 0; i < r; ++i)
        if (y[i] % divisors[i] != 0) return false;
    return true;
}

bool LatticeNormalization::normalize_point(const Vec& x, Vec& out) const {
    Vec y = mat_vec(full_U, x);
    for (std::size_t i = r; i < d; ++i)
        if (y[i] != 0) return false;
    out.assign(r, Int(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (y[i] % divisors[i] != 0) return false;
        out[i] = y[i] / divisors[i];
    }
    return true;
}

Vec LatticeNormalization::lift_point(const Vec& z) const { return mat_vec(lift, z); }

LatticeNormalization lattice_normalize(const Mat& A) {
    SnfResult s = smith_normal_form(A);
    LatticeNormalization ln;
    ln.d = A.rows;
    ln.r = s.rank;
    ln.full_U = s.U;
    ln.divisors.assign(s.rank, Int(0));
    for (std::size_t i = 0; i < s.rank; ++i) ln.divisors[i] = s.D(i, i);

    Mat UA = mat_mul(s.U, A);
    ln.reduced = Mat(s.rank, A.cols);
    for (std::size_t i = 0; i < s.rank; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) {
            assert(UA(i, j) % ln.divisors[i] == 0);
            ln.reduced(i, j) = UA(i, j) / ln.divisors[i];
        }

    Mat Uinv = unimodular_inverse(s.U);
    ln.lift = Mat(A.rows, s.rank);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < s.rank; ++k) ln.lift(i, k) = Uinv(i, k) * ln.divisors[k];
    return ln;
}

}  // namespace semihole
