#pragma once

#include "semihole/ints.hpp"

namespace semihole {

// Column-style Hermite normal form: H = M * U with U unimodular.
// H is in column echelon form with positive pivots; entries left of a pivot
// are reduced into [0, pivot).
struct HnfResult {
    Mat H;
    Mat U;         // cols(M) x cols(M), |det| = 1
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;  // row of the pivot of each pivot column
};

HnfResult hermite_normal_form(const Mat& M);

// Smith normal form: D = U * M * V with U, V unimodular, D diagonal,
// d1 | d2 | ... , all diagonal entries nonnegative.
struct SnfResult {
    Mat D;
    Mat U;  // rows x rows
    Mat V;  // cols x cols
    std::size_t rank = 0;
};

SnfResult smith_normal_form(const Mat& M);

// Basis of the integer kernel {x : Mx = 0}, one basis vector per column.
Mat integer_kernel(const Mat& M);

// Exact inverse of a matrix with determinant +-1.
Mat unimodular_inverse(const Mat& U);

}  // namespace semihole
