#pragma once

#include "semihole/ints.hpp"
#include "semihole/lattice.hpp"

namespace semihole {

struct ConeProfile {
    Vec grading;                        // integer c with c.a_i >= 1 for every column
    std::vector<std::size_t> extreme;   // 0-based indices of extreme-ray columns, ascending
    Mat ineq;                           // B: K restricted to the column span = {x : Bx >= 0}
    Mat ineq_normalized;                // same facets in normalized coordinates (full-dimensional)
};

// Throws NotPointedError when no strictly positive grading exists.
Vec pointedness_certificate(const Mat& A);

std::vector<std::size_t> extreme_ray_columns(const Mat& A, const Vec& grading);

// Extreme rays of {y : M^T y >= 0} for a full-row-rank M (double description).
std::vector<Vec> dual_cone_rays(const Mat& M);

ConeProfile cone_profile(const Mat& A, const LatticeNormalization& lat);

// Exact LP: is x a nonnegative rational combination of the columns of A?
bool cone_membership(const Mat& A, const Vec& x);

bool qsat_membership(const Mat& A, const LatticeNormalization& lat, const Vec& x);

// LP-free membership in K for normalized lattice points, using the facet matrix.
bool in_cone_normalized(const ConeProfile& cp, const Vec& z);

}  // namespace semihole
