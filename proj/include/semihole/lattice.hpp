#pragma once

#include "semihole/ints.hpp"

namespace semihole {

// Coordinate change under which the lattice generated by the columns of A
// becomes all of Z^r.  normalize_point / lift_point are mutually inverse on
// lattice points.
struct LatticeNormalization {
    std::size_t d = 0;
    std::size_t r = 0;
    Mat full_U;         // d x d unimodular, U*A = diag(divisors) * reduced on the top r rows
    Vec divisors;       // r elementary divisors of A
    Mat lift;           // d x r integer matrix, lift(normalize(x)) = x on lattice points
    Mat reduced;        // r x n, columns generate Z^r

    bool in_lattice(const Vec& x) const;
    // False when x is not a lattice point; otherwise writes the r normalized coordinates.
    bool normalize_point(const Vec& x, Vec& out) const;
    Vec lift_point(const Vec& z) const;
};

LatticeNormalization lattice_normalize(const Mat& A);

}  // namespace semihole
