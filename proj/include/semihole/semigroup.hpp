#pragma once

#include "semihole/cone.hpp"
#include "semihole/ints.hpp"
#include "semihole/lattice.hpp"

#include <functional>

namespace semihole {

// Shared analysis context: the generator matrix together with its lattice
// normalization and cone data.  All geometric computations run in normalized
// coordinates; every externally visible vector is in the original coordinates.
struct SemigroupContext {
    Mat A;                    // d x n, no zero columns
    LatticeNormalization lat;
    ConeProfile cone;
    Vec grading_n;            // grading pulled back to normalized coordinates
    int threads = 1;

    Int degree(const Vec& x_original) const { return dot(cone.grading, x_original); }
    Int degree_n(const Vec& z) const { return dot(grading_n, z); }
};

// Validates the matrix (throws UsageError on a zero column, NotPointedError
// when the cone is not pointed).
SemigroupContext make_context(const Mat& A, int threads = 1);

// Runs fn(i) for i in [0, count) on up to `threads` workers; fn must be pure
// per index.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace semihole
