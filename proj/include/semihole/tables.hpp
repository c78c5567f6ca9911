#pragma once

#include "semihole/ints.hpp"

#include <string>
#include <vector>

namespace semihole {

struct MarginalModel {
    std::vector<std::size_t> sizes;                 // n_1 .. n_s
    std::vector<std::vector<std::size_t>> margins;  // 1-based axis subsets, each ascending
};

// "2x2x2x2" and "12,13,14,234" (single-digit axis labels).
MarginalModel parse_model(const std::string& sizes, const std::string& margins);

// 0/1 matrix: columns = table cells (first index fastest), row blocks = the
// margin family in order, margin cells enumerated the same way.
Mat marginal_matrix(const MarginalModel& model);

// Keeps the earliest maximal linearly independent row set (rational rank).
Mat remove_redundant_rows(const Mat& A);

// diag(A1, A2)
Mat embed_block(const Mat& A1, const Mat& A2);

}  // namespace semihole
