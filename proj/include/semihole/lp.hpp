#pragma once

#include "semihole/ints.hpp"

namespace semihole {

enum class Rel { LE, EQ, GE };
enum class VarSign { NonNeg, NonPos, Free };

struct LinRow {
    QVec a;
    Rel rel = Rel::EQ;
    Rat b;
};

struct LinSystem {
    std::size_t nvars = 0;
    std::vector<VarSign> signs;  // one per variable; empty means all NonNeg
    std::vector<LinRow> rows;

    void add_row(QVec a, Rel rel, Rat b) { rows.push_back({std::move(a), rel, std::move(b)}); }
    VarSign sign_of(std::size_t j) const { return signs.empty() ? VarSign::NonNeg : signs[j]; }
};

struct LpResult {
    bool feasible = false;
    QVec witness;      // length nvars when feasible
    QVec certificate;  // one multiplier per row when infeasible (Farkas data)
};

// Exact phase-1 simplex with Bland's rule.
LpResult lp_feasible(const LinSystem& sys);

// Validity checks used by tests and by callers that act on certificates.
bool check_witness(const LinSystem& sys, const QVec& x);
bool check_infeasibility_certificate(const LinSystem& sys, const QVec& u);

}  // namespace semihole
