#pragma once

#include "semihole/lp.hpp"
#include "semihole/semigroup.hpp"

namespace semihole {

struct DioSolutionSet {
    std::vector<Vec> inhomogeneousMinimal;  // componentwise-minimal solutions of Mx = b
    std::vector<Vec> homogeneousBasis;      // Hilbert basis of Mx = 0 under the sign pattern
};

struct DioOptions {
    bool truncate = true;    // prune completion vectors outside |t| <= 1 (sound, see tests)
    bool early_exit = false; // stop at the first inhomogeneous solution (membership queries)
};

// Pottier-style completion on the homogenized system Mx - b t = 0, t in {0,1}.
// Throws UnsupportedSystemError when the free-variable columns of M have a
// nonzero kernel (the solution set then contains a line).
DioSolutionSet solve_diophantine(const Mat& M, const Vec& b, const std::vector<VarSign>& signs,
                                 const DioOptions& opt = {});

struct MembershipResult {
    bool member = false;
    Vec witness;  // multiplicity vector when member
};

MembershipResult semigroup_member(const SemigroupContext& ctx, const Vec& b);

struct HilbertElement {
    Vec v;  // original coordinates
    bool is_generator = false;
    bool is_hole = false;
};

// Minimal Hilbert basis of K cap L, sorted by grading degree then lex.
std::vector<HilbertElement> hilbert_basis_of_cone(const SemigroupContext& ctx);

struct ShiftValue {
    bool finite = false;
    Int value;                 // minimal lambda >= 0 with y + lambda*a_i in Q
    Vec witness;               // multiplicity vector for y + value*a_i
    bool lp_precheck = false;  // infinity was already decided by the rational relaxation
};

// min { lambda >= 0 : y + lambda * a_i in Q }, or infinity (finite == false).
ShiftValue min_shift(const SemigroupContext& ctx, const Vec& y, std::size_t col);

}  // namespace semihole
