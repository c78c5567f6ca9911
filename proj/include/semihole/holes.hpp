#pragma once

#include "semihole/diophantine.hpp"
#include "semihole/semigroup.hpp"

#include <map>
#include <optional>
#include <set>

namespace semihole {

enum class Finiteness { FINITE, INFINITE, NOT_RUN };

struct ShiftEntry {
    Vec source;                     // original coordinates
    bool from_basis = false;        // hole-flagged Hilbert element
    bool from_fundamental = false;  // fundamental hole
    std::vector<std::pair<std::size_t, ShiftValue>> cells;  // (column, value), ascending columns
};

struct ShiftTable {
    std::vector<ShiftEntry> entries;
    Vec n_bounds;  // per column: max shift over fundamental-hole sources
};

struct MinSetResult {
    std::vector<Vec> points;
    bool complete = false;
    Int bound;  // search bound actually used when not complete
};

struct JointVerdict {
    bool min_ss_finite = false;
    bool cone_s_polyhedral = false;
    bool extreme_rays_saturated = false;
    bool holes_finite = false;
    bool non_saturation_finite = false;
    Vec ray_witness_levels;  // per extreme column: least level with a saturation point (finite case)
    bool agree() const {
        return min_ss_finite == cone_s_polyhedral && cone_s_polyhedral == extreme_rays_saturated &&
               extreme_rays_saturated == holes_finite && holes_finite == non_saturation_finite;
    }
};

// Lazily computed hole/saturation analysis of one semigroup.
class HoleAnalyzer {
  public:
    explicit HoleAnalyzer(SemigroupContext ctx) : ctx_(std::move(ctx)) {}

    const SemigroupContext& context() const { return ctx_; }

    const std::vector<HilbertElement>& hilbert();
    const std::vector<Vec>& fundamental();
    Finiteness finiteness();
    const ShiftTable& shifts();
    bool saturated();  // no hole-flagged Hilbert element
    // Witness for an INFINITE verdict: source element, column, and whether the
    // rational relaxation alone decided it.
    struct InfinityWitness {
        Vec source;
        std::size_t column = 0;
        bool lp_precheck = false;
    };
    const InfinityWitness& infinity_witness() const { return inf_witness_; }

    const std::vector<Vec>& holes();           // throws InfiniteHolesError
    const std::vector<Vec>& non_saturation();  // throws InfiniteHolesError
    MinSetResult min_sat_S();                  // throws InfiniteHolesError
    MinSetResult min_sat_Q(std::optional<Int> bound = std::nullopt);
    MinSetResult min_sat_Qsat(std::optional<Int> bound = std::nullopt);
    JointVerdict joint_verdict();

    bool in_Q(const Vec& x);
    bool in_Qsat(const Vec& x);
    bool in_P(const Vec& x);  // x = A*delta for some rational 0 <= delta <= 1
    bool is_fundamental_hole(const Vec& x);
    bool is_saturation_point(const Vec& x);  // throws NotInSemigroupError when x not in Q
    bool in_S(const Vec& x);                 // saturation test without the membership precondition

    Int default_bound();  // 4 * max degree over fundamental holes and Hilbert basis

  private:
    std::vector<Vec> enumerate_qsat_upto(const Int& degree_bound);
    std::vector<Vec> minset_candidates_complete();
    MinSetResult min_sat_generic(const std::vector<Vec>& reducers, std::optional<Int> bound);

    SemigroupContext ctx_;
    std::optional<std::vector<HilbertElement>> hilbert_;
    std::optional<std::vector<Vec>> fundamental_;
    Finiteness verdict_ = Finiteness::NOT_RUN;
    ShiftTable shifts_;
    InfinityWitness inf_witness_;
    std::optional<std::vector<Vec>> holes_;
    std::set<Vec> hole_set_;
    std::optional<std::vector<Vec>> non_saturation_;
    std::map<Vec, bool> memo_q_;
};

// Largest integer not representable over coprime positive integers; -1 when
// there are no gaps.
Int frobenius_number(const std::vector<Int>& a);

}  // namespace semihole
