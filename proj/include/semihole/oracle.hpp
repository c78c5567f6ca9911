#pragma once

#include "semihole/lp.hpp"
#include "semihole/semigroup.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace semihole {

// Brute-force census over a coordinate box, built independently of the
// completion engine: Q membership by coin-problem dynamic programming in
// increasing degree over the region {x in K : deg(x) <= region_degree}.
struct BoxCensus {
    enum class Cls { IN_Q, HOLE, OUTSIDE_QSAT };
    Vec lo, hi;
    std::map<Vec, Cls> classification;  // every lattice point of the box
    std::map<Vec, bool> sat;            // IN_Q box points -> saturation tag

    Int region_degree;
    std::map<Vec, bool> region_in_q;  // all Q_sat points of the region -> in Q?
    std::vector<Vec> region_holes;    // region points of Q_sat \ Q, sorted
};

// The census region is {x in K : deg(x) <= D} with D covering the box
// corners; pass region_degree to widen it (saturation tags are then valid for
// points at least max-hole-degree below it).
BoxCensus census(const SemigroupContext& ctx, const Vec& lo, const Vec& hi,
                 const std::optional<Int>& region_degree = {});

// Definition-level minimal saturation sets, evaluated by pairwise subtraction
// inside the census region; valid for points of degree <= valid_degree when
// the region contains every hole.
struct OracleMinSets {
    std::vector<Vec> minSS, minSQ, minSQsat;
};

OracleMinSets oracle_min_sets(const SemigroupContext& ctx, const BoxCensus& c, const Int& valid_degree);

// Reproducible pointed instance with nonnegative entries in [0, entry_max].
Mat random_instance(std::uint64_t seed, std::size_t max_d = 3, std::size_t max_n = 5, long entry_max = 4);

// Naive Fourier-Motzkin eliminator (test oracle for lp_feasible).
bool fm_feasible(const LinSystem& sys);

}  // namespace semihole
