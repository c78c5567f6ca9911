#pragma once

#include "semihole/holes.hpp"

#include <optional>
#include <string>

namespace semihole {

struct StageSet {
    bool hilbert = false;
    bool fundamental = false;
    bool finiteness = false;
    bool holes = false;
    bool saturation = false;
    bool minsets = false;
};

// Comma-separated stage names, or "all"; prerequisites are added automatically.
StageSet parse_stages(const std::string& csv);

struct RunOptions {
    StageSet stages;
    std::optional<Int> bound;  // search bound for min sets when the hole set is infinite
    int threads = 1;
};

struct SaturationReport {
    Mat A;
    std::size_t rank = 0;
    Vec grading;
    std::vector<std::size_t> extreme;  // 0-based; rendered 1-based
    StageSet stages;                   // after prerequisite closure
    StageSet requested;                // as given by the caller

    std::optional<std::vector<HilbertElement>> hilbert;
    std::optional<std::vector<Vec>> fundamental;
    Finiteness finiteness = Finiteness::NOT_RUN;
    std::optional<ShiftTable> shifts;
    std::optional<HoleAnalyzer::InfinityWitness> witness;
    std::optional<std::vector<Vec>> holes;
    std::optional<std::vector<Vec>> non_saturation;
    std::optional<MinSetResult> min_ss, min_sq, min_sqsat;
    std::optional<JointVerdict> verdict;

    // set when holes/saturation were requested but the hole set is infinite
    bool holes_unavailable = false;

    std::vector<std::pair<std::string, double>> timings_ms;
};

SaturationReport run_analysis(const Mat& A, const RunOptions& opt);

std::string render_report_text(const SaturationReport& rep, bool timings);
std::string render_report_json(const SaturationReport& rep, bool timings);

// 0 success, 3 when a requested hole/saturation listing is infinite.
int report_exit_code(const SaturationReport& rep);

}  // namespace semihole
