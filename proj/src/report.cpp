#include "semihole/report.hpp"

#include "semihole/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace semihole {

namespace {

using ojson = nlohmann::ordered_json;

ojson json_int(const Int& v) {
    if (v.fits_slong_p()) return ojson(static_cast<long long>(v.get_si()));
    return ojson(v.get_str());
}

ojson json_vec(const Vec& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(json_int(x));
    return a;
}

ojson json_points(const std::vector<Vec>& pts) {
    ojson a = ojson::array();
    for (const auto& p : pts) a.push_back(json_vec(p));
    return a;
}

StageSet close_stages(StageSet s) {
    if (s.saturation) s.holes = true;
    if (s.holes || s.minsets) s.finiteness = true;
    if (s.finiteness) {
        s.hilbert = true;
        s.fundamental = true;
    }
    return s;
}

std::string finiteness_name(Finiteness f) {
    switch (f) {
        case Finiteness::FINITE: return "FINITE";
        case Finiteness::INFINITE: return "INFINITE";
        default: return "NOT_RUN";
    }
}

}  // namespace

StageSet parse_stages(const std::string& csv) {
    StageSet s;
    std::stringstream in(csv);
    std::string tok;
    bool any = false;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        any = true;
        if (tok == "all") {
            s.hilbert = s.fundamental = s.finiteness = s.holes = s.saturation = s.minsets = true;
        } else if (tok == "hilbert") {
            s.hilbert = true;
        } else if (tok == "fundamental") {
            s.fundamental = true;
        } else if (tok == "finiteness") {
            s.finiteness = true;
        } else if (tok == "holes") {
            s.holes = true;
        } else if (tok == "saturation") {
            s.saturation = true;
        } else if (tok == "minsets") {
            s.minsets = true;
        } else {
            throw UsageError("unknown stage: " + tok);
        }
    }
    if (!any) throw UsageError("no stages given");
    return s;
}

SaturationReport run_analysis(const Mat& A, const RunOptions& opt) {
    SaturationReport rep;
    rep.requested = opt.stages;
    rep.stages = close_stages(opt.stages);
    rep.A = A;

    HoleAnalyzer an(make_context(A, opt.threads));
    rep.rank = an.context().lat.r;
    rep.grading = an.context().cone.grading;
    rep.extreme = an.context().cone.extreme;

    auto timed = [&](const char* name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        rep.timings_ms.emplace_back(name, std::chrono::duration<double, std::milli>(t1 - t0).count());
    };

    if (rep.stages.hilbert) timed("hilbert", [&] { rep.hilbert = an.hilbert(); });
    if (rep.stages.fundamental) timed("fundamental", [&] { rep.fundamental = an.fundamental(); });
    if (rep.stages.finiteness) timed("finiteness", [&] {
        rep.finiteness = an.finiteness();
        rep.shifts = an.shifts();
        if (rep.finiteness == Finiteness::INFINITE) rep.witness = an.infinity_witness();
        rep.verdict = an.joint_verdict();
    });
    if (rep.stages.holes) {
        if (rep.finiteness == Finiteness::INFINITE) {
            rep.holes_unavailable = true;
        } else {
            timed("holes", [&] { rep.holes = an.holes(); });
            if (rep.stages.saturation) timed("saturation", [&] { rep.non_saturation = an.non_saturation(); });
        }
    }
    if (rep.stages.minsets) timed("minsets", [&] {
        if (rep.finiteness == Finiteness::FINITE) rep.min_ss = an.min_sat_S();
        rep.min_sq = an.min_sat_Q(opt.bound);
        rep.min_sqsat = an.min_sat_Qsat(opt.bound);
    });
    return rep;
}

std::string render_report_text(const SaturationReport& rep, bool timings) {
    std::ostringstream out;
    out << "matrix: " << rep.A.rows << " x " << rep.A.cols << "\n";
    out << "rank: " << rep.rank << "\n";
    out << "pointed: yes\n";
    out << "grading: " << format_vec(rep.grading) << "\n";
    out << "extreme columns:";
    for (std::size_t j : rep.extreme) out << " " << (j + 1);
    out << "\n";
    if (rep.hilbert) {
        out << "hilbert basis (" << rep.hilbert->size() << "):\n";
        for (const auto& e : *rep.hilbert) {
            out << "  " << format_vec(e.v);
            if (e.is_generator) out << " generator";
            if (e.is_hole) out << " hole";
            out << "\n";
        }
    }
    if (rep.fundamental) {
        out << "fundamental holes (" << rep.fundamental->size() << "):\n";
        for (const auto& p : *rep.fundamental) out << "  " << format_vec(p) << "\n";
    }
    if (rep.finiteness != Finiteness::NOT_RUN) {
        out << "finiteness: " << finiteness_name(rep.finiteness) << "\n";
        if (rep.witness) {
            out << "infinity witness: source=" << format_vec(rep.witness->source) << " column="
                << (rep.witness->column + 1) << (rep.witness->lp_precheck ? " (rational relaxation)" : "") << "\n";
        }
        if (rep.shifts && !rep.shifts->entries.empty()) {
            out << "shift table:\n";
            for (const auto& se : rep.shifts->entries) {
                out << "  " << format_vec(se.source);
                if (se.from_basis) out << " basis";
                if (se.from_fundamental) out << " fundamental";
                out << " :";
                for (const auto& [col, sv] : se.cells) {
                    out << " c" << (col + 1) << "=";
                    if (sv.finite)
                        out << sv.value;
                    else
                        out << "inf";
                }
                out << "\n";
            }
        }
    }
    if (rep.holes_unavailable) out << "holes: INFINITE (listing unavailable)\n";
    if (rep.holes) {
        out << "holes (" << rep.holes->size() << "):\n";
        for (const auto& p : *rep.holes) out << "  " << format_vec(p) << "\n";
    }
    if (rep.non_saturation) {
        out << "non-saturation (" << rep.non_saturation->size() << "):\n";
        for (const auto& p : *rep.non_saturation) out << "  " << format_vec(p) << "\n";
    }
    auto minset = [&](const char* name, const std::optional<MinSetResult>& m) {
        if (!m) return;
        out << name << " (" << m->points.size() << (m->complete ? ", complete" : "") << "):";
        if (!m->complete) out << " bound=" << m->bound;
        out << "\n";
        for (const auto& p : m->points) out << "  " << format_vec(p) << "\n";
    };
    minset("min(S;S)", rep.min_ss);
    minset("min(S;Q)", rep.min_sq);
    minset("min(S;Qsat)", rep.min_sqsat);
    if (rep.verdict) {
        out << "finiteness equivalences agree: " << (rep.verdict->agree() ? "yes" : "no") << "\n";
        if (!rep.verdict->ray_witness_levels.empty())
            out << "extreme ray saturation levels: " << format_vec(rep.verdict->ray_witness_levels) << "\n";
    }
    if (timings) {
        out << "timings:";
        for (const auto& [name, ms] : rep.timings_ms) out << " " << name << "=" << static_cast<long long>(ms) << "ms";
        out << "\n";
    }
    return out.str();
}

std::string render_report_json(const SaturationReport& rep, bool timings) {
    ojson j;
    {
        ojson m = ojson::array();
        for (std::size_t i = 0; i < rep.A.rows; ++i) m.push_back(json_vec(rep.A.row(i)));
        j["matrix"] = m;
    }
    j["rank"] = rep.rank;
    j["pointed"] = true;
    j["grading"] = json_vec(rep.grading);
    {
        ojson e = ojson::array();
        for (std::size_t c : rep.extreme) e.push_back(c + 1);
        j["extremeColumns"] = e;
    }
    if (rep.hilbert) {
        ojson hb = ojson::array();
        for (const auto& e : *rep.hilbert) {
            ojson o;
            o["v"] = json_vec(e.v);
            o["generator"] = e.is_generator;
            o["hole"] = e.is_hole;
            hb.push_back(o);
        }
        j["hilbertBasis"] = hb;
    }
    if (rep.fundamental) j["fundamentalHoles"] = json_points(*rep.fundamental);
    if (rep.finiteness != Finiteness::NOT_RUN) {
        j["finiteness"] = finiteness_name(rep.finiteness);
        if (rep.shifts) {
            ojson st;
            ojson entries = ojson::array();
            for (const auto& se : rep.shifts->entries) {
                ojson o;
                o["source"] = json_vec(se.source);
                o["basis"] = se.from_basis;
                o["fundamental"] = se.from_fundamental;
                ojson cells = ojson::array();
                for (const auto& [col, sv] : se.cells) {
                    ojson c;
                    c["column"] = col + 1;
                    c["value"] = sv.finite ? json_int(sv.value) : ojson("inf");
                    c["lpPrecheck"] = sv.lp_precheck;
                    cells.push_back(c);
                }
                o["shifts"] = cells;
                entries.push_back(o);
            }
            st["entries"] = entries;
            st["bounds"] = json_vec(rep.shifts->n_bounds);
            j["shiftTable"] = st;
        }
        if (rep.witness) {
            ojson w;
            w["source"] = json_vec(rep.witness->source);
            w["column"] = rep.witness->column + 1;
            w["lpPrecheck"] = rep.witness->lp_precheck;
            j["witness"] = w;
        }
    }
    if (rep.holes_unavailable) j["holes"] = "inf";
    if (rep.holes) j["holes"] = json_points(*rep.holes);
    if (rep.holes_unavailable && rep.stages.saturation) j["nonSaturation"] = "inf";
    if (rep.non_saturation) j["nonSaturation"] = json_points(*rep.non_saturation);
    auto minset = [&](const char* name, const std::optional<MinSetResult>& m) {
        if (!m) return;
        ojson o;
        o["points"] = json_points(m->points);
        o["complete"] = m->complete;
        if (!m->complete) o["bound"] = json_int(m->bound);
        j[name] = o;
    };
    minset("minSS", rep.min_ss);
    minset("minSQ", rep.min_sq);
    minset("minSQsat", rep.min_sqsat);
    if (rep.verdict) {
        ojson v;
        v["agree"] = rep.verdict->agree();
        v["minSSFinite"] = rep.verdict->min_ss_finite;
        v["coneSPolyhedral"] = rep.verdict->cone_s_polyhedral;
        v["extremeRaysSaturated"] = rep.verdict->extreme_rays_saturated;
        v["holesFinite"] = rep.verdict->holes_finite;
        v["nonSaturationFinite"] = rep.verdict->non_saturation_finite;
        v["rayWitnessLevels"] = json_vec(rep.verdict->ray_witness_levels);
        j["theorem21"] = v;
    }
    if (timings) {
        ojson t;
        for (const auto& [name, ms] : rep.timings_ms) t[name] = ms;
        j["timingsMs"] = t;
    }
    return j.dump(2) + "\n";
}

int report_exit_code(const SaturationReport& rep) {
    if (rep.holes_unavailable && (rep.requested.holes || rep.requested.saturation)) return 3;
    return 0;
}

}  // namespace semihole
