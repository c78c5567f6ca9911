#include "semihole/holes.hpp"

#include "semihole/errors.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace semihole {

namespace {

void sort_by_degree_lex(std::vector<Vec>& v, const SemigroupContext& ctx) {
    std::sort(v.begin(), v.end(), [&](const Vec& a, const Vec& b) {
        Int da = ctx.degree(a), db = ctx.degree(b);
        if (da != db) return da < db;
        return lex_compare(a, b) < 0;
    });
}

}  // namespace

const std::vector<HilbertElement>& HoleAnalyzer::hilbert() {
    if (!hilbert_) hilbert_ = hilbert_basis_of_cone(ctx_);
    return *hilbert_;
}

bool HoleAnalyzer::saturated() {
    for (const auto& e : hilbert())
        if (e.is_hole) return false;
    return true;
}

bool HoleAnalyzer::in_Q(const Vec& x) {
    auto it = memo_q_.find(x);
    if (it != memo_q_.end()) return it->second;
    bool res;
    if (holes_) {
        res = in_Qsat(x) && hole_set_.count(x) == 0;
    } else {
        res = semigroup_member(ctx_, x).member;
    }
    memo_q_.emplace(x, res);
    return res;
}

bool HoleAnalyzer::in_Qsat(const Vec& x) {
    Vec z;
    if (!ctx_.lat.normalize_point(x, z)) return false;
    return in_cone_normalized(ctx_.cone, z);
}

bool HoleAnalyzer::in_P(const Vec& x) {
    LinSystem sys;
    const Mat& A = ctx_.A;
    sys.nvars = A.cols;
    for (std::size_t i = 0; i < A.rows; ++i) {
        QVec row(A.cols);
        for (std::size_t j = 0; j < A.cols; ++j) row[j] = Rat(A(i, j));
        sys.add_row(std::move(row), Rel::EQ, Rat(x[i]));
    }
    for (std::size_t j = 0; j < A.cols; ++j) {
        QVec row(A.cols);
        row[j] = 1;
        sys.add_row(std::move(row), Rel::LE, Rat(1));
    }
    return lp_feasible(sys).feasible;
}

bool HoleAnalyzer::is_fundamental_hole(const Vec& x) {
    if (!in_Qsat(x) || in_Q(x)) return false;
    for (std::size_t j = 0; j < ctx_.A.cols; ++j)
        if (in_Qsat(vec_sub(x, ctx_.A.col(j)))) return false;
    return true;
}

const std::vector<Vec>& HoleAnalyzer::fundamental() {
    if (fundamental_) return *fundamental_;
    std::vector<Vec> hole_elems;
    for (const auto& e : hilbert())
        if (e.is_hole) hole_elems.push_back(e.v);
    std::vector<Vec> found;
    if (!hole_elems.empty()) {
        // Fundamental holes are sums of hole-flagged basis elements inside the
        // zonotope spanned by the columns; bound the walk by its top degree.
        Int dmax = 0;
        for (std::size_t j = 0; j < ctx_.A.cols; ++j) dmax += ctx_.degree(ctx_.A.col(j));
        std::set<Vec> seen;
        std::deque<Vec> queue;
        for (const auto& h : hole_elems)
            if (ctx_.degree(h) <= dmax && seen.insert(h).second) queue.push_back(h);
        while (!queue.empty()) {
            Vec p = queue.front();
            queue.pop_front();
            if (is_fundamental_hole(p)) found.push_back(p);
            for (const auto& h : hole_elems) {
                Vec q = vec_add(p, h);
                if (ctx_.degree(q) <= dmax && seen.insert(q).second) queue.push_back(q);
            }
        }
        sort_by_degree_lex(found, ctx_);
        for (const auto& y : found) assert(in_P(y));
    }
    fundamental_ = std::move(found);
    return *fundamental_;
}

Finiteness HoleAnalyzer::finiteness() {
    if (verdict_ != Finiteness::NOT_RUN) return verdict_;
    const std::size_t n = ctx_.A.cols;
    std::vector<Vec> hole_elems;
    for (const auto& e : hilbert())
        if (e.is_hole) hole_elems.push_back(e.v);
    shifts_.n_bounds.assign(n, Int(0));
    if (hole_elems.empty()) {
        verdict_ = Finiteness::FINITE;
        return verdict_;
    }

    // Decide finiteness on (hole-flagged basis element) x (extreme column).
    const auto& ext = ctx_.cone.extreme;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t l = 0; l < hole_elems.size(); ++l)
        for (std::size_t e = 0; e < ext.size(); ++e) pairs.emplace_back(l, ext[e]);
    std::vector<ShiftValue> vals(pairs.size());
    parallel_for(pairs.size(), ctx_.threads,
                 [&](std::size_t t) { vals[t] = min_shift(ctx_, hole_elems[pairs[t].first], pairs[t].second); });

    std::size_t bad = pairs.size();
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if (!vals[t].finite) {
            bad = t;
            break;
        }
    if (bad != pairs.size()) {
        verdict_ = Finiteness::INFINITE;
        inf_witness_.source = hole_elems[pairs[bad].first];
        inf_witness_.column = pairs[bad].second;
        inf_witness_.lp_precheck = vals[bad].lp_precheck;
        for (std::size_t l = 0; l < hole_elems.size(); ++l) {
            ShiftEntry se;
            se.source = hole_elems[l];
            se.from_basis = true;
            for (std::size_t t = 0; t <= bad; ++t)
                if (pairs[t].first == l) se.cells.emplace_back(pairs[t].second, vals[t]);
            if (!se.cells.empty()) shifts_.entries.push_back(std::move(se));
        }
        return verdict_;
    }
    verdict_ = Finiteness::FINITE;

    // Finite: fill the complete table over all columns, for basis-hole sources
    // and fundamental holes alike.
    const std::vector<Vec>& h0 = fundamental();
    std::vector<Vec> sources = hole_elems;
    std::vector<char> from_basis(sources.size(), 1), from_fund(sources.size(), 0);
    for (const auto& y : h0) {
        auto it = std::find(sources.begin(), sources.end(), y);
        if (it == sources.end()) {
            sources.push_back(y);
            from_basis.push_back(0);
            from_fund.push_back(1);
        } else {
            from_fund[it - sources.begin()] = 1;
        }
    }
    std::vector<std::vector<ShiftValue>> table(sources.size(), std::vector<ShiftValue>(n));
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t s = 0; s < sources.size(); ++s)
        for (std::size_t i = 0; i < n; ++i) all.emplace_back(s, i);
    parallel_for(all.size(), ctx_.threads,
                 [&](std::size_t t) { table[all[t].first][all[t].second] = min_shift(ctx_, sources[all[t].first], all[t].second); });

    for (std::size_t s = 0; s < sources.size(); ++s) {
        ShiftEntry se;
        se.source = sources[s];
        se.from_basis = from_basis[s];
        se.from_fundamental = from_fund[s];
        for (std::size_t i = 0; i < n; ++i) {
            const ShiftValue& sv = table[s][i];
            assert(sv.finite && sv.value >= 1);  // sources are holes
            se.cells.emplace_back(i, sv);
            if (from_fund[s] && sv.value > shifts_.n_bounds[i]) shifts_.n_bounds[i] = sv.value;
        }
        shifts_.entries.push_back(std::move(se));
    }
    return verdict_;
}

const ShiftTable& HoleAnalyzer::shifts() {
    finiteness();
    return shifts_;
}

const std::vector<Vec>& HoleAnalyzer::holes() {
    if (holes_) return *holes_;
    if (finiteness() == Finiteness::INFINITE) throw InfiniteHolesError();
    std::vector<Vec> out;
    if (!saturated()) {
        const std::vector<Vec>& h0 = fundamental();
        // Degree cap from the shift table: every hole is a fundamental hole
        // plus generator steps below the per-column shift minima.
        Int cap = 0;
        for (const auto& se : shifts_.entries) {
            if (!se.from_fundamental) continue;
            Int b = ctx_.degree(se.source);
            for (const auto& [i, sv] : se.cells) b += (sv.value - 1) * ctx_.degree(ctx_.A.col(i));
            if (b > cap) cap = b;
        }
        std::set<Vec> seen(h0.begin(), h0.end());
        std::deque<Vec> queue(h0.begin(), h0.end());
        while (!queue.empty()) {
            Vec p = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < ctx_.A.cols; ++j) {
                Vec q = vec_add(p, ctx_.A.col(j));
                if (seen.count(q) || in_Q(q)) continue;
                if (ctx_.degree(q) > cap) throw std::logic_error("hole outside the finiteness bound");
                seen.insert(q);
                queue.push_back(q);
            }
        }
        out.assign(seen.begin(), seen.end());
        sort_by_degree_lex(out, ctx_);
    }
    hole_set_ = std::set<Vec>(out.begin(), out.end());
    holes_ = std::move(out);
    return *holes_;
}

const std::vector<Vec>& HoleAnalyzer::non_saturation() {
    if (non_saturation_) return *non_saturation_;
    holes();
    std::vector<Vec> out;
    if (!saturated()) {
        const std::vector<Vec>& h0 = fundamental();
        const std::size_t n = ctx_.A.cols;
        // Every non-saturation point has all multiplicities below the bounds.
        Vec lambda(n, Int(0));
        std::set<Vec> pts;
        while (true) {
            Vec p(ctx_.A.rows, Int(0));
            for (std::size_t j = 0; j < n; ++j)
                if (lambda[j] != 0) p = vec_add(p, vec_scale(lambda[j], ctx_.A.col(j)));
            pts.insert(std::move(p));
            std::size_t pos = 0;
            while (pos < n) {
                lambda[pos] += 1;
                if (lambda[pos] < shifts_.n_bounds[pos]) break;
                lambda[pos] = 0;
                ++pos;
            }
            if (pos == n) break;
        }
        for (const auto& p : pts) {
            bool sat = true;
            for (const auto& y : h0)
                if (hole_set_.count(vec_add(p, y))) {
                    sat = false;
                    break;
                }
            if (!sat) out.push_back(p);
        }
        sort_by_degree_lex(out, ctx_);
    }
    non_saturation_ = std::move(out);
    return *non_saturation_;
}

bool HoleAnalyzer::in_S(const Vec& x) {
    if (!in_Q(x)) return false;
    for (const auto& y : fundamental())
        if (!in_Q(vec_add(x, y))) return false;
    return true;
}

bool HoleAnalyzer::is_saturation_point(const Vec& x) {
    if (!in_Q(x)) throw NotInSemigroupError();
    return in_S(x);
}

std::vector<Vec> HoleAnalyzer::enumerate_qsat_upto(const Int& degree_bound) {
    std::vector<Vec> elems;
    for (const auto& e : hilbert()) elems.push_back(e.v);
    Vec zero(ctx_.A.rows, Int(0));
    std::set<Vec> seen{zero};
    std::deque<Vec> queue{zero};
    while (!queue.empty()) {
        Vec p = queue.front();
        queue.pop_front();
        for (const auto& b : elems) {
            Vec q = vec_add(p, b);
            if (ctx_.degree(q) > degree_bound || seen.count(q)) continue;
            seen.insert(q);
            queue.push_back(q);
        }
    }
    std::vector<Vec> out(seen.begin(), seen.end());
    sort_by_degree_lex(out, ctx_);
    return out;
}

MinSetResult HoleAnalyzer::min_sat_S() {
    if (finiteness() == Finiteness::INFINITE) throw InfiniteHolesError();
    MinSetResult res;
    res.complete = true;
    res.bound = 0;
    if (saturated()) {
        // S = Q and 0 is a saturation point dominating everything
        res.points.emplace_back(ctx_.A.rows, Int(0));
        return res;
    }
    const std::vector<Vec>& H = holes();
    const std::vector<Vec>& Sbar = non_saturation();
    Int D = 1;
    for (const auto& v : H) D = std::max(D, ctx_.degree(v));
    for (const auto& v : Sbar) D = std::max(D, ctx_.degree(v));
    for (const auto& e : hilbert()) D = std::max(D, ctx_.degree(e.v));
    res.bound = 3 * D;
    for (const auto& a : enumerate_qsat_upto(res.bound)) {
        if (is_zero(a) || !in_S(a)) continue;
        bool reducible = false;
        for (const auto& m : res.points)
            if (in_S(vec_sub(a, m))) {
                reducible = true;
                break;
            }
        if (!reducible) res.points.push_back(a);
    }
    return res;
}

std::vector<Vec> HoleAnalyzer::minset_candidates_complete() {
    std::set<Vec> cand;
    for (const auto* part : {&holes(), &non_saturation()})
        for (const auto& p : *part)
            for (std::size_t j = 0; j < ctx_.A.cols; ++j) cand.insert(vec_add(p, ctx_.A.col(j)));
    // Semigroup points of the generator zonotope.
    const Mat& A = ctx_.A;
    Vec lo(A.rows, Int(0)), hi(A.rows, Int(0));
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (A(i, j) < 0) lo[i] += A(i, j);
            else hi[i] += A(i, j);
        }
    Vec x = lo;
    while (true) {
        if (in_Qsat(x) && in_P(x) && in_Q(x)) cand.insert(x);
        std::size_t pos = 0;
        while (pos < A.rows) {
            x[pos] += 1;
            if (x[pos] <= hi[pos]) break;
            x[pos] = lo[pos];
            ++pos;
        }
        if (pos == A.rows) break;
    }
    std::vector<Vec> out(cand.begin(), cand.end());
    sort_by_degree_lex(out, ctx_);
    return out;
}

MinSetResult HoleAnalyzer::min_sat_generic(const std::vector<Vec>& reducers, std::optional<Int> bound) {
    MinSetResult res;
    if (saturated()) {
        res.complete = true;
        res.bound = 0;
        res.points.emplace_back(ctx_.A.rows, Int(0));
        return res;
    }
    std::vector<Vec> cands;
    if (finiteness() == Finiteness::FINITE) {
        res.complete = true;
        res.bound = 0;
        cands = minset_candidates_complete();
    } else {
        res.complete = false;
        res.bound = bound.value_or(default_bound());
        cands = enumerate_qsat_upto(res.bound);
    }
    for (const auto& a : cands) {
        if (is_zero(a) || !in_S(a)) continue;
        bool minimal = true;
        for (const auto& r : reducers)
            if (in_S(vec_sub(a, r))) {
                minimal = false;
                break;
            }
        if (minimal) res.points.push_back(a);
    }
    sort_by_degree_lex(res.points, ctx_);
    return res;
}

MinSetResult HoleAnalyzer::min_sat_Q(std::optional<Int> bound) {
    finiteness();
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < ctx_.A.cols; ++j) cols.push_back(ctx_.A.col(j));
    return min_sat_generic(cols, bound);
}

MinSetResult HoleAnalyzer::min_sat_Qsat(std::optional<Int> bound) {
    finiteness();
    std::vector<Vec> elems;
    for (const auto& e : hilbert()) elems.push_back(e.v);
    return min_sat_generic(elems, bound);
}

Int HoleAnalyzer::default_bound() {
    Int d = 1;
    for (const auto& e : hilbert()) d = std::max(d, ctx_.degree(e.v));
    for (const auto& y : fundamental()) d = std::max(d, ctx_.degree(y));
    return 4 * d;
}

JointVerdict HoleAnalyzer::joint_verdict() {
    JointVerdict jv;
    bool fin = finiteness() == Finiteness::FINITE;
    jv.holes_finite = fin;
    jv.non_saturation_finite = fin;
    jv.min_ss_finite = fin;
    jv.cone_s_polyhedral = fin;
    jv.extreme_rays_saturated = fin;
    if (fin) {
        for (std::size_t e = 0; e < ctx_.cone.extreme.size(); ++e) {
            std::size_t i = ctx_.cone.extreme[e];
            Int cap = shifts_.n_bounds[i] > 0 ? shifts_.n_bounds[i] : Int(1);
            Int found = -1;
            Vec p(ctx_.A.rows, Int(0));
            for (Int lvl = 1; lvl <= cap; ++lvl) {
                p = vec_add(p, ctx_.A.col(i));
                if (in_S(p)) {
                    found = lvl;
                    break;
                }
            }
            if (found < 0) jv.extreme_rays_saturated = false;
            jv.ray_witness_levels.push_back(found);
        }
    }
    return jv;
}

Int frobenius_number(const std::vector<Int>& a) {
    if (a.size() < 2) throw UsageError("frobenius needs at least two integers");
    Vec v;
    for (const auto& x : a) {
        if (x <= 0) throw UsageError("frobenius entries must be positive");
        v.push_back(x);
    }
    if (vec_gcd(v) != 1) throw GcdNotOneError();
    Mat A(1, v.size());
    A.set_row(0, v);
    HoleAnalyzer an(make_context(A));
    const auto& H = an.holes();
    if (H.empty()) return -1;
    return H.back()[0];
}

}  // namespace semihole
