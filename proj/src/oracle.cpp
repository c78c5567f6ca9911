#include "semihole/oracle.hpp"

#include "semihole/cone.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace semihole {

namespace {

Int rat_floor(const Rat& q) {
    Int z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return z;
}

Int rat_ceil(const Rat& q) {
    Int z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return z;
}

// a . z <= b
struct Ineq {
    QVec a;
    Rat b;
};

std::vector<Ineq> eliminate_var(const std::vector<Ineq>& rows, std::size_t k) {
    std::vector<Ineq> out;
    std::vector<const Ineq*> pos, neg;
    for (const auto& r : rows) {
        if (r.a[k] > 0)
            pos.push_back(&r);
        else if (r.a[k] < 0)
            neg.push_back(&r);
        else
            out.push_back(r);
    }
    for (const auto* p : pos)
        for (const auto* q : neg) {
            Ineq r;
            r.a.assign(p->a.size(), Rat(0));
            Rat cp = p->a[k], cq = -q->a[k];  // both positive
            for (std::size_t t = 0; t < r.a.size(); ++t) r.a[t] = cq * p->a[t] + cp * q->a[t];
            r.b = cq * p->b + cp * q->b;
            r.a[k] = 0;
            out.push_back(std::move(r));
        }
    return out;
}

// All integer points of a compact rational polytope in Z^r, by projection.
std::vector<Vec> enumerate_lattice(std::vector<Ineq> rows, std::size_t r) {
    std::vector<std::vector<Ineq>> lists(r + 1);
    lists[r] = std::move(rows);
    for (std::size_t k = r; k-- > 0;) lists[k] = eliminate_var(lists[k + 1], k);
    for (const auto& c : lists[0])
        if (c.b < 0) return {};

    std::vector<Vec> out;
    Vec z(r);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == r) {
            out.push_back(z);
            return;
        }
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (const auto& c : lists[k + 1]) {
            if (c.a[k] == 0) continue;
            Rat rest = c.b;
            for (std::size_t t = 0; t < k; ++t) rest -= c.a[t] * Rat(z[t]);
            Rat bound = rest / c.a[k];
            if (c.a[k] > 0) {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            } else {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            }
        }
        assert(has_lo && has_hi);
        for (Int v = rat_ceil(lo), top = rat_floor(hi); v <= top; ++v) {
            z[k] = v;
            self(self, k + 1);
        }
        z[k] = 0;
    };
    rec(rec, 0);
    return out;
}

struct RegionPoint {
    Vec z;  // normalized
    Vec p;  // original
    Int deg;
    bool in_q = false;
};

}  // namespace

BoxCensus census(const SemigroupContext& ctx, const Vec& lo, const Vec& hi,
                 const std::optional<Int>& region_degree) {
    BoxCensus c;
    c.lo = lo;
    c.hi = hi;
    const std::size_t d = ctx.lat.d;
    const std::size_t r = ctx.lat.r;

    // Smallest degree bound covering every box point that could lie in the cone.
    Int D = 0;
    for (std::size_t j = 0; j < d; ++j) D += std::max(ctx.cone.grading[j] * lo[j], ctx.cone.grading[j] * hi[j]);
    if (D < 0) D = 0;
    if (region_degree && *region_degree > D) D = *region_degree;
    c.region_degree = D;

    // Region {z : B z >= 0, deg <= D} in normalized coordinates.
    std::vector<Ineq> rows;
    for (std::size_t i = 0; i < ctx.cone.ineq_normalized.rows; ++i) {
        Ineq q;
        q.a.assign(r, Rat(0));
        for (std::size_t j = 0; j < r; ++j) q.a[j] = -Rat(ctx.cone.ineq_normalized(i, j));
        q.b = 0;
        rows.push_back(std::move(q));
    }
    {
        Ineq q;
        q.a.assign(r, Rat(0));
        for (std::size_t j = 0; j < r; ++j) q.a[j] = Rat(ctx.grading_n[j]);
        q.b = Rat(D);
        rows.push_back(std::move(q));
    }

    std::vector<RegionPoint> region;
    for (auto& z : enumerate_lattice(std::move(rows), r)) {
        RegionPoint rp;
        rp.p = ctx.lat.lift_point(z);
        rp.deg = ctx.degree_n(z);
        rp.z = std::move(z);
        region.push_back(std::move(rp));
    }
    std::sort(region.begin(), region.end(), [](const RegionPoint& x, const RegionPoint& y) {
        if (x.deg != y.deg) return x.deg < y.deg;
        return lex_compare(x.p, y.p) < 0;
    });

    // Coin-problem pass in increasing degree: a point is in Q when it is zero
    // or some generator leads back to an earlier Q point.
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < ctx.lat.reduced.cols; ++j) gens.push_back(ctx.lat.reduced.col(j));
    std::map<Vec, std::size_t> pos;  // normalized point -> region index
    for (std::size_t i = 0; i < region.size(); ++i) pos.emplace(region[i].z, i);
    for (auto& rp : region) {
        if (is_zero(rp.z)) {
            rp.in_q = true;
            continue;
        }
        for (const auto& g : gens) {
            auto it = pos.find(vec_sub(rp.z, g));
            if (it != pos.end() && region[it->second].in_q) {
                rp.in_q = true;
                break;
            }
        }
    }

    std::vector<const RegionPoint*> holes;
    for (const auto& rp : region) {
        c.region_in_q.emplace(rp.p, rp.in_q);
        if (!rp.in_q) {
            holes.push_back(&rp);
            c.region_holes.push_back(rp.p);
        }
    }

    auto sat_of = [&](const Vec& z) {
        for (const auto* h : holes)
            if (in_cone_normalized(ctx.cone, vec_sub(h->z, z))) return false;
        return true;
    };

    // Classify every lattice point of the requested box.
    Vec p = lo;
    for (;;) {
        Vec z;
        if (!ctx.lat.normalize_point(p, z) || !in_cone_normalized(ctx.cone, z)) {
            c.classification.emplace(p, BoxCensus::Cls::OUTSIDE_QSAT);
        } else {
            auto it = pos.find(z);
            assert(it != pos.end());
            if (region[it->second].in_q) {
                c.classification.emplace(p, BoxCensus::Cls::IN_Q);
                c.sat.emplace(p, sat_of(z));
            } else {
                c.classification.emplace(p, BoxCensus::Cls::HOLE);
            }
        }
        std::size_t j = 0;
        while (j < d) {
            if (++p[j] <= hi[j]) break;
            p[j] = lo[j];
            ++j;
        }
        if (j == d) break;
    }
    return c;
}

OracleMinSets oracle_min_sets(const SemigroupContext& ctx, const BoxCensus& c, const Int& valid_degree) {
    struct Pt {
        Vec p, z;
        bool in_q, sat;
    };
    std::vector<Pt> pts;
    std::vector<Vec> hole_z;
    for (const auto& [p, in_q] : c.region_in_q) {
        Pt t;
        t.p = p;
        bool ok = ctx.lat.normalize_point(p, t.z);
        assert(ok);
        (void)ok;
        t.in_q = in_q;
        t.sat = false;
        if (!in_q) hole_z.push_back(t.z);
        pts.push_back(std::move(t));
    }
    std::map<Vec, std::size_t> pos;
    for (std::size_t i = 0; i < pts.size(); ++i) pos.emplace(pts[i].p, i);
    for (auto& t : pts) {
        if (!t.in_q) continue;
        t.sat = true;
        for (const auto& h : hole_z)
            if (in_cone_normalized(ctx.cone, vec_sub(h, t.z))) {
                t.sat = false;
                break;
            }
    }

    auto in_s = [&](const Vec& p) {
        auto it = pos.find(p);
        return it != pos.end() && pts[it->second].sat;
    };

    OracleMinSets out;
    for (const auto& a : pts) {
        if (!a.sat || ctx.degree(a.p) > valid_degree) continue;
        bool min_ss = true, min_sq = true, min_sqsat = true;
        for (const auto& s : pts) {
            if (is_zero(s.p)) continue;
            Vec rem = vec_sub(a.p, s.p);
            if (!in_s(rem)) continue;
            min_sqsat = false;
            if (s.in_q) min_sq = false;
            if (s.sat) min_ss = false;
        }
        if (min_ss) out.minSS.push_back(a.p);
        if (min_sq) out.minSQ.push_back(a.p);
        if (min_sqsat) out.minSQsat.push_back(a.p);
    }
    auto order = [&](const Vec& x, const Vec& y) {
        Int dx = ctx.degree(x), dy = ctx.degree(y);
        if (dx != dy) return dx < dy;
        return lex_compare(x, y) < 0;
    };
    std::sort(out.minSS.begin(), out.minSS.end(), order);
    std::sort(out.minSQ.begin(), out.minSQ.end(), order);
    std::sort(out.minSQsat.begin(), out.minSQsat.end(), order);
    return out;
}

Mat random_instance(std::uint64_t seed, std::size_t max_d, std::size_t max_n, long entry_max) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_d(1, max_d), pick_n(1, max_n);
    std::uniform_int_distribution<long> pick_e(0, entry_max);
    for (;;) {
        std::size_t d = pick_d(rng), n = pick_n(rng);
        Mat A(d, n);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = pick_e(rng);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            if (is_zero(A.col(j))) ok = false;
        if (ok) return A;  // nonnegative nonzero columns give a pointed cone
    }
}

bool fm_feasible(const LinSystem& sys) {
    std::vector<Ineq> rows;
    auto push = [&](const QVec& a, const Rat& b, bool neg) {
        Ineq q;
        q.a.assign(sys.nvars, Rat(0));
        for (std::size_t j = 0; j < a.size(); ++j) q.a[j] = neg ? -a[j] : a[j];
        q.b = neg ? Rat(-b) : b;
        rows.push_back(std::move(q));
    };
    for (const auto& r : sys.rows) {
        if (r.rel != Rel::GE) push(r.a, r.b, false);
        if (r.rel != Rel::LE) push(r.a, r.b, true);
    }
    for (std::size_t j = 0; j < sys.nvars; ++j) {
        if (sys.sign_of(j) == VarSign::Free) continue;
        Ineq q;
        q.a.assign(sys.nvars, Rat(0));
        q.a[j] = sys.sign_of(j) == VarSign::NonNeg ? Rat(-1) : Rat(1);
        q.b = 0;
        rows.push_back(std::move(q));
    }
    for (std::size_t k = sys.nvars; k-- > 0;) rows = eliminate_var(rows, k);
    for (const auto& r : rows)
        if (r.b < 0) return false;
    return true;
}

}  // namespace semihole
