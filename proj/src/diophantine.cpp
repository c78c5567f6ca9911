#include "semihole/diophantine.hpp"

#include "semihole/errors.hpp"
#include "semihole/normal_form.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace semihole {

namespace {

// g reduces s when they are sign-compatible and g is componentwise dominated.
bool reduces(const Vec& g, const Vec& s) {
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] > 0 && s[j] < g[j]) return false;
        if (g[j] < 0 && s[j] > g[j]) return false;
    }
    return true;
}

Int norm1(const Vec& v) {
    Int s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

// No coordinate where the signs oppose; the sum of such a pair reduces to
// zero by the pair itself, so it never needs to enter the queue.
bool sign_compatible(const Vec& a, const Vec& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        int sa = sgn(a[j]), sb = sgn(b[j]);
        if (sa * sb < 0) return false;
    }
    return true;
}

struct QItem {
    Int norm;
    Vec v;
};

struct QueueOrder {
    bool operator()(const QItem& a, const QItem& b) const {
        if (a.norm != b.norm) return a.norm > b.norm;  // min-heap by 1-norm
        return lex_compare(a.v, b.v) > 0;
    }
};

Vec normal_form(Vec s, const std::vector<Vec>& G) {
    bool changed = true;
    while (changed && !is_zero(s)) {
        changed = false;
        for (const auto& g : G)
            if (reduces(g, s)) {
                s = vec_sub(s, g);
                changed = true;
                break;
            }
    }
    return s;
}

struct CompletionOptions {
    long t_index = -1;      // homogenization coordinate, -1 when absent
    bool truncate = false;  // discard vectors with |v[t_index]| > 1
    bool early_exit = false;
};

// Pottier completion: sign-compatible minimal nonzero vectors of the lattice
// spanned by `basis` (optionally truncated at the homogenization coordinate).
// When early_exit fires, returns just the first all-nonnegative t=1 vector.
std::vector<Vec> graver_completion(const std::vector<Vec>& basis, const CompletionOptions& opt, bool& early) {
    early = false;
    auto in_bounds = [&](const Vec& v) {
        if (!opt.truncate || opt.t_index < 0) return true;
        return abs(v[opt.t_index]) <= 1;
    };
    auto is_target = [&](const Vec& v) {
        if (!opt.early_exit || opt.t_index < 0) return false;
        if (v[opt.t_index] != 1) return false;
        for (const auto& x : v)
            if (x < 0) return false;
        return true;
    };

    std::vector<Vec> G;
    std::priority_queue<QItem, std::vector<QItem>, QueueOrder> todo;
    auto push = [&](Vec v) {
        QItem it;
        it.norm = norm1(v);
        it.v = std::move(v);
        todo.push(std::move(it));
    };
    for (const auto& f : basis) {
        if (is_zero(f)) continue;
        push(f);
        push(vec_neg(f));
    }
    while (!todo.empty()) {
        Vec s = std::move(const_cast<QItem&>(todo.top()).v);
        todo.pop();
        s = normal_form(std::move(s), G);
        if (is_zero(s) || !in_bounds(s)) continue;
        if (is_target(s)) {
            early = true;
            return {s};
        }
        for (const auto& g : G) {
            if (sign_compatible(s, g)) continue;
            Vec sum = vec_add(s, g);
            if (!is_zero(sum) && in_bounds(sum)) push(std::move(sum));
        }
        G.push_back(std::move(s));
    }
    // Keep only the sign-compatible minimal elements.
    std::sort(G.begin(), G.end(), [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
    G.erase(std::unique(G.begin(), G.end()), G.end());
    std::vector<Vec> out;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < G.size() && minimal; ++j)
            if (j != i && reduces(G[j], G[i])) minimal = false;
        if (minimal) out.push_back(G[i]);
    }
    return out;
}

// Column operations bringing the t-row of the kernel basis to a single entry.
void isolate_t_row(std::vector<Vec>& basis, std::size_t t) {
    while (true) {
        std::size_t nz = basis.size();
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (basis[j][t] != 0 && (nz == basis.size() || abs(basis[j][t]) < abs(basis[nz][t]))) nz = j;
        if (nz == basis.size()) return;
        bool clean = true;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j == nz || basis[j][t] == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), basis[j][t].get_mpz_t(), basis[nz][t].get_mpz_t());
            basis[j] = vec_sub(basis[j], vec_scale(q, basis[nz]));
            if (basis[j][t] != 0) clean = false;
        }
        if (clean) {
            if (nz != 0) std::swap(basis[0], basis[nz]);
            if (basis[0][t] < 0) basis[0] = vec_neg(basis[0]);
            return;
        }
    }
}

}  // namespace

DioSolutionSet solve_diophantine(const Mat& M, const Vec& b, const std::vector<VarSign>& signs,
                                 const DioOptions& opt) {
    const std::size_t nvars = M.cols;
    assert(signs.empty() || signs.size() == nvars);
    auto sign_of = [&](std::size_t j) { return signs.empty() ? VarSign::NonNeg : signs[j]; };

    // A line inside the sign pattern makes minimal sets meaningless.
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < nvars; ++j)
        if (sign_of(j) == VarSign::Free) free_cols.push_back(j);
    if (!free_cols.empty()) {
        Mat sub(M.rows, free_cols.size());
        for (std::size_t t = 0; t < free_cols.size(); ++t) sub.set_col(t, M.col(free_cols[t]));
        if (integer_kernel(sub).cols > 0)
            throw UnsupportedSystemError("the solution set contains a line through the free variables");
    }

    // Sign transform: every transformed variable is nonnegative.
    struct ColMap {
        std::size_t var;
        int factor;
    };
    std::vector<ColMap> map;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < nvars; ++j) {
        Vec cj = M.col(j);
        switch (sign_of(j)) {
            case VarSign::NonNeg:
                cols.push_back(cj);
                map.push_back({j, 1});
                break;
            case VarSign::NonPos:
                cols.push_back(vec_neg(cj));
                map.push_back({j, -1});
                break;
            case VarSign::Free:
                cols.push_back(cj);
                map.push_back({j, 1});
                cols.push_back(vec_neg(cj));
                map.push_back({j, -1});
                break;
        }
    }
    const bool inhom = !is_zero(b);
    if (inhom) cols.push_back(vec_neg(b));
    const std::size_t ncols = cols.size();
    const long t_index = inhom ? long(ncols - 1) : -1;

    Mat M2(M.rows, ncols);
    for (std::size_t j = 0; j < ncols; ++j) M2.set_col(j, cols[j]);
    Mat K = integer_kernel(M2);
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < K.cols; ++j) basis.push_back(K.col(j));

    if (inhom && !basis.empty()) {
        isolate_t_row(basis, ncols - 1);
        if (opt.truncate && basis[0][ncols - 1] > 1) {
            // No lattice element reaches t = 1; keep only the t = 0 sublattice.
            basis.erase(basis.begin());
        }
    }

    CompletionOptions copt;
    copt.t_index = t_index;
    copt.truncate = opt.truncate && inhom;
    copt.early_exit = opt.early_exit && inhom;
    bool early = false;
    std::vector<Vec> graver = graver_completion(basis, copt, early);

    DioSolutionSet out;
    auto map_back = [&](const Vec& g) {
        Vec x(nvars, Int(0));
        for (std::size_t c = 0; c < map.size(); ++c) x[map[c].var] += Int(map[c].factor) * g[c];
        return x;
    };
    for (const auto& g : graver) {
        bool nonneg = true;
        for (const auto& v : g)
            if (v < 0) {
                nonneg = false;
                break;
            }
        if (!nonneg) continue;
        if (inhom && g[ncols - 1] == 1) {
            out.inhomogeneousMinimal.push_back(map_back(g));
        } else if (!inhom || g[ncols - 1] == 0) {
            Vec x = map_back(g);
            if (!is_zero(x)) out.homogeneousBasis.push_back(std::move(x));
        }
    }
    if (!inhom) out.inhomogeneousMinimal.push_back(Vec(nvars, Int(0)));
    auto lexless = [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; };
    std::sort(out.inhomogeneousMinimal.begin(), out.inhomogeneousMinimal.end(), lexless);
    std::sort(out.homogeneousBasis.begin(), out.homogeneousBasis.end(), lexless);
    return out;
}

MembershipResult semigroup_member(const SemigroupContext& ctx, const Vec& b) {
    MembershipResult res;
    if (is_zero(b)) {
        res.member = true;
        res.witness.assign(ctx.A.cols, Int(0));
        return res;
    }
    Vec z;
    if (!ctx.lat.normalize_point(b, z)) return res;
    if (!in_cone_normalized(ctx.cone, z)) return res;
    DioOptions opt;
    opt.early_exit = true;
    DioSolutionSet sol = solve_diophantine(ctx.lat.reduced, z, {}, opt);
    if (sol.inhomogeneousMinimal.empty()) return res;
    res.member = true;
    res.witness = sol.inhomogeneousMinimal.front();
    return res;
}

ShiftValue min_shift(const SemigroupContext& ctx, const Vec& y, std::size_t col) {
    ShiftValue sv;
    {
        MembershipResult m = semigroup_member(ctx, y);
        if (m.member) {
            sv.finite = true;
            sv.value = 0;
            sv.witness = std::move(m.witness);
            sv.witness.push_back(Int(0));
            return sv;
        }
    }
    Vec z;
    bool ok = ctx.lat.normalize_point(y, z);
    assert(ok);
    (void)ok;
    const Mat& An = ctx.lat.reduced;

    // With y not in Q, some shift exists exactly when A x = y is solvable with
    // x_col nonpositive and the rest nonnegative; x_col is then -lambda.
    std::vector<VarSign> signs(An.cols, VarSign::NonNeg);
    signs[col] = VarSign::NonPos;

    // Rational relaxation first: no real solution means no shift at all.
    LinSystem lp;
    lp.nvars = An.cols;
    lp.signs = signs;
    for (std::size_t i = 0; i < An.rows; ++i) {
        QVec row(An.cols);
        for (std::size_t j = 0; j < An.cols; ++j) row[j] = Rat(An(i, j));
        lp.add_row(std::move(row), Rel::EQ, Rat(z[i]));
    }
    if (!lp_feasible(lp).feasible) {
        sv.finite = false;
        sv.lp_precheck = true;
        return sv;
    }

    // Any solution gives an upper bound on the shift; scanning the levels
    // below it with plain membership queries then finds the minimum.
    DioOptions eopt;
    eopt.early_exit = true;
    DioSolutionSet sol = solve_diophantine(An, z, signs, eopt);
    if (sol.inhomogeneousMinimal.empty()) {
        sv.finite = false;
        return sv;
    }
    Vec x0 = sol.inhomogeneousMinimal.front();
    Int lambda0 = -x0[col];
    for (Int lambda = 1; lambda < lambda0; ++lambda) {
        MembershipResult m = semigroup_member(ctx, vec_add(y, vec_scale(lambda, ctx.A.col(col))));
        if (m.member) {
            sv.finite = true;
            sv.value = lambda;
            sv.witness = std::move(m.witness);
            sv.witness.push_back(lambda);
            return sv;
        }
    }
    sv.finite = true;
    sv.value = lambda0;
    sv.witness = std::move(x0);
    sv.witness[col] = 0;
    sv.witness.push_back(lambda0);
    return sv;
}

std::vector<HilbertElement> hilbert_basis_of_cone(const SemigroupContext& ctx) {
    const std::size_t r = ctx.lat.r;
    const Mat& An = ctx.lat.reduced;
    std::set<Vec> cand;
    for (std::size_t j = 0; j < An.cols; ++j) cand.insert(An.col(j));

    // Lattice points of the half-open parallelepipeds of all simplicial
    // subcones spanned by extreme columns.
    const auto& ext = ctx.cone.extreme;
    if (ext.size() >= r) {
        std::vector<std::size_t> pick(r);
        std::vector<std::size_t> stack;
        // iterate r-combinations of ext
        std::vector<std::size_t> comb(r);
        for (std::size_t i = 0; i < r; ++i) comb[i] = i;
        while (true) {
            Mat G(r, r);
            for (std::size_t t = 0; t < r; ++t) G.set_col(t, An.col(ext[comb[t]]));
            SnfResult snf = smith_normal_form(G);
            if (snf.rank == r) {
                Int det = 1;
                for (std::size_t i = 0; i < r; ++i) det *= snf.D(i, i);
                if (det > 1) {
                    Mat Uinv = unimodular_inverse(snf.U);
                    // Coset representatives k in prod [0, d_i); point = z0 - G*floor(V * (k_i/d_i)).
                    Vec k(r, Int(0));
                    while (true) {
                        if (!is_zero(k)) {
                            QVec w(r);
                            for (std::size_t i = 0; i < r; ++i) w[i] = Rat(k[i]) / Rat(snf.D(i, i));
                            Vec fl(r);
                            for (std::size_t i = 0; i < r; ++i) {
                                Rat di = 0;
                                for (std::size_t j = 0; j < r; ++j) di += Rat(snf.V(i, j)) * w[j];
                                Int q;
                                mpz_fdiv_q(q.get_mpz_t(), di.get_num_mpz_t(), di.get_den_mpz_t());
                                fl[i] = q;
                            }
                            Vec z0 = mat_vec(Uinv, k);
                            Vec p = vec_sub(z0, mat_vec(G, fl));
                            if (!is_zero(p)) cand.insert(std::move(p));
                        }
                        std::size_t pos = 0;
                        while (pos < r) {
                            k[pos] += 1;
                            if (k[pos] < snf.D(pos, pos)) break;
                            k[pos] = 0;
                            ++pos;
                        }
                        if (pos == r) break;
                    }
                }
            }
            // next combination
            std::size_t i = r;
            while (i > 0) {
                --i;
                if (comb[i] != i + ext.size() - r) {
                    ++comb[i];
                    for (std::size_t t = i + 1; t < r; ++t) comb[t] = comb[t - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = r + 1;
                    break;
                }
            }
            if (i == r + 1 || r == 0) break;
        }
    }

    std::vector<Vec> sorted(cand.begin(), cand.end());
    std::sort(sorted.begin(), sorted.end(), [&](const Vec& a, const Vec& b) {
        Int da = ctx.degree_n(a), db = ctx.degree_n(b);
        if (da != db) return da < db;
        return lex_compare(a, b) < 0;
    });

    std::vector<Vec> hb_n;
    std::vector<Int> hb_deg;
    for (const auto& x : sorted) {
        Int dx = ctx.degree_n(x);
        bool decomposable = false;
        for (std::size_t t = 0; t < hb_n.size() && !decomposable; ++t) {
            if (hb_deg[t] >= dx) break;  // sorted by degree
            if (in_cone_normalized(ctx.cone, vec_sub(x, hb_n[t]))) decomposable = true;
        }
        if (!decomposable) {
            hb_n.push_back(x);
            hb_deg.push_back(dx);
        }
    }

    std::vector<HilbertElement> out;
    std::set<Vec> columns;
    for (std::size_t j = 0; j < ctx.A.cols; ++j) columns.insert(ctx.A.col(j));
    for (const auto& z : hb_n) {
        HilbertElement e;
        e.v = ctx.lat.lift_point(z);
        e.is_generator = columns.count(e.v) > 0;
        e.is_hole = !semigroup_member(ctx, e.v).member;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [&](const HilbertElement& a, const HilbertElement& b) {
        Int da = ctx.degree(a.v), db = ctx.degree(b.v);
        if (da != db) return da < db;
        return lex_compare(a.v, b.v) < 0;
    });
    return out;
}

}  // namespace semihole
