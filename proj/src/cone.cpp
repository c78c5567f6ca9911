#include "semihole/cone.hpp"

#include "semihole/errors.hpp"
#include "semihole/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace semihole {

namespace {

Vec rational_to_primitive_int(const QVec& q) {
    Int l = 1;
    for (const auto& v : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    Vec out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        Rat s = q[i] * l;
        out[i] = s.get_num();
    }
    make_primitive(out);
    return out;
}

// Indices of a maximal set of linearly independent columns, scanned left to right.
std::vector<std::size_t> independent_columns(const Mat& M) {
    std::vector<QVec> rowsp;  // reduced spanning rows of the chosen columns (as vectors)
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < M.cols; ++j) {
        QVec v(M.rows);
        for (std::size_t i = 0; i < M.rows; ++i) v[i] = Rat(M(i, j));
        for (const auto& w : rowsp) {
            std::size_t p = 0;
            while (p < w.size() && w[p] == 0) ++p;
            if (p < w.size() && v[p] != 0) {
                Rat f = v[p] / w[p];
                for (std::size_t t = 0; t < v.size(); ++t) v[t] -= f * w[t];
            }
        }
        bool nz = false;
        for (const auto& t : v)
            if (t != 0) {
                nz = true;
                break;
            }
        if (nz) {
            std::size_t p = 0;
            while (v[p] == 0) ++p;
            Rat lead = v[p];
            for (auto& t : v) t /= lead;
            // Keep the basis fully reduced so one pass suffices per column.
            for (auto& w : rowsp) {
                if (w[p] == 0) continue;
                Rat f = w[p];
                for (std::size_t t = 0; t < w.size(); ++t) w[t] -= f * v[t];
            }
            rowsp.push_back(v);
            idx.push_back(j);
        }
    }
    return idx;
}

// Rational inverse of a nonsingular square matrix.
std::vector<QVec> rational_inverse(const std::vector<QVec>& S) {
    const std::size_t n = S.size();
    std::vector<QVec> a(n, QVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = S[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        assert(piv < n);
        std::swap(a[col], a[piv]);
        Rat p = a[col][col];
        for (auto& v : a[col]) v /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<QVec> inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

using Bits = std::vector<std::uint64_t>;

void bit_set(Bits& b, std::size_t i) { b[i / 64] |= (std::uint64_t(1) << (i % 64)); }

Bits bit_and(const Bits& x, const Bits& y) {
    Bits z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] & y[i];
    return z;
}

bool bit_subset(const Bits& x, const Bits& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] & ~y[i]) return false;
    return true;
}

}  // namespace

Vec pointedness_certificate(const Mat& A) {
    LinSystem sys;
    sys.nvars = A.rows;
    sys.signs.assign(A.rows, VarSign::Free);
    for (std::size_t j = 0; j < A.cols; ++j) {
        QVec row(A.rows);
        for (std::size_t i = 0; i < A.rows; ++i) row[i] = Rat(A(i, j));
        sys.add_row(std::move(row), Rel::GE, Rat(1));
    }
    LpResult res = lp_feasible(sys);
    if (!res.feasible) throw NotPointedError();
    Vec c = rational_to_primitive_int(res.witness);
    for (std::size_t j = 0; j < A.cols; ++j) assert(dot(c, A.col(j)) >= 1);
    return c;
}

std::vector<std::size_t> extreme_ray_columns(const Mat& A, const Vec& grading) {
    // Group columns sharing a primitive direction; keep the smallest one.
    std::map<Vec, std::size_t> rep;  // primitive direction -> representative column
    for (std::size_t j = 0; j < A.cols; ++j) {
        Vec p = A.col(j);
        make_primitive(p);
        auto it = rep.find(p);
        if (it == rep.end()) {
            rep.emplace(std::move(p), j);
            continue;
        }
        Int dj = dot(grading, A.col(j));
        Int dr = dot(grading, A.col(it->second));
        if (dj < dr) it->second = j;
    }
    std::vector<std::size_t> reps;
    for (const auto& [p, j] : rep) reps.push_back(j);
    std::sort(reps.begin(), reps.end());

    std::vector<std::size_t> out;
    for (std::size_t j : reps) {
        LinSystem sys;
        sys.nvars = reps.size() - 1;
        std::vector<std::size_t> others;
        for (std::size_t k : reps)
            if (k != j) others.push_back(k);
        for (std::size_t i = 0; i < A.rows; ++i) {
            QVec row(others.size());
            for (std::size_t t = 0; t < others.size(); ++t) row[t] = Rat(A(i, others[t]));
            sys.add_row(std::move(row), Rel::EQ, Rat(A(i, j)));
        }
        if (!lp_feasible(sys).feasible) out.push_back(j);
    }
    return out;
}

std::vector<Vec> dual_cone_rays(const Mat& M) {
    const std::size_t r = M.rows;
    const std::size_t n = M.cols;
    std::vector<std::size_t> init = independent_columns(M);
    assert(init.size() == r);

    std::vector<QVec> S(r, QVec(r));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < r; ++i) S[k][i] = Rat(M(i, init[k]));
    std::vector<QVec> Sinv = rational_inverse(S);

    std::vector<Vec> rays;
    for (std::size_t j = 0; j < r; ++j) {
        QVec col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = Sinv[i][j];
        rays.push_back(rational_to_primitive_int(col));
    }

    std::vector<char> processed(n, 0);
    for (std::size_t k : init) processed[k] = 1;
    const std::size_t words = (n + 63) / 64;
    auto tight_of = [&](const Vec& v) {
        Bits b(words, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (processed[i] && dot(M.col(i), v) == 0) bit_set(b, i);
        return b;
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (processed[i]) continue;
        Vec a = M.col(i);
        std::vector<Int> val(rays.size());
        for (std::size_t t = 0; t < rays.size(); ++t) val[t] = dot(a, rays[t]);
        bool has_neg = false;
        for (const auto& v : val)
            if (v < 0) has_neg = true;
        if (!has_neg) {
            processed[i] = 1;
            continue;
        }
        std::vector<Bits> tight(rays.size());
        for (std::size_t t = 0; t < rays.size(); ++t) tight[t] = tight_of(rays[t]);

        std::vector<Vec> next;
        for (std::size_t t = 0; t < rays.size(); ++t)
            if (val[t] >= 0) next.push_back(rays[t]);
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                Bits common = bit_and(tight[p], tight[q]);
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size(); ++t) {
                    if (t == p || t == q) continue;
                    if (bit_subset(common, tight[t])) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Vec w = vec_sub(vec_scale(val[p], rays[q]), vec_scale(val[q], rays[p]));
                make_primitive(w);
                next.push_back(std::move(w));
            }
        }
        std::sort(next.begin(), next.end(), [](const Vec& x, const Vec& y) { return lex_compare(x, y) < 0; });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
        processed[i] = 1;
    }
    std::sort(rays.begin(), rays.end(), [](const Vec& x, const Vec& y) { return lex_compare(x, y) < 0; });
    return rays;
}

ConeProfile cone_profile(const Mat& A, const LatticeNormalization& lat) {
    ConeProfile cp;
    cp.grading = pointedness_certificate(A);
    cp.extreme = extreme_ray_columns(A, cp.grading);

    std::vector<Vec> rays = dual_cone_rays(lat.reduced);
    cp.ineq_normalized = Mat(rays.size(), lat.r);
    for (std::size_t i = 0; i < rays.size(); ++i) cp.ineq_normalized.set_row(i, rays[i]);

    // Map each facet back to original coordinates: y . (Ux)_top / divisors >= 0.
    cp.ineq = Mat(rays.size(), lat.d);
    for (std::size_t t = 0; t < rays.size(); ++t) {
        QVec w(lat.d);
        for (std::size_t j = 0; j < lat.d; ++j)
            for (std::size_t i = 0; i < lat.r; ++i) w[j] += Rat(rays[t][i]) * Rat(lat.full_U(i, j)) / Rat(lat.divisors[i]);
        cp.ineq.set_row(t, rational_to_primitive_int(w));
    }
    return cp;
}

bool cone_membership(const Mat& A, const Vec& x) {
    LinSystem sys;
    sys.nvars = A.cols;
    for (std::size_t i = 0; i < A.rows; ++i) {
        QVec row(A.cols);
        for (std::size_t j = 0; j < A.cols; ++j) row[j] = Rat(A(i, j));
        sys.add_row(std::move(row), Rel::EQ, Rat(x[i]));
    }
    return lp_feasible(sys).feasible;
}

bool qsat_membership(const Mat& A, const LatticeNormalization& lat, const Vec& x) {
    return lat.in_lattice(x) && cone_membership(A, x);
}

bool in_cone_normalized(const ConeProfile& cp, const Vec& z) {
    for (std::size_t i = 0; i < cp.ineq_normalized.rows; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cp.ineq_normalized.cols; ++j) s += cp.ineq_normalized(i, j) * z[j];
        if (s < 0) return false;
    }
    return true;
}

}  // namespace semihole
