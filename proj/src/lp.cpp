#include "semihole/lp.hpp"

namespace semihole {

namespace {

struct Standardized {
    // Equality system: cols * xt = rhs, xt >= 0, rhs >= 0.
    std::vector<QVec> rows;  // m x ncols
    QVec rhs;                // m
    std::size_t ncols = 0;
    // Structural column -> (original var, sign) ; slack columns map to (row, slack).
    struct ColInfo {
        bool is_slack = false;
        std::size_t index = 0;  // var index or row index
        int factor = 1;         // contribution factor to the original variable
    };
    std::vector<ColInfo> colinfo;
    std::vector<int> row_sign;  // +1/-1 applied while normalizing rhs
};

Standardized standardize(const LinSystem& sys) {
    Standardized st;
    // Variable columns.
    std::vector<std::vector<std::pair<std::size_t, int>>> var_cols(sys.nvars);
    for (std::size_t j = 0; j < sys.nvars; ++j) {
        switch (sys.sign_of(j)) {
            case VarSign::NonNeg:
                var_cols[j] = {{st.ncols, 1}};
                st.colinfo.push_back({false, j, 1});
                st.ncols += 1;
                break;
            case VarSign::NonPos:
                var_cols[j] = {{st.ncols, -1}};
                st.colinfo.push_back({false, j, -1});
                st.ncols += 1;
                break;
            case VarSign::Free:
                var_cols[j] = {{st.ncols, 1}, {st.ncols + 1, -1}};
                st.colinfo.push_back({false, j, 1});
                st.colinfo.push_back({false, j, -1});
                st.ncols += 2;
                break;
        }
    }
    // One slack column per inequality row.
    std::size_t nslack = 0;
    for (const auto& r : sys.rows)
        if (r.rel != Rel::EQ) ++nslack;
    std::size_t slack_base = st.ncols;
    st.ncols += nslack;
    st.colinfo.resize(st.ncols);

    std::size_t next_slack = slack_base;
    for (std::size_t k = 0; k < sys.rows.size(); ++k) {
        const LinRow& r = sys.rows[k];
        QVec row(st.ncols);
        Rat b = r.b;
        int flip = (r.rel == Rel::GE) ? -1 : 1;  // GE becomes LE
        for (std::size_t j = 0; j < sys.nvars; ++j) {
            if (r.a[j] == 0) continue;
            for (auto [c, f] : var_cols[j]) row[c] += Rat(flip * f) * r.a[j];
        }
        if (flip < 0) b = -b;
        if (r.rel != Rel::EQ) {
            row[next_slack] = 1;
            st.colinfo[next_slack] = {true, k, 1};
            ++next_slack;
        }
        int s = 1;
        if (b < 0) {
            s = -1;
            b = -b;
            for (auto& v : row) v = -v;
        }
        st.row_sign.push_back(s);
        st.rows.push_back(std::move(row));
        st.rhs.push_back(std::move(b));
    }
    return st;
}

}  // namespace

LpResult lp_feasible(const LinSystem& sys) {
    Standardized st = standardize(sys);
    const std::size_t m = st.rows.size();
    const std::size_t n = st.ncols;
    const std::size_t total = n + m;  // structural + artificial

    // Dense tableau, artificial part starts as identity; basis = artificials.
    std::vector<QVec> T(m, QVec(total));
    QVec rhs = st.rhs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = st.rows[i][j];
        T[i][n + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs for minimizing the sum of artificials.
    QVec obj(total);
    Rat obj_value = 0;
    for (std::size_t j = 0; j < total; ++j) {
        Rat c = (j >= n) ? Rat(1) : Rat(0);
        for (std::size_t i = 0; i < m; ++i) c -= T[i][j];
        obj[j] = c;
    }
    for (std::size_t i = 0; i < m; ++i) obj_value += rhs[i];

    while (true) {
        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t e = total;
        for (std::size_t j = 0; j < total; ++j)
            if (obj[j] < 0) {
                e = j;
                break;
            }
        if (e == total) break;
        // Leaving row by minimum ratio; ties by smallest basis index.
        std::size_t lv = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][e] <= 0) continue;
            Rat ratio = rhs[i] / T[i][e];
            if (lv == m || ratio < best || (ratio == best && basis[i] < basis[lv])) {
                lv = i;
                best = ratio;
            }
        }
        if (lv == m) break;  // phase-1 objective is bounded below by 0, so this cannot happen
        // Pivot on (lv, e).
        Rat piv = T[lv][e];
        for (auto& v : T[lv]) v /= piv;
        rhs[lv] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == lv || T[i][e] == 0) continue;
            Rat f = T[i][e];
            for (std::size_t j = 0; j < total; ++j)
                if (T[lv][j] != 0) T[i][j] -= f * T[lv][j];
            rhs[i] -= f * rhs[lv];
        }
        if (obj[e] != 0) {
            Rat f = obj[e];
            for (std::size_t j = 0; j < total; ++j)
                if (T[lv][j] != 0) obj[j] -= f * T[lv][j];
            obj_value += f * rhs[lv];
        }
        basis[lv] = e;
    }

    LpResult res;
    if (obj_value > 0) {
        res.feasible = false;
        // Dual multipliers from artificial reduced costs: y_k = 1 - obj[n+k].
        res.certificate.assign(sys.rows.size(), Rat(0));
        for (std::size_t k = 0; k < m; ++k) {
            Rat y = Rat(1) - obj[n + k];
            Rat v = y * Rat(st.row_sign[k]);
            res.certificate[k] = (sys.rows[k].rel == Rel::GE) ? -v : v;
        }
        return res;
    }
    res.feasible = true;
    QVec xt(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) xt[basis[i]] = rhs[i];
    res.witness.assign(sys.nvars, Rat(0));
    for (std::size_t c = 0; c < n; ++c) {
        if (st.colinfo[c].is_slack) continue;
        res.witness[st.colinfo[c].index] += Rat(st.colinfo[c].factor) * xt[c];
    }
    return res;
}

bool check_witness(const LinSystem& sys, const QVec& x) {
    if (x.size() != sys.nvars) return false;
    for (std::size_t j = 0; j < sys.nvars; ++j) {
        if (sys.sign_of(j) == VarSign::NonNeg && x[j] < 0) return false;
        if (sys.sign_of(j) == VarSign::NonPos && x[j] > 0) return false;
    }
    for (const auto& r : sys.rows) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < sys.nvars; ++j) lhs += r.a[j] * x[j];
        if (r.rel == Rel::LE && lhs > r.b) return false;
        if (r.rel == Rel::EQ && lhs != r.b) return false;
        if (r.rel == Rel::GE && lhs < r.b) return false;
    }
    return true;
}

bool check_infeasibility_certificate(const LinSystem& sys, const QVec& u) {
    if (u.size() != sys.rows.size()) return false;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (sys.rows[k].rel == Rel::LE && u[k] > 0) return false;
        if (sys.rows[k].rel == Rel::GE && u[k] < 0) return false;
    }
    Rat ub = 0;
    for (std::size_t k = 0; k < u.size(); ++k) ub += u[k] * sys.rows[k].b;
    if (ub <= 0) return false;
    for (std::size_t j = 0; j < sys.nvars; ++j) {
        Rat cj = 0;
        for (std::size_t k = 0; k < u.size(); ++k) cj += u[k] * sys.rows[k].a[j];
        switch (sys.sign_of(j)) {
            case VarSign::NonNeg:
                if (cj > 0) return false;
                break;
            case VarSign::NonPos:
                if (cj < 0) return false;
                break;
            case VarSign::Free:
                if (cj != 0) return false;
                break;
        }
    }
    return true;
}

}  // namespace semihole
