#include "semihole/normal_form.hpp"

namespace semihole {

namespace {

// Column operations tracked in U so that M*U stays invariant.
void col_swap(Mat& H, Mat& U, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < H.rows; ++i) std::swap(H(i, a), H(i, b));
    for (std::size_t i = 0; i < U.rows; ++i) std::swap(U(i, a), U(i, b));
}

void col_negate(Mat& H, Mat& U, std::size_t a) {
    for (std::size_t i = 0; i < H.rows; ++i) H(i, a) = -H(i, a);
    for (std::size_t i = 0; i < U.rows; ++i) U(i, a) = -U(i, a);
}

// col a -= q * col b
void col_axpy(Mat& H, Mat& U, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < H.rows; ++i) H(i, a) -= q * H(i, b);
    for (std::size_t i = 0; i < U.rows; ++i) U(i, a) -= q * U(i, b);
}

void row_swap(Mat& D, Mat& U, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols; ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < U.cols; ++j) std::swap(U(a, j), U(b, j));
}

void row_negate(Mat& D, Mat& U, std::size_t a) {
    for (std::size_t j = 0; j < D.cols; ++j) D(a, j) = -D(a, j);
    for (std::size_t j = 0; j < U.cols; ++j) U(a, j) = -U(a, j);
}

// row a -= q * row b
void row_axpy(Mat& D, Mat& U, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < D.cols; ++j) D(a, j) -= q * D(b, j);
    for (std::size_t j = 0; j < U.cols; ++j) U(a, j) -= q * U(b, j);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

HnfResult hermite_normal_form(const Mat& M) {
    HnfResult r;
    r.H = M;
    r.U = Mat::identity(M.cols);
    Mat& H = r.H;
    Mat& U = r.U;

    std::size_t pivot_col = 0;
    for (std::size_t row = 0; row < M.rows && pivot_col < M.cols; ++row) {
        // Euclidean elimination across columns pivot_col..end on this row.
        while (true) {
            std::size_t nz = M.cols;
            for (std::size_t j = pivot_col; j < M.cols; ++j)
                if (H(row, j) != 0) {
                    if (nz == M.cols || abs(H(row, j)) < abs(H(row, nz))) nz = j;
                }
            if (nz == M.cols) break;  // row is all zero right of previous pivots
            col_swap(H, U, pivot_col, nz);
            if (H(row, pivot_col) < 0) col_negate(H, U, pivot_col);
            bool cleared = true;
            for (std::size_t j = pivot_col + 1; j < M.cols; ++j) {
                if (H(row, j) == 0) continue;
                Int q = floor_div(H(row, j), H(row, pivot_col));
                col_axpy(H, U, j, pivot_col, q);
                if (H(row, j) != 0) cleared = false;
            }
            if (cleared) {
                // Reduce the earlier pivot columns against this pivot.
                for (std::size_t j = 0; j < pivot_col; ++j) {
                    Int q = floor_div(H(row, j), H(row, pivot_col));
                    col_axpy(H, U, j, pivot_col, q);
                }
                r.pivot_rows.push_back(row);
                ++pivot_col;
                break;
            }
        }
    }
    r.rank = pivot_col;
    return r;
}

SnfResult smith_normal_form(const Mat& M) {
    SnfResult r;
    r.D = M;
    r.U = Mat::identity(M.rows);
    r.V = Mat::identity(M.cols);
    Mat& D = r.D;
    Mat& U = r.U;
    Mat& V = r.V;

    std::size_t t = 0;
    const std::size_t lim = std::min(M.rows, M.cols);
    while (t < lim) {
        // Find the entry of smallest absolute value in the trailing block.
        std::size_t pi = M.rows, pj = M.cols;
        for (std::size_t i = t; i < M.rows; ++i)
            for (std::size_t j = t; j < M.cols; ++j)
                if (D(i, j) != 0 && (pi == M.rows || abs(D(i, j)) < abs(D(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == M.rows) break;  // trailing block is zero
        row_swap(D, U, t, pi);
        col_swap(D, V, t, pj);
        if (D(t, t) < 0) row_negate(D, U, t);

        bool dirty = false;
        for (std::size_t i = t + 1; i < M.rows; ++i) {
            if (D(i, t) == 0) continue;
            Int q = floor_div(D(i, t), D(t, t));
            row_axpy(D, U, i, t, q);
            if (D(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < M.cols; ++j) {
            if (D(t, j) == 0) continue;
            Int q = floor_div(D(t, j), D(t, t));
            col_axpy(D, V, j, t, q);
            if (D(t, j) != 0) dirty = true;
        }
        if (dirty) continue;

        // Pivot must divide every remaining entry; fold a violator into row t.
        bool divides = true;
        for (std::size_t i = t + 1; i < M.rows && divides; ++i)
            for (std::size_t j = t + 1; j < M.cols; ++j)
                if (D(i, j) % D(t, t) != 0) {
                    row_axpy(D, U, t, i, Int(-1));
                    divides = false;
                    break;
                }
        if (divides) ++t;
    }
    r.rank = t;
    return r;
}

Mat unimodular_inverse(const Mat& U) {
    const std::size_t n = U.rows;
    std::vector<QVec> a(n, QVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(U(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        std::swap(a[col], a[piv]);
        Rat p = a[col][col];
        for (auto& v : a[col]) v /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j].get_num();
    return inv;
}

Mat integer_kernel(const Mat& M) {
    HnfResult h = hermite_normal_form(M);
    // Columns of U beyond the rank map to zero columns of H.
    Mat K(M.cols, M.cols - h.rank);
    for (std::size_t j = h.rank; j < M.cols; ++j)
        for (std::size_t i = 0; i < M.cols; ++i) K(i, j - h.rank) = h.U(i, j);
    return K;
}

}  // namespace semihole
