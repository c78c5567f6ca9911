#include "semihole/ints.hpp"

#include "semihole/errors.hpp"

#include <fstream>
#include <sstream>

namespace semihole {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
    for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = v[j];
}

void Mat::set_col(std::size_t j, const Vec& v) {
    for (std::size_t i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

Mat mat_mul(const Mat& A, const Mat& B) {
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Int& aik = A(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

Vec mat_vec(const Mat& A, const Vec& x) {
    Vec y(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
    return y;
}

Mat transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

Vec vec_add(const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

Vec vec_sub(const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

Vec vec_neg(const Vec& x) {
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
    return z;
}

Vec vec_scale(const Int& k, const Vec& x) {
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = k * x[i];
    return z;
}

Int dot(const Vec& x, const Vec& y) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

bool is_zero(const Vec& x) {
    for (const auto& v : x)
        if (v != 0) return false;
    return true;
}

int lex_compare(const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

Int vec_gcd(const Vec& x) {
    Int g = 0;
    for (const auto& v : x) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(Vec& x) {
    Int g = vec_gcd(x);
    if (g <= 1) return;
    for (auto& v : x) v /= g;
}

std::string format_vec(const Vec& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << " ";
        os << x[i];
    }
    os << ")";
    return os.str();
}

Mat parse_matrix_text(std::istream& in) {
    std::size_t d = 0, n = 0;
    if (!(in >> d >> n) || d == 0 || n == 0) throw UsageError("matrix header must be \"d n\" with d, n >= 1");
    Mat A(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw UsageError("matrix body is shorter than the d*n entries announced by the header");
            try {
                A(i, j) = Int(tok);
            } catch (const std::invalid_argument&) {
                throw UsageError("matrix entry is not an integer: " + tok);
            }
        }
    return A;
}

Mat parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open matrix file: " + path);
    return parse_matrix_text(in);
}

std::string render_matrix_text(const Mat& A) {
    std::ostringstream os;
    os << A.rows << " " << A.cols << "\n";
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (j) os << " ";
            os << A(i, j);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace semihole
