#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace semihole {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Dense integer matrix, row-major.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n);

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);
    void set_col(std::size_t j, const Vec& v);

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& A, const Mat& B);
Vec mat_vec(const Mat& A, const Vec& x);
Mat transpose(const Mat& A);

Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_neg(const Vec& x);
Vec vec_scale(const Int& k, const Vec& x);
Int dot(const Vec& x, const Vec& y);
bool is_zero(const Vec& x);

// -1, 0, +1 lexicographic order.
int lex_compare(const Vec& x, const Vec& y);

Int vec_gcd(const Vec& x);
// Divides by the gcd of the entries; zero vectors are left alone.
void make_primitive(Vec& x);

std::string format_vec(const Vec& x);

// Shared matrix text format: first line "d n", then d lines of n integers.
Mat parse_matrix_text(std::istream& in);
Mat parse_matrix_file(const std::string& path);
std::string render_matrix_text(const Mat& A);

}  // namespace semihole
