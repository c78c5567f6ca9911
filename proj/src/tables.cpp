#include "semihole/tables.hpp"

#include "semihole/errors.hpp"

#include <algorithm>

namespace semihole {

MarginalModel parse_model(const std::string& sizes, const std::string& margins) {
    MarginalModel m;
    std::size_t cur = 0;
    bool have = false;
    for (char c : sizes + "x") {
        if (c == 'x' || c == 'X') {
            if (!have || cur == 0) throw UsageError("table sizes must look like 2x2x2");
            m.sizes.push_back(cur);
            cur = 0;
            have = false;
        } else if (c >= '0' && c <= '9') {
            cur = cur * 10 + std::size_t(c - '0');
            have = true;
        } else {
            throw UsageError(std::string("unexpected character in table sizes: ") + c);
        }
    }
    std::vector<std::size_t> subset;
    for (char c : margins + ",") {
        if (c == ',') {
            if (subset.empty()) throw UsageError("empty margin subset");
            std::sort(subset.begin(), subset.end());
            if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
                throw UsageError("margin subset repeats an axis");
            m.margins.push_back(subset);
            subset.clear();
        } else if (c >= '1' && c <= '9') {
            std::size_t axis = std::size_t(c - '0');
            if (axis > m.sizes.size()) throw UsageError("margin axis exceeds the table dimension");
            subset.push_back(axis);
        } else {
            throw UsageError(std::string("unexpected character in margins: ") + c);
        }
    }
    if (m.margins.empty()) throw UsageError("at least one margin subset is required");
    return m;
}

Mat marginal_matrix(const MarginalModel& model) {
    const std::size_t s = model.sizes.size();
    std::size_t ncells = 1;
    for (std::size_t sz : model.sizes) ncells *= sz;
    std::size_t nrows = 0;
    for (const auto& T : model.margins) {
        std::size_t block = 1;
        for (std::size_t axis : T) block *= model.sizes[axis - 1];
        nrows += block;
    }
    Mat A(nrows, ncells);

    // Cell index: mixed radix with the first table index fastest.
    std::vector<std::size_t> idx(s, 0);
    for (std::size_t col = 0; col < ncells; ++col) {
        std::size_t row0 = 0;
        for (const auto& T : model.margins) {
            std::size_t mcell = 0, radix = 1;
            for (std::size_t axis : T) {
                mcell += idx[axis - 1] * radix;
                radix *= model.sizes[axis - 1];
            }
            A(row0 + mcell, col) = 1;
            row0 += radix;
        }
        std::size_t pos = 0;
        while (pos < s) {
            if (++idx[pos] < model.sizes[pos]) break;
            idx[pos] = 0;
            ++pos;
        }
    }
    return A;
}

Mat remove_redundant_rows(const Mat& A) {
    std::vector<QVec> basis;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < A.rows; ++i) {
        QVec v(A.cols);
        for (std::size_t j = 0; j < A.cols; ++j) v[j] = Rat(A(i, j));
        for (const auto& w : basis) {
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
        if (!nz) continue;
        std::size_t p = 0;
        while (v[p] == 0) ++p;
        Rat lead = v[p];
        for (auto& t : v) t /= lead;
        // Keep the basis fully reduced so one pass suffices for later rows.
        for (auto& w : basis) {
            if (w[p] == 0) continue;
            Rat f = w[p];
            for (std::size_t t = 0; t < w.size(); ++t) w[t] -= f * v[t];
        }
        basis.push_back(std::move(v));
        keep.push_back(i);
    }
    Mat R(keep.size(), A.cols);
    for (std::size_t i = 0; i < keep.size(); ++i) R.set_row(i, A.row(keep[i]));
    return R;
}

Mat embed_block(const Mat& A1, const Mat& A2) {
    Mat B(A1.rows + A2.rows, A1.cols + A2.cols);
    for (std::size_t i = 0; i < A1.rows; ++i)
        for (std::size_t j = 0; j < A1.cols; ++j) B(i, j) = A1(i, j);
    for (std::size_t i = 0; i < A2.rows; ++i)
        for (std::size_t j = 0; j < A2.cols; ++j) B(A1.rows + i, A1.cols + j) = A2(i, j);
    return B;
}

}  // namespace semihole
