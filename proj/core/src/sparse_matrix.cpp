#include "hh/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace hh {

void SparseVec::normalize() {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t out = 0;
    for (size_t i = 0; i < entries.size();) {
        index_t row = entries[i].first;
        Rational sum = std::move(entries[i].second);
        size_t j = i + 1;
        while (j < entries.size() && entries[j].first == row) sum += entries[j++].second;
        if (!is_zero(sum)) entries[out++] = {row, std::move(sum)};
        i = j;
    }
    entries.resize(out);
}

void SparseVec::axpy(const Rational& c, const SparseVec& other) {
    if (is_zero(c) || other.empty()) return;
    std::vector<std::pair<index_t, Rational>> merged;
    merged.reserve(entries.size() + other.entries.size());
    size_t i = 0, j = 0;
    while (i < entries.size() || j < other.entries.size()) {
        if (j == other.entries.size() ||
            (i < entries.size() && entries[i].first < other.entries[j].first)) {
            merged.push_back(std::move(entries[i++]));
        } else if (i == entries.size() || other.entries[j].first < entries[i].first) {
            merged.emplace_back(other.entries[j].first, c * other.entries[j].second);
            ++j;
        } else {
            Rational v = entries[i].second + c * other.entries[j].second;
            if (!is_zero(v)) merged.emplace_back(entries[i].first, std::move(v));
            ++i, ++j;
        }
    }
    entries = std::move(merged);
}

void SparseVec::scale(const Rational& c) {
    if (is_zero(c)) {
        entries.clear();
        return;
    }
    for (auto& e : entries) e.second *= c;
}

SparseVec sparse_vec(std::vector<std::pair<index_t, Rational>> entries) {
    SparseVec v;
    v.entries = std::move(entries);
    v.normalize();
    return v;
}

SparseRationalMatrix SparseRationalMatrix::from_triplets(
    index_t rows, index_t cols, const std::vector<std::tuple<index_t, index_t, Rational>>& ts) {
    SparseRationalMatrix m(rows, cols);
    for (const auto& [r, c, v] : ts) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("triplet out of range");
        m.cols_[c].push(r, v);
    }
    for (auto& col : m.cols_) col.normalize();
    return m;
}

SparseRationalMatrix SparseRationalMatrix::identity(index_t n) {
    SparseRationalMatrix m(n, n);
    for (index_t i = 0; i < n; ++i) m.cols_[i].push(i, 1);
    return m;
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const std::vector<std::vector<long>>& d) {
    index_t rows = (index_t)d.size();
    index_t cols = rows ? (index_t)d[0].size() : 0;
    SparseRationalMatrix m(rows, cols);
    for (index_t r = 0; r < rows; ++r)
        for (index_t c = 0; c < cols; ++c)
            if (d[r][c] != 0) m.cols_[c].push(r, rat(d[r][c]));
    return m;
}

size_t SparseRationalMatrix::nnz() const {
    size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

bool SparseRationalMatrix::is_zero() const { return nnz() == 0; }

SparseRationalMatrix SparseRationalMatrix::transpose() const {
    SparseRationalMatrix t(cols(), rows_);
    for (index_t j = 0; j < cols(); ++j)
        for (const auto& [r, v] : cols_[j].entries) t.cols_[r].push(j, v);
    return t;
}

SparseRationalMatrix SparseRationalMatrix::multiply(const SparseRationalMatrix& rhs) const {
    if (cols() != rhs.rows()) throw std::invalid_argument("matrix shape mismatch");
    SparseRationalMatrix out(rows_, rhs.cols());
    for (index_t j = 0; j < rhs.cols(); ++j) {
        SparseVec acc;
        for (const auto& [k, v] : rhs.cols_[j].entries) acc.axpy(v, cols_[k]);
        out.cols_[j] = std::move(acc);
    }
    return out;
}

SparseRationalMatrix SparseRationalMatrix::add(const SparseRationalMatrix& rhs,
                                               const Rational& scale_rhs) const {
    if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw std::invalid_argument("matrix shape mismatch");
    SparseRationalMatrix out = *this;
    for (index_t j = 0; j < cols(); ++j) out.cols_[j].axpy(scale_rhs, rhs.cols_[j]);
    return out;
}

SparseVec SparseRationalMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, c] : v.entries) out.axpy(c, cols_[j]);
    return out;
}

bool SparseRationalMatrix::operator==(const SparseRationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
}

}  // namespace hh
