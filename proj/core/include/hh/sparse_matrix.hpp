#pragma once

#include "hh/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hh {

using index_t = int64_t;

// A sparse vector: entries sorted by row index, no explicit zeros.
struct SparseVec {
    std::vector<std::pair<index_t, Rational>> entries;

    bool empty() const { return entries.empty(); }
    size_t size() const { return entries.size(); }
    void clear() { entries.clear(); }
    void push(index_t row, Rational v) { entries.emplace_back(row, std::move(v)); }

    // Sorts by row and merges duplicates; drops zeros.
    void normalize();

    // Entry at a row (zero if absent). Linear scan; for tests and plumbing.
    Rational get(index_t row) const {
        for (const auto& [r, v] : entries)
            if (r == row) return v;
        return Rational(0);
    }

    // this += c * other
    void axpy(const Rational& c, const SparseVec& other);

    void scale(const Rational& c);

    bool operator==(const SparseVec& o) const { return entries == o.entries; }
};

SparseVec sparse_vec(std::vector<std::pair<index_t, Rational>> entries);

// Immutable sparse matrix over Q, column-major.
class SparseRationalMatrix {
  public:
    SparseRationalMatrix() : rows_(0) {}
    SparseRationalMatrix(index_t rows, index_t cols) : rows_(rows), cols_(cols) {}

    static SparseRationalMatrix from_triplets(index_t rows, index_t cols,
                                              const std::vector<std::tuple<index_t, index_t, Rational>>& ts);
    static SparseRationalMatrix identity(index_t n);
    static SparseRationalMatrix from_dense(const std::vector<std::vector<long>>& d);

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_.size(); }
    const SparseVec& column(index_t j) const { return cols_[j]; }
    // Only valid before the matrix is shared; used by builders.
    void set_column(index_t j, SparseVec v) { cols_[j] = std::move(v); }

    size_t nnz() const;
    bool is_zero() const;
    SparseRationalMatrix transpose() const;
    SparseRationalMatrix multiply(const SparseRationalMatrix& rhs) const;
    SparseRationalMatrix add(const SparseRationalMatrix& rhs, const Rational& scale_rhs = 1) const;
    SparseVec apply(const SparseVec& v) const;
    bool operator==(const SparseRationalMatrix& o) const;

  private:
    index_t rows_;
    std::vector<SparseVec> cols_;
};

}  // namespace hh
