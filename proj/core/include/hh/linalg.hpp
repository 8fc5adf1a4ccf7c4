#pragma once

#include "hh/sparse_matrix.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hh {

struct Subspace {
    index_t ambient_dim = 0;
    std::vector<SparseVec> basis;

    index_t dim() const { return (index_t)basis.size(); }
};

// Incremental column-echelon form. Columns are fed one at a time; the
// accumulator keeps one stored column per pivot row, so memory scales with
// the rank, not with the number of columns seen. This is what makes exact
// ranks of very wide boundary matrices affordable.
class RankAccumulator {
  public:
    explicit RankAccumulator(index_t rows = 0) : rows_(rows) {}

    // Reduces col in place against stored pivots. Returns true if the column
    // was independent (rank grew).
    bool add_column(SparseVec col);

    // Reduces v against the pivots without storing it.
    void reduce(SparseVec& v) const;

    index_t rank() const { return rank_; }
    index_t rows() const { return rows_; }

  private:
    index_t rows_;
    index_t rank_ = 0;
    std::unordered_map<index_t, SparseVec> pivots_;  // pivot row -> column with that pivot = 1
};

index_t rank(const SparseRationalMatrix& m);

// Basis of { v : m v = 0 }; ambient dim = cols(m).
Subspace kernel_basis(const SparseRationalMatrix& m);

// Subspace spanned by the columns of m (reduced to an independent set).
Subspace column_space(const SparseRationalMatrix& m);

struct containment_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dim(inside) - dim(sub); throws containment_error if sub is not contained in
// the span of inside (a broken chain-complex invariant upstream).
index_t quotient_dim(const Subspace& sub, const Subspace& inside);

// Vectors of `cycles` projecting to a basis of cycles/boundaries.
std::vector<SparseVec> representatives(const Subspace& cycles, const Subspace& boundaries);

// Expresses vectors as linear combinations of a fixed generating set.
class LinearSolver {
  public:
    // Vector i gets coefficient index i; dependent generators are fine.
    void add(const SparseVec& v);
    // Writes coefficients (one per added vector) with target = sum c_i v_i;
    // false if target is not in the span.
    bool solve(const SparseVec& target, std::vector<Rational>& coeffs) const;
    size_t generators() const { return count_; }

  private:
    struct EchelonCol {
        SparseVec col;
        std::vector<std::pair<size_t, Rational>> combo;  // in terms of original vectors
    };
    std::unordered_map<index_t, EchelonCol> by_pivot_;
    size_t count_ = 0;
};

}  // namespace hh
