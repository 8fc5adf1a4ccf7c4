#pragma once

#include "hh/cdga.hpp"
#include "hh/simplicial.hpp"
#include "hh/sparse_matrix.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hh {

// Thrown when a basis enumeration exceeds the configured budget.
struct basis_budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Monomial = std::vector<int32_t>;  // one algebra/module basis gid per position

struct BlockKey {
    int k;  // simplicial level
    int d;  // internal degree, <= 0
    bool operator<(const BlockKey& o) const { return std::tie(k, d) < std::tie(o.k, o.d); }
    bool operator==(const BlockKey& o) const { return k == o.k && d == o.d; }
};

// The Hochschild complex of a graded algebra over a finite simplicial set,
// with total cohomological degrees n = d - k in [n_min - 1, 0]. Level-k
// spaces are A tensored over the positions level(X,k); a pointed space with a
// module puts the module at the basepoint position. Blocks up to
// materialize_cap monomials are stored; larger blocks are enumerated on the
// fly (their monomials can be streamed but not indexed).
class HochschildComplex {
  public:
    struct Options {
        int n_min = -4;
        bool normalized = false;
        ModulePtr module;                       // requires a pointed space
        int64_t max_block = 200'000'000;        // hard budget per block
        int64_t materialize_cap = 4'000'000;    // store monomials up to this
    };

    HochschildComplex(SpacePtr space, AlgebraPtr algebra, Options opt);

    const SpacePtr& space() const { return space_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    const ModulePtr& module() const { return opt_.module; }
    int n_min() const { return opt_.n_min; }
    bool normalized() const { return opt_.normalized; }
    int max_level() const { return kmax_; }
    int positions(int k) const { return (int)levels_[k].size(); }
    int basepoint_slot(int k) const { return bp_slot_[k]; }  // -1 if no module
    const std::vector<SimplexRef>& level_refs(int k) const { return levels_[k]; }
    int position_index(int k, const SimplexRef& s) const { return pos_index_[k].at(s); }

    // Global algebra basis ids: (degree, index) pairs in canonical order.
    int gid_count() const { return (int)gid_.size(); }
    int gid_degree(int g) const { return gid_[g].first; }
    int gid_index(int g) const { return gid_[g].second; }
    int unit_gid() const { return unit_gid_; }
    int gid_of(int degree, int index) const;
    // Module gids live in their own table (used only at the basepoint slot).
    int mod_gid_of(int degree, int index) const;
    int mod_gid_degree(int g) const { return mgid_[g].first; }
    int mod_gid_index(int g) const { return mgid_[g].second; }

    int64_t block_dim(int k, int d) const;  // counts even for huge blocks
    int64_t total_dim(int n) const;
    bool block_materialized(int k, int d) const;
    const std::vector<Monomial>& block_basis(int k, int d) const;
    // Row of a monomial within its block; -1 if dropped by normalization.
    int64_t row_of(int k, int d, const Monomial& m) const;
    // Enumerate a block without storing it (canonical order).
    void for_each_monomial(int k, int d,
                           const std::function<void(const Monomial&)>& fn) const;
    std::string monomial_name(int k, int d, const Monomial& m) const;
    int monomial_degree(int k, const Monomial& m) const;

    struct Term {
        BlockKey block;
        int64_t row;
        Rational coeff;
    };
    // D applied to one monomial: (-1)^k internal + sum_i (-1)^i (d_i)_*.
    std::vector<Term> diff_of(int k, int d, const Monomial& m) const;

    // Unsigned building blocks, materialized; for the invariant tests.
    SparseRationalMatrix face_matrix(int k, int d, int i) const;    // -> (k-1, d)
    SparseRationalMatrix internal_matrix(int k, int d) const;       // -> (k, d+1), epsilon signs

    // Total differential D^n: CH^n -> CH^{n+1} with blocks ordered by k.
    SparseRationalMatrix total_differential(int n) const;
    // Offset of block (k, n+k) among the rows of total degree n.
    int64_t block_offset(int k, int n) const;
    // Streams the columns of D^n (rows indexed in total degree n+1).
    void for_each_column(int n, const std::function<void(const SparseVec&)>& fn) const;

    // Pushforward of a monomial along a position map into a block of `target`
    // (faces, induced maps and degeneracies all reduce to this). pos_map maps
    // source positions to target position indices; extra unmapped target
    // positions receive the unit. Returns (target monomial, coeff) pairs
    // before normalization-dropping.
    std::vector<std::pair<Monomial, Rational>> push_monomial(
        const Monomial& m, int k, const HochschildComplex& target, int tk,
        const std::vector<int>& pos_map) const;

  private:
    struct Block {
        int64_t count = -1;
        bool stored = false;
        std::vector<Monomial> monos;  // sorted lexicographically
    };

    void build_level_tables();
    Block& block(int k, int d) const;
    void enumerate(int k, int d, const std::function<void(const Monomial&)>& fn,
                   int64_t* counter) const;
    bool degenerate_monomial(int k, const Monomial& m) const;

    SpacePtr space_;
    AlgebraPtr algebra_;
    Options opt_;
    int kmax_ = 0;

    std::vector<std::vector<SimplexRef>> levels_;          // levels_[k]
    std::vector<std::map<SimplexRef, int>> pos_index_;     // per level
    std::vector<int> bp_slot_;                             // per level, -1 if none
    std::vector<std::vector<std::vector<int>>> face_pos_;  // [k][i][pos] -> pos at k-1
    std::vector<std::vector<std::vector<char>>> s_image_;  // [k][j][pos] in im(s_j)

    // gid tables are ordered by degree descending from 0, index ascending,
    // and extend lazily to deeper degrees (which keeps the order stable).
    void extend_gids(int down_to) const;
    mutable std::vector<std::pair<int, int>> gid_;   // algebra (degree, index)
    mutable std::map<std::pair<int, int>, int> gid_rev_;
    mutable std::vector<int> gid_start_;             // first gid of degree -s
    mutable int gid_floor_ = 1;                      // deepest degree in table
    int unit_gid_ = 0;
    mutable std::vector<std::pair<int, int>> mgid_;  // module (degree, index)
    mutable std::map<std::pair<int, int>, int> mgid_rev_;
    mutable std::vector<int> mgid_start_;
    mutable int mgid_floor_ = 1;

    mutable std::map<BlockKey, Block> blocks_;
};

using ComplexPtr = std::shared_ptr<const HochschildComplex>;

// Position-wise product of two monomial tensors at level k: lhs factors act
// from the left (module action at the basepoint slot when rhs_cx is pointed
// with coefficients). Result is indexed in rhs_cx.
std::vector<std::pair<Monomial, Rational>> pointwise_multiply(const HochschildComplex& lhs_cx,
                                                              int k, const Monomial& lhs,
                                                              const HochschildComplex& rhs_cx,
                                                              const Monomial& rhs);

// koszul_sign(degrees, perm): sign of permuting graded factors, where perm[i]
// is the new slot of factor i; the permutation sign is not included.
int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& perm);

// Sparse chain, split into (k, d) blocks.
struct Chain {
    const HochschildComplex* complex = nullptr;
    std::map<BlockKey, SparseVec> parts;

    void add(const BlockKey& b, int64_t row, const Rational& c);
    void normalize();
    bool is_zero() const;
    bool operator==(const Chain& o) const;
};

Chain apply_differential(const Chain& u);
Chain scale(Chain u, const Rational& c);
Chain add(Chain u, const Chain& v);

// Shuffle product; both chains on the same complex, no module coefficients.
Chain shuffle_product(const Chain& u, const Chain& v);
Chain unit_chain(const HochschildComplex& c);

// Chain map induced by a simplicial map (same algebra/module, compatible
// windows), as a matrix per total degree n, or applied to a chain.
SparseRationalMatrix induced_map_matrix(const SimplicialMap& f, const HochschildComplex& src,
                                        const HochschildComplex& tgt, int n);
Chain induced_map_apply(const SimplicialMap& f, const HochschildComplex& src,
                        const HochschildComplex& tgt, const Chain& u);

struct PushoutComparison {
    std::vector<int64_t> domain_dims;   // per level k: dim of the coequalizer
    std::vector<int64_t> target_dims;   // per level k: dim of CH_W at level k
    std::vector<int64_t> image_ranks;   // per level k: rank of the induced map
    bool iso = false;                   // levelwise isomorphism
    bool injectivity_hypothesis = false;
};

// The strict pushout comparison (CH_X tensor_{CH_Z} CH_Y) -> CH_W, computed
// levelwise per internal degree in [d_min, 0] and level k <= k_max.
PushoutComparison pushout_comparison(const SimplicialMap& f, const SimplicialMap& g,
                                     const PushoutResult& po, AlgebraPtr algebra, int d_min,
                                     int k_max);

}  // namespace hh
