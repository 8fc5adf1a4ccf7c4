#pragma once

#include "hh/hochschild.hpp"
#include "hh/homology.hpp"
#include "hh/simplicial.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hh {

// A cover of a finite simplicial set by subcomplexes, each given as a
// face-closed, sorted set of generators, closed under pairwise intersection.
// Opens beyond original_count were added by the intersection closure.
struct CombinatorialCover {
    SpacePtr space;
    std::vector<std::string> names;
    std::vector<std::vector<gen_t>> opens;
    int original_count = 0;

    // Levelwise disjointness of two subcomplexes = no shared generator.
    bool disjoint(int i, int j) const;
};

// Validates face-closure of each open and the cover property, then saturates
// under pairwise intersection. Throws std::invalid_argument on bad input.
CombinatorialCover make_cover(SpacePtr space,
                              std::vector<std::pair<std::string, std::vector<gen_t>>> opens);

// The pairwise-disjoint nonempty families of original opens, each a sorted
// list of open indices, in canonical (size-free, lexicographic subset) order.
std::vector<std::vector<int>> disjoint_families(const CombinatorialCover& cover);

struct CechOptions {
    int n_min = -3;
    int cap = 5;  // maximum tuple length; >= 2
    bool normalized = false;
    int64_t max_block = 200'000'000;
};

// The Cech complex of the Hochschild prefactorization algebra over a cover:
// layer k > 0 holds, per tuple of k disjoint families, the Hochschild complex
// of the disjoint union of the (nonempty) intersections of one open chosen
// from each family; the tuple sits in total degrees n = m - (k - 1). The
// total differential is the alternating omission sum plus (-1)^(k-1) times
// the Hochschild differential. Layers beyond the cap only touch degrees
// below trusted_min().
class CechComplex {
  public:
    CechComplex(CombinatorialCover cover, AlgebraPtr algebra, CechOptions opt);

    const CombinatorialCover& cover() const { return cover_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    int n_min() const { return opt_.n_min; }
    int cap() const { return opt_.cap; }
    int trusted_min() const { return std::max(opt_.n_min, 2 - opt_.cap); }
    const std::vector<std::vector<int>>& pu() const { return pu_; }
    // Layers actually built: min(cap, 2 - n_min); deeper ones cannot meet the
    // window [n_min - 1, 0].
    int layer_count() const { return kmax_; }
    int64_t tuple_count(int k) const;  // |PU|^k

    const HochschildComplex& ambient() const { return *ambient_; }
    const HochschildComplex& summand(int k, int64_t t) const;
    // Components (choice tuples with nonempty intersection) of a summand.
    const std::vector<std::vector<int>>& summand_choices(int k, int64_t t) const;

    int64_t layer_dim(int k, int n) const;
    int64_t total_dim(int n) const;
    ComplexView view() const;  // valid on [n_min - 1, 0]
    std::map<int, int64_t> homology_dims() const;

    // The chain map to CH_X: inclusion-induced on layer 1, zero above.
    SparseRationalMatrix augmentation(int n) const;

  private:
    struct Summand {
        SpacePtr space;
        ComplexPtr ch;
        std::vector<std::vector<int>> choices;       // open index per slot
        std::map<std::vector<int>, int> comp_of;     // choice -> component
        std::vector<int> comp_gen0;                  // first local generator
        std::vector<std::vector<gen_t>> comp_gens;   // ambient generators
    };

    std::vector<int> digits(int k, int64_t t) const;
    int64_t index_of(const std::vector<int>& digits) const;
    const Summand& sum(int k, int64_t t) const { return layers_[k - 1][t]; }
    Summand build_summand(const std::vector<int>& tuple, int k) const;
    // Omission of slot j (1-based) into layer k - 1; identity on simplices.
    SimplicialMap omission(int k, int64_t t, int j) const;
    std::vector<int64_t> offsets(int n) const;  // per (k, t) block, plus total

    CombinatorialCover cover_;
    AlgebraPtr algebra_;
    CechOptions opt_;
    std::vector<std::vector<int>> pu_;
    int kmax_ = 0;
    std::vector<std::vector<Summand>> layers_;  // layers_[k - 1]
    std::shared_ptr<const HochschildComplex> ambient_;
};

// Per-degree quasi-isomorphism verdicts of the augmentation against CH_X(A)
// over the trusted window [trusted_min, 0].
std::map<int, bool> cech_compare(const CechComplex& c);

// The prefactorization structure map: pushes each chain forward along its
// inclusion and multiplies the results in CH_V. The inclusions must have
// pairwise disjoint images. chains[i] lives on *sources[i], the domain of
// inclusions[i]; all complexes share the target's algebra.
Chain structure_map(const std::vector<SimplicialMap>& inclusions,
                    const std::vector<const HochschildComplex*>& sources,
                    const HochschildComplex& target, const std::vector<Chain>& chains);

}  // namespace hh
