#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

using gen_t = int32_t;

// Normal form of a simplex: a non-degenerate generator with a strictly
// increasing degeneracy word (Eilenberg-Zilber factorization). The simplex is
// s_{j_l} ... s_{j_1} (gen) with word = {j_1 < ... < j_l}.
struct SimplexRef {
    gen_t gen = -1;
    std::vector<int> word;

    bool operator==(const SimplexRef& o) const { return gen == o.gen && word == o.word; }
    bool operator<(const SimplexRef& o) const {
        return gen != o.gen ? gen < o.gen : word < o.word;
    }
};

class FiniteSimplicialSet {
  public:
    struct Generator {
        std::string name;
        int dim;
    };

    // faces[g] has dim(g)+1 entries (d_0..d_dim); empty for 0-generators.
    FiniteSimplicialSet(std::vector<Generator> generators,
                        std::vector<std::vector<SimplexRef>> faces,
                        std::optional<gen_t> basepoint = std::nullopt);

    int generator_count() const { return (int)gens_.size(); }
    const Generator& generator(gen_t g) const { return gens_[g]; }
    gen_t generator_by_name(const std::string& name) const;
    int max_dim() const { return max_dim_; }
    std::optional<gen_t> basepoint() const { return basepoint_; }

    int dim(const SimplexRef& s) const { return gens_[s.gen].dim + (int)s.word.size(); }
    std::string name(const SimplexRef& s) const;

    // d_i in normal form, by rewriting past the degeneracy word.
    SimplexRef face(const SimplexRef& s, int i) const;
    // s_j in normal form.
    static SimplexRef degenerate(const SimplexRef& s, int j);

    // All dimension-k simplices in canonical order (generator id, then word
    // lexicographically).
    std::vector<SimplexRef> level(int k) const;
    long level_count(int k) const;
    SimplexRef basepoint_at(int k) const;

    // Checks the simplicial identities on all simplices up to dimension
    // 2*max_dim; throws std::logic_error on violation.
    void validate() const;

    bool is_pointed() const { return basepoint_.has_value(); }

  private:
    std::vector<Generator> gens_;
    std::vector<std::vector<SimplexRef>> faces_;
    std::optional<gen_t> basepoint_;
    int max_dim_ = 0;
};

using SpacePtr = std::shared_ptr<const FiniteSimplicialSet>;

struct SimplicialMap {
    SpacePtr source;
    SpacePtr target;
    std::vector<SimplexRef> generator_images;  // one per source generator, equal dimension

    SimplexRef apply(const SimplexRef& s) const;
    // Checks face commutation on all generators (and basepoint preservation
    // when both sides are pointed); throws std::logic_error on violation.
    void validate() const;

    static SimplicialMap identity(SpacePtr x);
    static SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g after f
    static SimplicialMap collapse_to_point(SpacePtr x, SpacePtr pt);
    bool is_levelwise_injective(int up_to_dim) const;
};

struct PushoutResult {
    SpacePtr space;
    SimplicialMap from_x;
    SimplicialMap from_y;
};

// Levelwise pushout of X <-f- Z -g-> Y, computed by saturating the generator
// identifications through the degeneracy structure.
PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g);

// Levelwise product (X x Y)_k = X_k x Y_k; generators are the word-disjoint
// pairs of normal forms.
struct ProductResult {
    SpacePtr space;
    SimplicialMap proj_x;
    SimplicialMap proj_y;
};
ProductResult product(SpacePtr x, SpacePtr y);

struct DisjointUnionResult {
    SpacePtr space;
    SimplicialMap from_x;
    SimplicialMap from_y;
};
DisjointUnionResult disjoint_union(SpacePtr x, SpacePtr y);

// Full subcomplex on a face-closed set of generators, with its inclusion.
struct SubcomplexResult {
    SpacePtr space;
    SimplicialMap inclusion;
};
SubcomplexResult subcomplex(SpacePtr x, const std::vector<gen_t>& generators);

// Mediating map W -> T of a pushout from maps on the two legs that agree on Z.
SimplicialMap pushout_induced_map(const PushoutResult& po, const SimplicialMap& on_x,
                                  const SimplicialMap& on_y);

// point, interval, square, circle_minimal, circle_two_cell, cylinder,
// torus_glued, delta(n) as "delta2", boundary_delta(n), sphere(n).
SpacePtr standard_model(const std::string& name);

// The cylinder/torus gluing data, exposed for gluing tests.
struct GluedModel {
    PushoutResult po;
    SimplicialMap f;  // Z -> X
    SimplicialMap g;  // Z -> Y
};
GluedModel cylinder_gluing();     // I^2 u_{I u I} I
GluedModel torus_gluing();        // cylinder u_{I u I} I
GluedModel two_interval_gluing(); // I u_{pt u pt} I -> circle_two_cell shape

}  // namespace hh
