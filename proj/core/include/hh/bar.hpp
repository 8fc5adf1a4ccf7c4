#pragma once

#include "hh/homology.hpp"

namespace hh {

// Degree-major basis table (degree descending from 0) for one tensor slot.
struct BasisTable {
    std::vector<std::pair<int, int>> elems;  // (degree, index within degree)
    std::vector<int> start;                  // start[-d] = first entry of degree d
    int floor = 1;

    void extend(const std::function<int(int)>& dim, int down_to);
    int gid(int degree, int index) const { return start[-degree] + index; }
};

// Two-sided bar complex B(P, R, Q) with layers P (x) R^{(x)l} (x) Q for
// l <= cap. An element with internal degree d in layer l sits in total
// degree n = d - l, so degree n only receives layers l <= -n and the
// truncation is exact for n >= 1 - cap.
struct BarOptions {
    int n_min = -4;
    int cap = 8;
};

class BarComplex {
  public:
    BarComplex(ModulePtr p, AlgebraPtr r, ModulePtr q, BarOptions o = {});

    int n_min() const { return opt_.n_min; }
    int cap() const { return opt_.cap; }
    int trusted_min() const { return std::max(opt_.n_min, 1 - opt_.cap); }

    int64_t layer_dim(int l, int d) const;
    int64_t total_dim(int n) const;

    // Streamed columns of D^n, valid for n in [n_min - 1, 0].
    ComplexView view() const;
    std::map<int, int64_t> homology_dims() const;

  private:
    using Tuple = std::vector<int32_t>;

    const std::vector<Tuple>& block(int l, int d) const;
    void diff_of(int l, int d, const Tuple& t,
                 const std::function<void(int, int, const Tuple&, const Rational&)>& out) const;
    int64_t row_of(int l, int d, const Tuple& t) const;

    ModulePtr p_, q_;
    AlgebraPtr r_;
    BarOptions opt_;
    mutable BasisTable ps_, rs_, qs_;
    mutable std::map<std::pair<int, int>, std::vector<Tuple>> blocks_;
};

// The textbook Hochschild complex M (x) A^{(x)k}, written in the slot order
// (m, a_k, ..., a_1), with faces merging adjacent written factors, the last
// written factor cycling onto m with the Koszul crossing sign, and internal
// differential twisted by (-1)^k. Built from direct index arithmetic only.
class ClassicalHochschild {
  public:
    ClassicalHochschild(AlgebraPtr a, ModulePtr m, int n_min);

    int n_min() const { return n_min_; }
    int max_level() const { return kmax_; }
    int64_t level_dim(int k, int d) const;
    int64_t total_dim(int n) const;
    ComplexView view() const;

  private:
    using Tuple = std::vector<int32_t>;

    const std::vector<Tuple>& block(int k, int d) const;
    void diff_of(int k, int d, const Tuple& t,
                 const std::function<void(int, int, const Tuple&, const Rational&)>& out) const;
    int64_t row_of(int k, int d, const Tuple& t) const;

    AlgebraPtr a_;
    ModulePtr m_;
    int n_min_ = 0;
    int kmax_ = 0;
    mutable BasisTable as_, ms_;
    mutable std::map<std::pair<int, int>, std::vector<Tuple>> blocks_;
};

// A as a module over A (x) A through the multiplication map.
struct EnvelopingData {
    AlgebraPtr ring;
    ModulePtr module;
};
EnvelopingData enveloping_module(AlgebraPtr a);

// Tor over the enveloping algebra of the dual numbers, computed from its
// explicit 2-periodic free bimodule resolution; returns dims per degree in
// [n_min, 0] and checks the resolution is exact along the way.
std::map<int, int64_t> periodic_tor_oracle(int n_min);

}  // namespace hh
