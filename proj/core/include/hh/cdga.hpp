#pragma once

#include "hh/sparse_matrix.hpp"

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hh {

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Graded-commutative DGA over Q, concentrated in degrees <= 0, finite
// dimensional per degree. Both backends (explicit structure constants, or a
// free graded-commutative algebra on negative-degree generators) materialize
// to the same per-degree table down to min_degree.
class GradedAlgebra {
  public:
    struct BasisElement {
        std::string name;
        int degree;  // <= 0
    };

    // Table backend. product/differential are given on basis indices (global
    // indices into `basis`); omitted pairs multiply to zero.
    // Exact at all degrees (the finite basis is complete), hence the deep
    // default floor; tensor products of truncated free algebras pass their
    // own floor through.
    static constexpr int kExactFloor = std::numeric_limits<int>::min() / 2;
    static AlgebraPtr table(std::string name, std::vector<BasisElement> basis,
                            const std::string& unit_name,
                            const std::vector<std::tuple<int, int, int, Rational>>& product,
                            const std::vector<std::tuple<int, int, Rational>>& differential,
                            int min_degree = kExactFloor);

    // Free graded-commutative algebra on generators of strictly negative
    // degree, with a differential given on generators as signed monomial
    // combinations (each monomial a list of generator indices).
    struct FreeGenerator {
        std::string name;
        int degree;  // < 0
    };
    struct Monomial {
        Rational coeff;
        std::vector<int> factors;  // generator indices, arbitrary order
    };
    static AlgebraPtr free_graded(std::string name,
                                  std::vector<FreeGenerator> generators,
                                  const std::map<int, std::vector<Monomial>>& d_on_generators,
                                  int min_degree = kDefaultFloor);

    // dual_numbers, rationals, exterior<k>, poly<k>, koszul.
    static AlgebraPtr builtin(const std::string& name, int min_degree = kDefaultFloor);

    static constexpr int kDefaultFloor = -12;

    const std::string& name() const { return name_; }
    int min_degree() const { return min_degree_; }
    int dim_of_degree(int d) const;
    const std::string& basis_name(int d, int i) const;
    std::vector<std::string> basis_of_degree(int d) const;
    int unit_index() const { return unit_; }  // index within degree 0

    // Structure constants: e_{d1,i} * e_{d2,j} as coefficients in degree
    // d1+d2. Throws if the result degree is below the materialized floor.
    const SparseVec& product(int d1, int i, int d2, int j) const;
    // d(e_{deg,i}) as coefficients in degree deg+1.
    const SparseVec& differential(int deg, int i) const;

    // Asserts graded commutativity, associativity, unitality, Leibniz, d^2=0
    // on all basis tuples whose degrees stay at or above the floor.
    void validate() const;

  private:
    GradedAlgebra() = default;
    SparseVec& prod_slot(int d1, int i, int d2, int j);

    std::string name_;
    int min_degree_ = 0;
    int unit_ = -1;
    std::vector<std::vector<std::string>> names_;  // names_[-d]
    std::map<std::tuple<int, int, int, int>, SparseVec> prod_;
    std::vector<std::vector<SparseVec>> diff_;  // diff_[-d][i]
    static const SparseVec kZero;
};

AlgebraPtr tensor_algebra(AlgebraPtr a, AlgebraPtr b);

// Homogeneous element of a single degree.
struct AlgebraElement {
    const GradedAlgebra* algebra = nullptr;
    int degree = 0;
    SparseVec coeffs;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement differential(const AlgebraElement& a);

class GradedModule;
using ModulePtr = std::shared_ptr<const GradedModule>;

// DG module over a GradedAlgebra, finite dimensional per degree <= 0.
class GradedModule {
  public:
    static ModulePtr regular(AlgebraPtr a);       // A over itself
    static ModulePtr augmentation(AlgebraPtr a);  // Q, unit coefficient action
    static ModulePtr table(AlgebraPtr a, std::string name,
                           std::vector<GradedAlgebra::BasisElement> basis,
                           const std::vector<std::tuple<int, int, int, Rational>>& action,
                           const std::vector<std::tuple<int, int, Rational>>& differential);

    const std::string& name() const { return name_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    int min_degree() const { return min_degree_; }
    int dim_of_degree(int d) const;
    const std::string& basis_name(int d, int i) const;

    // e_{da,i} . m_{dm,j} in degree da+dm.
    const SparseVec& action(int da, int i, int dm, int j) const;
    const SparseVec& differential(int deg, int i) const;

    void validate() const;

  private:
    GradedModule() = default;

    std::string name_;
    AlgebraPtr algebra_;
    int min_degree_ = 0;
    std::vector<std::vector<std::string>> names_;
    std::map<std::tuple<int, int, int, int>, SparseVec> act_;
    std::vector<std::vector<SparseVec>> diff_;
    static const SparseVec kZero;
};

}  // namespace hh
