#pragma once

#include "hh/hochschild.hpp"
#include "hh/linalg.hpp"

#include <array>
#include <map>
#include <optional>

namespace hh {

// Degree-indexed view of a cochain complex: dimensions and streamed columns
// of D^n (row indices taken in degree n+1). Valid for n in [n_lo, n_hi].
struct ComplexView {
    int n_lo = 0;
    int n_hi = 0;
    std::function<int64_t(int)> dim;
    std::function<void(int, const std::function<void(const SparseVec&)>&)> columns;
};

ComplexView view_of(const HochschildComplex& c);  // valid on [n_min - 1, 0]
SparseRationalMatrix matrix_of(const ComplexView& v, int n);

// Exact dim H^n = dim^n - rank D^n - rank D^{n-1} for n in [n_min, 0],
// streaming the columns so only ranks are held in memory.
std::map<int, int64_t> homology_dims(const ComplexView& v, int n_min);

struct HomologyReport {
    int n_min = 0;
    // Degree n_min sits at the window edge; it is exact for a complex built
    // with levels through -n_min + 1 but flagged for truncated complexes.
    int edge_degree = 0;
    std::map<int, int64_t> dims;
    std::map<int, std::vector<Chain>> representatives;  // present when requested
};

HomologyReport homology(const HochschildComplex& c, bool with_representatives = false);

// Conversion between chains and total-degree coordinate vectors.
SparseVec vector_of_chain(const HochschildComplex& c, const Chain& u, int n);
Chain chain_of_vector(const HochschildComplex& c, int n, const SparseVec& v);

// Coefficients of the class of the degree-n cycle u over the representative
// basis of degree n (modulo boundaries); nullopt if u is not a cycle class.
std::optional<std::vector<Rational>> express_class(const HochschildComplex& c,
                                                   const HomologyReport& r, const Chain& u, int n);

// products[{n1, i, n2, j}] = class of sh(rep_i^{n1}, rep_j^{n2}) over the
// representatives of degree n1+n2; pairs landing outside the window are
// omitted.
struct RingTable {
    std::map<std::array<int, 4>, std::vector<Rational>> products;
};
RingTable ring_on_homology(const HochschildComplex& c, const HomologyReport& r);

// Per-degree quasi-isomorphism verdicts for a chain map given by matrices
// f(n): src degree n -> tgt degree n. Verifies the chain-map identity first.
std::map<int, bool> is_quasi_iso(const std::function<SparseRationalMatrix(int)>& f,
                                 const ComplexView& src, const ComplexView& tgt, int n_min,
                                 bool verify_chain_map = true);
std::map<int, bool> is_quasi_iso(const SimplicialMap& f, const HochschildComplex& src,
                                 const HochschildComplex& tgt);

}  // namespace hh
