#include "hh/homology.hpp"

#include <stdexcept>

namespace hh {

ComplexView view_of(const HochschildComplex& c) {
    ComplexView v;
    v.n_lo = c.n_min() - 1;
    v.n_hi = 0;
    v.dim = [&c](int n) { return c.total_dim(n); };
    v.columns = [&c](int n, const std::function<void(const SparseVec&)>& fn) {
        c.for_each_column(n, fn);
    };
    return v;
}

SparseRationalMatrix matrix_of(const ComplexView& v, int n) {
    SparseRationalMatrix m(v.dim(n + 1), v.dim(n));
    int64_t j = 0;
    v.columns(n, [&](const SparseVec& col) { m.set_column(j++, col); });
    return m;
}

std::map<int, int64_t> homology_dims(const ComplexView& v, int n_min) {
    if (n_min < v.n_lo + 1) throw std::invalid_argument("homology_dims: window below the view");
    std::map<int, int64_t> ranks;
    for (int n = n_min - 1; n <= 0; ++n) {
        RankAccumulator acc(n + 1 <= v.n_hi ? v.dim(n + 1) : 0);
        v.columns(n, [&](const SparseVec& col) { acc.add_column(col); });
        ranks[n] = acc.rank();
    }
    std::map<int, int64_t> out;
    for (int n = n_min; n <= 0; ++n) out[n] = v.dim(n) - ranks[n] - ranks[n - 1];
    return out;
}

SparseVec vector_of_chain(const HochschildComplex& c, const Chain& u, int n) {
    SparseVec out;
    for (const auto& [b, vec] : u.parts) {
        if (b.d - b.k != n) throw std::invalid_argument("vector_of_chain: mixed total degree");
        for (const auto& [row, coeff] : vec.entries) out.push(c.block_offset(b.k, n) + row, coeff);
    }
    out.normalize();
    return out;
}

Chain chain_of_vector(const HochschildComplex& c, int n, const SparseVec& v) {
    Chain out{&c, {}};
    int k = 0;
    int64_t lo = 0, hi = c.block_dim(0, n);
    const int ktop = std::min(c.max_level(), -n);
    for (const auto& [row, coeff] : v.entries) {
        while (row >= hi && k < ktop) {
            ++k;
            lo = hi;
            hi += c.block_dim(k, n + k);
        }
        if (row >= hi) throw std::out_of_range("chain_of_vector: row outside degree");
        out.add({k, n + k}, row - lo, coeff);
    }
    out.normalize();
    return out;
}

HomologyReport homology(const HochschildComplex& c, bool with_representatives) {
    HomologyReport r;
    r.n_min = c.n_min();
    r.edge_degree = c.n_min();
    auto view = view_of(c);
    r.dims = homology_dims(view, c.n_min());
    if (!with_representatives) return r;
    for (int n = c.n_min(); n <= 0; ++n) {
        auto cycles = kernel_basis(matrix_of(view, n));
        auto boundaries = column_space(matrix_of(view, n - 1));
        auto reps = representatives(cycles, boundaries);
        if ((int64_t)reps.size() != r.dims.at(n))
            throw std::logic_error("homology: representative count disagrees with rank count");
        auto& out = r.representatives[n];
        for (const auto& v : reps) out.push_back(chain_of_vector(c, n, v));
    }
    return r;
}

std::optional<std::vector<Rational>> express_class(const HochschildComplex& c,
                                                   const HomologyReport& r, const Chain& u,
                                                   int n) {
    auto it = r.representatives.find(n);
    if (it == r.representatives.end())
        throw std::invalid_argument("express_class: representatives not computed for degree");
    LinearSolver solver;
    for (const auto& rep : it->second) solver.add(vector_of_chain(c, rep, n));
    const size_t nreps = it->second.size();
    auto view = view_of(c);
    auto bnd = matrix_of(view, n - 1);
    for (int64_t j = 0; j < bnd.cols(); ++j) solver.add(bnd.column(j));
    std::vector<Rational> coeffs;
    if (!solver.solve(vector_of_chain(c, u, n), coeffs)) return std::nullopt;
    coeffs.resize(nreps);
    return coeffs;
}

RingTable ring_on_homology(const HochschildComplex& c, const HomologyReport& r) {
    RingTable t;
    for (const auto& [n1, reps1] : r.representatives) {
        for (const auto& [n2, reps2] : r.representatives) {
            const int n = n1 + n2;
            if (n < r.n_min) continue;
            for (size_t i = 0; i < reps1.size(); ++i)
                for (size_t j = 0; j < reps2.size(); ++j) {
                    auto prod = shuffle_product(reps1[i], reps2[j]);
                    auto coeffs = express_class(c, r, prod, n);
                    if (!coeffs)
                        throw std::logic_error("ring_on_homology: product is not a cycle class");
                    t.products[{n1, (int)i, n2, (int)j}] = *coeffs;
                }
        }
    }
    return t;
}

std::map<int, bool> is_quasi_iso(const std::function<SparseRationalMatrix(int)>& f,
                                 const ComplexView& src, const ComplexView& tgt, int n_min,
                                 bool verify_chain_map) {
    if (verify_chain_map) {
        for (int n = n_min; n <= -1; ++n) {
            auto lhs = f(n + 1).multiply(matrix_of(src, n));
            auto rhs = matrix_of(tgt, n).multiply(f(n));
            if (!(lhs == rhs))
                throw std::invalid_argument("is_quasi_iso: input does not commute with D at degree " +
                                            std::to_string(n));
        }
    }
    std::map<int, bool> out;
    for (int n = n_min; n <= 0; ++n) {
        auto ds = matrix_of(src, n);
        auto cyc = kernel_basis(ds);
        RankAccumulator src_bnd(src.dim(n));
        src.columns(n - 1, [&](const SparseVec& col) { src_bnd.add_column(col); });
        const int64_t hs = cyc.dim() - src_bnd.rank();

        RankAccumulator tgt_acc(tgt.dim(n));
        tgt.columns(n - 1, [&](const SparseVec& col) { tgt_acc.add_column(col); });
        const int64_t tgt_bnd = tgt_acc.rank();
        const int64_t ht = kernel_basis(matrix_of(tgt, n)).dim() - tgt_bnd;

        // Rank of the induced map = growth of the boundary accumulator under
        // images of source cycles; bijective iff it exhausts both sides.
        auto F = f(n);
        int64_t img = 0;
        for (const auto& v : cyc.basis)
            if (tgt_acc.add_column(F.apply(v))) ++img;
        out[n] = (img == hs) && (img == ht);
    }
    return out;
}

std::map<int, bool> is_quasi_iso(const SimplicialMap& f, const HochschildComplex& src,
                                 const HochschildComplex& tgt) {
    const int n_min = std::max(src.n_min(), tgt.n_min());
    auto F = [&](int n) { return induced_map_matrix(f, src, tgt, n); };
    return is_quasi_iso(F, view_of(src), view_of(tgt), n_min);
}

}  // namespace hh
