#include "hh/linalg.hpp"

namespace hh {

bool RankAccumulator::add_column(SparseVec col) {
    reduce(col);
    if (col.empty()) return false;
    index_t p = col.entries.back().first;
    Rational inv = 1 / col.entries.back().second;
    col.scale(inv);
    pivots_.emplace(p, std::move(col));
    ++rank_;
    return true;
}

void RankAccumulator::reduce(SparseVec& v) const {
    while (!v.empty()) {
        index_t p = v.entries.back().first;
        auto it = pivots_.find(p);
        if (it == pivots_.end()) return;
        Rational c = -v.entries.back().second;
        v.axpy(c, it->second);
    }
}

index_t rank(const SparseRationalMatrix& m) {
    RankAccumulator acc(m.rows());
    for (index_t j = 0; j < m.cols(); ++j) acc.add_column(m.column(j));
    return acc.rank();
}

Subspace kernel_basis(const SparseRationalMatrix& m) {
    // Augment each column with a unit tail tracking the combination; a column
    // that reduces to zero yields a kernel vector from its tail.
    struct Aug {
        SparseVec col;
        SparseVec combo;
    };
    std::unordered_map<index_t, Aug> pivots;
    Subspace ker;
    ker.ambient_dim = m.cols();
    for (index_t j = 0; j < m.cols(); ++j) {
        Aug cur;
        cur.col = m.column(j);
        cur.combo.push(j, 1);
        while (!cur.col.empty()) {
            index_t p = cur.col.entries.back().first;
            auto it = pivots.find(p);
            if (it == pivots.end()) break;
            Rational c = -cur.col.entries.back().second;
            cur.col.axpy(c, it->second.col);
            cur.combo.axpy(c, it->second.combo);
        }
        if (cur.col.empty()) {
            ker.basis.push_back(std::move(cur.combo));
        } else {
            Rational inv = 1 / cur.col.entries.back().second;
            cur.col.scale(inv);
            cur.combo.scale(inv);
            pivots.emplace(cur.col.entries.back().first, std::move(cur));
        }
    }
    return ker;
}

Subspace column_space(const SparseRationalMatrix& m) {
    Subspace im;
    im.ambient_dim = m.rows();
    RankAccumulator acc(m.rows());
    for (index_t j = 0; j < m.cols(); ++j) {
        index_t before = acc.rank();
        acc.add_column(m.column(j));
        if (acc.rank() > before) im.basis.push_back(m.column(j));
    }
    return im;
}

index_t quotient_dim(const Subspace& sub, const Subspace& inside) {
    if (sub.ambient_dim != inside.ambient_dim) throw containment_error("ambient dimension mismatch");
    RankAccumulator acc(inside.ambient_dim);
    for (const auto& v : inside.basis)
        if (!acc.add_column(v)) throw containment_error("`inside` basis is dependent");
    for (const auto& v : sub.basis)
        if (acc.add_column(v)) throw containment_error("subspace escapes the ambient span");
    // sub basis independent by invariant; verify cheaply.
    RankAccumulator sacc(sub.ambient_dim);
    for (const auto& v : sub.basis)
        if (!sacc.add_column(v)) throw containment_error("`sub` basis is dependent");
    return inside.dim() - sub.dim();
}

std::vector<SparseVec> representatives(const Subspace& cycles, const Subspace& boundaries) {
    if (cycles.ambient_dim != boundaries.ambient_dim)
        throw containment_error("ambient dimension mismatch");
    RankAccumulator cyc(cycles.ambient_dim);
    for (const auto& v : cycles.basis) cyc.add_column(v);
    RankAccumulator acc(cycles.ambient_dim);
    for (const auto& v : boundaries.basis) {
        SparseVec probe = v;
        cyc.reduce(probe);
        if (!probe.empty()) throw containment_error("boundaries escape the cycle space");
        acc.add_column(v);
    }
    // Pivot completion: cycles that grow the echelon past the boundaries
    // project to a quotient basis.
    std::vector<SparseVec> reps;
    for (const auto& v : cycles.basis) {
        index_t before = acc.rank();
        acc.add_column(v);
        if (acc.rank() > before) reps.push_back(v);
    }
    return reps;
}

void LinearSolver::add(const SparseVec& v) {
    EchelonCol cur;
    cur.col = v;
    cur.combo.emplace_back(count_, Rational(1));
    ++count_;
    while (!cur.col.empty()) {
        index_t p = cur.col.entries.back().first;
        auto it = by_pivot_.find(p);
        if (it == by_pivot_.end()) {
            Rational inv = 1 / cur.col.entries.back().second;
            cur.col.scale(inv);
            for (auto& [i, c] : cur.combo) c *= inv;
            by_pivot_.emplace(p, std::move(cur));
            return;
        }
        Rational c = -cur.col.entries.back().second;
        cur.col.axpy(c, it->second.col);
        for (const auto& [i, w] : it->second.combo) cur.combo.emplace_back(i, c * w);
    }
    // Dependent generator: nothing to store.
}

bool LinearSolver::solve(const SparseVec& target, std::vector<Rational>& coeffs) const {
    coeffs.assign(count_, Rational(0));
    SparseVec cur = target;
    while (!cur.empty()) {
        index_t p = cur.entries.back().first;
        auto it = by_pivot_.find(p);
        if (it == by_pivot_.end()) return false;
        Rational c = cur.entries.back().second;
        cur.axpy(-c, it->second.col);
        for (const auto& [i, w] : it->second.combo) coeffs[i] += c * w;
    }
    return true;
}

}  // namespace hh
