#include "hh/bar.hpp"

#include <algorithm>
#include <stdexcept>

namespace hh {

void BasisTable::extend(const std::function<int(int)>& dim, int down_to) {
    for (int d = floor - 1; d >= down_to; --d) {
        start.push_back((int)elems.size());
        for (int i = 0; i < dim(d); ++i) elems.emplace_back(d, i);
        floor = d;
    }
}

namespace {

// DFS over slot gids (ascending per slot, hence lex-ascending tuples overall)
// visiting every tuple whose slot degrees sum to d.
void enumerate_tuples(const std::vector<const BasisTable*>& slots, int d,
                      const std::function<void(const std::vector<int32_t>&)>& fn) {
    const int P = (int)slots.size();
    if (P == 0) {
        if (d == 0) fn({});
        return;
    }
    // Reachable degree bounds per slot, restricted to [d, 0].
    std::vector<int> lo(P), hi(P);
    for (int p = 0; p < P; ++p) {
        lo[p] = 1;
        hi[p] = -1;
        for (const auto& [dg, idx] : slots[p]->elems) {
            (void)idx;
            if (dg < d) break;
            if (hi[p] < lo[p]) hi[p] = dg;
            lo[p] = dg;
        }
        if (lo[p] > hi[p]) return;
    }
    std::vector<int64_t> smin(P + 1, 0), smax(P + 1, 0);
    for (int p = P - 1; p >= 0; --p) {
        smin[p] = smin[p + 1] + lo[p];
        smax[p] = smax[p + 1] + hi[p];
    }
    std::vector<int32_t> t(P, 0);
    std::function<void(int, int)> rec = [&](int p, int sum) {
        if (p == P) {
            if (sum == d) fn(t);
            return;
        }
        int64_t hi_deg = (int64_t)d - sum - smin[p + 1];
        int64_t lo_deg = (int64_t)d - sum - smax[p + 1];
        if (hi_deg > hi[p]) hi_deg = hi[p];
        if (lo_deg < lo[p]) lo_deg = lo[p];
        if (lo_deg > hi_deg) return;
        const auto& tab = *slots[p];
        for (int g = tab.start[(int)-hi_deg]; g < (int)tab.elems.size(); ++g) {
            int dg = tab.elems[g].first;
            if (dg < lo_deg) break;
            t[p] = g;
            rec(p + 1, sum + dg);
        }
    };
    rec(0, 0);
}

int64_t find_row(const std::vector<std::vector<int32_t>>& block, const std::vector<int32_t>& t) {
    auto it = std::lower_bound(block.begin(), block.end(), t);
    if (it == block.end() || *it != t) throw std::logic_error("bar: target tuple not in basis");
    return it - block.begin();
}

}  // namespace

// ---------------------------------------------------------------------------
// BarComplex

BarComplex::BarComplex(ModulePtr p, AlgebraPtr r, ModulePtr q, BarOptions o)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), opt_(o) {
    if (opt_.n_min > 0) throw std::invalid_argument("bar: window must end at degree <= 0");
    if (opt_.cap < 0) throw std::invalid_argument("bar: negative layer cap");
    if (!p_ || !q_ || !r_) throw std::invalid_argument("bar: missing input");
    if (p_->algebra() != r_ || q_->algebra() != r_)
        throw std::invalid_argument("bar: modules are not over the given ring");
    p_->validate();
    q_->validate();
}

const std::vector<BarComplex::Tuple>& BarComplex::block(int l, int d) const {
    auto key = std::make_pair(l, d);
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
    auto& out = blocks_[key];
    if (l < 0 || l > opt_.cap || d > 0) return out;
    ps_.extend([&](int dd) { return p_->dim_of_degree(dd); }, d);
    rs_.extend([&](int dd) { return r_->dim_of_degree(dd); }, d);
    qs_.extend([&](int dd) { return q_->dim_of_degree(dd); }, d);
    std::vector<const BasisTable*> slots;
    slots.push_back(&ps_);
    for (int i = 0; i < l; ++i) slots.push_back(&rs_);
    slots.push_back(&qs_);
    enumerate_tuples(slots, d, [&](const Tuple& t) { out.push_back(t); });
    return out;
}

int64_t BarComplex::layer_dim(int l, int d) const { return (int64_t)block(l, d).size(); }

int64_t BarComplex::total_dim(int n) const {
    int64_t total = 0;
    for (int l = 0; l <= std::min(opt_.cap, -n); ++l) total += layer_dim(l, n + l);
    return total;
}

int64_t BarComplex::row_of(int l, int d, const Tuple& t) const { return find_row(block(l, d), t); }

void BarComplex::diff_of(int l, int d, const Tuple& t,
                         const std::function<void(int, int, const Tuple&, const Rational&)>& out)
    const {
    // Written slot 0 holds p, slots 1..l the ring factors, slot l+1 holds q.
    auto deg_of = [&](int s) {
        return s == 0 ? ps_.elems[t[0]].first
                      : s == l + 1 ? qs_.elems[t[s]].first : rs_.elems[t[s]].first;
    };
    auto idx_of = [&](int s) {
        return s == 0 ? ps_.elems[t[0]].second
                      : s == l + 1 ? qs_.elems[t[s]].second : rs_.elems[t[s]].second;
    };

    // Internal differential, global sign (-1)^l, each slot twisted by the
    // parity of the written-earlier degrees.
    int sign = (l & 1) ? -1 : 1;
    for (int s = 0; s <= l + 1; ++s) {
        const int ds = deg_of(s), is = idx_of(s);
        const SparseVec& dv = s == 0       ? p_->differential(ds, is)
                              : s == l + 1 ? q_->differential(ds, is)
                                           : r_->differential(ds, is);
        for (const auto& [j, c] : dv.entries) {
            Tuple t2 = t;
            t2[s] = (s == 0 ? ps_ : s == l + 1 ? qs_ : rs_).gid(ds + 1, (int)j);
            out(l, d + 1, t2, c * sign);
        }
        if (ds & 1) sign = -sign;
    }

    if (l == 0) return;
    // Face 0: the right action p.r_1 = (-1)^{|p||r_1|} r_1.p on the left module.
    {
        const int dp = deg_of(0), d1 = deg_of(1);
        const Rational s0((dp & 1) && (d1 & 1) ? -1 : 1);
        for (const auto& [j, c] : p_->action(d1, idx_of(1), dp, idx_of(0)).entries) {
            Tuple t2;
            t2.reserve(l + 1);
            t2.push_back(ps_.gid(dp + d1, (int)j));
            for (int s = 2; s <= l + 1; ++s) t2.push_back(t[s]);
            out(l - 1, d, t2, c * s0);
        }
    }
    // Faces 1..l-1: multiply adjacent ring factors in written order.
    for (int i = 1; i < l; ++i) {
        const Rational fs((i & 1) ? -1 : 1);
        const int d1 = deg_of(i), d2 = deg_of(i + 1);
        for (const auto& [j, c] : r_->product(d1, idx_of(i), d2, idx_of(i + 1)).entries) {
            Tuple t2;
            t2.reserve(l + 1);
            for (int s = 0; s < i; ++s) t2.push_back(t[s]);
            t2.push_back(rs_.gid(d1 + d2, (int)j));
            for (int s = i + 2; s <= l + 1; ++s) t2.push_back(t[s]);
            out(l - 1, d, t2, c * fs);
        }
    }
    // Face l: the left action r_l.q.
    {
        const Rational fs((l & 1) ? -1 : 1);
        const int dl = deg_of(l), dq = deg_of(l + 1);
        for (const auto& [j, c] : q_->action(dl, idx_of(l), dq, idx_of(l + 1)).entries) {
            Tuple t2;
            t2.reserve(l + 1);
            for (int s = 0; s < l; ++s) t2.push_back(t[s]);
            t2.push_back(qs_.gid(dl + dq, (int)j));
            out(l - 1, d, t2, c * fs);
        }
    }
}

ComplexView BarComplex::view() const {
    ComplexView v;
    v.n_lo = opt_.n_min - 1;
    v.n_hi = 0;
    v.dim = [this](int n) { return total_dim(n); };
    v.columns = [this](int n, const std::function<void(const SparseVec&)>& fn) {
        const int ltop = std::min(opt_.cap, -(n + 1));
        std::vector<int64_t> toff(std::max(ltop, -1) + 2, 0);
        for (int l = 0; l <= ltop; ++l) toff[l + 1] = toff[l] + layer_dim(l, n + 1 + l);
        for (int l = 0; l <= std::min(opt_.cap, -n); ++l) {
            const int d = n + l;
            for (const auto& t : block(l, d)) {
                SparseVec col;
                diff_of(l, d, t, [&](int tl, int td, const Tuple& t2, const Rational& c) {
                    if (tl > ltop) return;
                    col.push(toff[tl] + row_of(tl, td, t2), c);
                });
                col.normalize();
                fn(col);
            }
        }
    };
    return v;
}

std::map<int, int64_t> BarComplex::homology_dims() const {
    return hh::homology_dims(view(), opt_.n_min);
}

// ---------------------------------------------------------------------------
// ClassicalHochschild

ClassicalHochschild::ClassicalHochschild(AlgebraPtr a, ModulePtr m, int n_min)
    : a_(std::move(a)), m_(std::move(m)), n_min_(n_min) {
    if (n_min_ > 0) throw std::invalid_argument("classical oracle: window must end at degree <= 0");
    if (!a_ || !m_) throw std::invalid_argument("classical oracle: missing input");
    if (m_->algebra() != a_)
        throw std::invalid_argument("classical oracle: module is not over the given algebra");
    kmax_ = -n_min_ + 1;
}

int64_t ClassicalHochschild::level_dim(int k, int d) const { return (int64_t)block(k, d).size(); }

int64_t ClassicalHochschild::total_dim(int n) const {
    int64_t total = 0;
    for (int k = 0; k <= std::min(kmax_, -n); ++k) total += level_dim(k, n + k);
    return total;
}

const std::vector<ClassicalHochschild::Tuple>& ClassicalHochschild::block(int k, int d) const {
    auto key = std::make_pair(k, d);
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
    auto& out = blocks_[key];
    if (k < 0 || k > kmax_ || d > 0) return out;
    as_.extend([&](int dd) { return a_->dim_of_degree(dd); }, d);
    ms_.extend([&](int dd) { return m_->dim_of_degree(dd); }, d);
    std::vector<const BasisTable*> slots;
    slots.push_back(&ms_);
    for (int i = 0; i < k; ++i) slots.push_back(&as_);
    enumerate_tuples(slots, d, [&](const Tuple& t) { out.push_back(t); });
    return out;
}

int64_t ClassicalHochschild::row_of(int k, int d, const Tuple& t) const {
    return find_row(block(k, d), t);
}

void ClassicalHochschild::diff_of(
    int k, int d, const Tuple& t,
    const std::function<void(int, int, const Tuple&, const Rational&)>& out) const {
    // Written slot s = 0 holds m; slot s in 1..k holds a_{k+1-s}.
    auto deg_of = [&](int s) { return s == 0 ? ms_.elems[t[0]].first : as_.elems[t[s]].first; };
    auto idx_of = [&](int s) { return s == 0 ? ms_.elems[t[0]].second : as_.elems[t[s]].second; };

    // Internal differential with sign (-1)^k.
    int sign = (k & 1) ? -1 : 1;
    for (int s = 0; s <= k; ++s) {
        const int ds = deg_of(s), is = idx_of(s);
        const SparseVec& dv = s == 0 ? m_->differential(ds, is) : a_->differential(ds, is);
        for (const auto& [j, c] : dv.entries) {
            Tuple t2 = t;
            t2[s] = (s == 0 ? ms_ : as_).gid(ds + 1, (int)j);
            out(k, d + 1, t2, c * sign);
        }
        if (ds & 1) sign = -sign;
    }

    if (k == 0) return;
    // Face i in 1..k-1 merges a_i a_{i+1}, i.e. the adjacent written slots
    // (k-i, k-i+1), multiplied in written order, with sign (-1)^i.
    for (int i = 1; i < k; ++i) {
        const int p = k - i;
        const Rational fs((i & 1) ? -1 : 1);
        const int d1 = deg_of(p), d2 = deg_of(p + 1);
        for (const auto& [j, c] : a_->product(d1, idx_of(p), d2, idx_of(p + 1)).entries) {
            Tuple t2;
            t2.reserve(k);
            for (int s = 0; s < p; ++s) t2.push_back(t[s]);
            t2.push_back(as_.gid(d1 + d2, (int)j));
            for (int s = p + 2; s <= k; ++s) t2.push_back(t[s]);
            out(k - 1, d, t2, c * fs);
        }
    }
    // Face 0 acts by a_1 (written slot k) on m after carrying it across m and
    // every other algebra factor: sign (-1)^{|a_1| (d - |a_1|)}.
    {
        const int d1 = deg_of(k), dm = deg_of(0);
        const Rational fs((d1 & 1) && ((d - d1) & 1) ? -1 : 1);
        for (const auto& [j, c] : m_->action(d1, idx_of(k), dm, idx_of(0)).entries) {
            Tuple t2;
            t2.reserve(k);
            t2.push_back(ms_.gid(dm + d1, (int)j));
            for (int s = 1; s < k; ++s) t2.push_back(t[s]);
            out(k - 1, d, t2, c * fs);
        }
    }
    // Face k folds a_k (written slot 1, adjacent to m) onto m, commuting with
    // m only: total sign (-1)^k (-1)^{|m||a_k|}.
    {
        const int d1 = deg_of(1), dm = deg_of(0);
        Rational fs((k & 1) ? -1 : 1);
        if ((d1 & 1) && (dm & 1)) fs = -fs;
        for (const auto& [j, c] : m_->action(d1, idx_of(1), dm, idx_of(0)).entries) {
            Tuple t2;
            t2.reserve(k);
            t2.push_back(ms_.gid(dm + d1, (int)j));
            for (int s = 2; s <= k; ++s) t2.push_back(t[s]);
            out(k - 1, d, t2, c * fs);
        }
    }
}

ComplexView ClassicalHochschild::view() const {
    ComplexView v;
    v.n_lo = n_min_ - 1;
    v.n_hi = 0;
    v.dim = [this](int n) { return total_dim(n); };
    v.columns = [this](int n, const std::function<void(const SparseVec&)>& fn) {
        const int ktop = std::min(kmax_, -(n + 1));
        std::vector<int64_t> toff(std::max(ktop, -1) + 2, 0);
        for (int k = 0; k <= ktop; ++k) toff[k + 1] = toff[k] + level_dim(k, n + 1 + k);
        for (int k = 0; k <= std::min(kmax_, -n); ++k) {
            const int d = n + k;
            for (const auto& t : block(k, d)) {
                SparseVec col;
                diff_of(k, d, t, [&](int tk, int td, const Tuple& t2, const Rational& c) {
                    if (tk > ktop) return;
                    col.push(toff[tk] + row_of(tk, td, t2), c);
                });
                col.normalize();
                fn(col);
            }
        }
    };
    return v;
}

// ---------------------------------------------------------------------------
// Enveloping module and the periodic Tor oracle

EnvelopingData enveloping_module(AlgebraPtr a) {
    AlgebraPtr ae = tensor_algebra(a, a);
    // Global index enumeration of the tensor basis: degree-major, left factor
    // degree descending inside a total degree.
    std::vector<std::tuple<int, int, int, int>> rev;  // (da, db, i, j)
    int deepest = 0;
    for (int d = 0; d >= std::max(ae->min_degree(), -64); --d)
        if (ae->dim_of_degree(d) > 0) deepest = d;
    for (int d = 0; d >= deepest; --d)
        for (int da = 0; da >= d; --da)
            for (int i = 0; i < a->dim_of_degree(da); ++i)
                for (int j = 0; j < a->dim_of_degree(d - da); ++j) rev.push_back({da, d - da, i, j});

    std::vector<GradedAlgebra::BasisElement> basis;
    std::vector<std::pair<int, int>> mpos;  // module index -> (degree, index)
    std::map<std::pair<int, int>, int> midx;
    int mdeep = 0;
    for (int d = 0; d >= std::max(a->min_degree(), -64); --d)
        if (a->dim_of_degree(d) > 0) mdeep = d;
    for (int d = 0; d >= mdeep; --d)
        for (int i = 0; i < a->dim_of_degree(d); ++i) {
            midx[{d, i}] = (int)basis.size();
            mpos.emplace_back(d, i);
            basis.push_back({a->basis_name(d, i), d});
        }

    std::vector<std::tuple<int, int, Rational>> diff;
    for (size_t m = 0; m < mpos.size(); ++m) {
        auto [dm, im] = mpos[m];
        for (const auto& [j, c] : a->differential(dm, im).entries)
            diff.emplace_back((int)m, midx.at({dm + 1, (int)j}), c);
    }

    // (x (x) y) . m = (xy) m: pull the regular action back along multiplication.
    std::vector<std::tuple<int, int, int, Rational>> action;
    for (size_t g = 0; g < rev.size(); ++g) {
        auto [da, db, i, j] = rev[g];
        const SparseVec& xy = a->product(da, i, db, j);
        for (size_t m = 0; m < mpos.size(); ++m) {
            auto [dm, im] = mpos[m];
            if (da + db + dm < mdeep) continue;
            for (const auto& [u, c1] : xy.entries)
                for (const auto& [w, c2] : a->product(da + db, (int)u, dm, im).entries)
                    action.emplace_back((int)g, (int)m, midx.at({da + db + dm, (int)w}), c1 * c2);
        }
    }
    return {ae, GradedModule::table(ae, a->name() + "_mult", basis, action, diff)};
}

std::map<int, int64_t> periodic_tor_oracle(int n_min) {
    auto a = GradedAlgebra::builtin("dual_numbers");
    const int eps = a->unit_index() == 0 ? 1 : 0;  // the nilpotent in degree 0
    auto rank_of = [](const SparseRationalMatrix& m) {
        RankAccumulator acc(m.rows());
        for (int64_t j = 0; j < m.cols(); ++j) acc.add_column(m.column(j));
        return acc.rank();
    };

    // Multiplication by e(x)1 + rc (1(x)e) on the enveloping basis indexed as
    // x_i (x) x_j -> 2j + i, built from the structure constants.
    auto mult_by = [&](const Rational& rc) {
        SparseRationalMatrix m(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                SparseVec col;
                for (const auto& [u, c] : a->product(0, eps, 0, i).entries)
                    col.push(2 * j + (int64_t)u, c);
                for (const auto& [u, c] : a->product(0, eps, 0, j).entries)
                    col.push(2 * (int64_t)u + i, c * rc);
                col.normalize();
                m.set_column(2 * j + i, col);
            }
        return m;
    };
    auto tminus = mult_by(Rational(-1));
    auto tplus = mult_by(Rational(1));
    if (!tminus.multiply(tplus).is_zero() || !tplus.multiply(tminus).is_zero())
        throw std::logic_error("periodic resolution: consecutive maps do not compose to zero");
    // Exactness of the 2-periodic resolution: each map has rank 2 on the
    // 4-dimensional enveloping algebra, so image = kernel at every stage.
    if (rank_of(tminus) != 2 || rank_of(tplus) != 2)
        throw std::logic_error("periodic resolution: not exact");

    // Apply A (x)_{Ae} -: a free rank-one module collapses to A and the
    // boundary becomes multiplication by the image of t under multiplication,
    // i.e. by (1 + rc) e.
    auto collapse = [&](const Rational& rc) {
        SparseRationalMatrix m(2, 2);
        for (int i = 0; i < 2; ++i) {
            SparseVec col;
            for (const auto& [u, c] : a->product(0, eps, 0, i).entries)
                col.push((int64_t)u, c * (Rational(1) + rc));
            col.normalize();
            m.set_column(i, col);
        }
        return m;
    };
    auto d_odd = collapse(Rational(-1));  // boundary out of homological degree 2i+1
    auto d_even = collapse(Rational(1));  // boundary out of homological degree 2i, i >= 1
    std::map<int, int64_t> out;
    for (int n = 0; n >= n_min; --n) {
        auto rk = [&](int step) {
            if (step <= 0) return (int64_t)0;
            return rank_of((step & 1) ? d_odd : d_even);
        };
        out[n] = 2 - rk(-n) - rk(-n + 1);
    }
    return out;
}

}  // namespace hh
