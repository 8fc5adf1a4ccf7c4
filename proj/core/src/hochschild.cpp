#include "hh/hochschild.hpp"

#include "hh/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hh {

namespace {

// Sparse element of a single graded piece: (basis index, coeff) pairs.
using Piece = std::vector<std::pair<int, Rational>>;

Piece collect(std::map<int, Rational>& acc) {
    Piece out;
    for (auto& [i, c] : acc)
        if (c != 0) out.emplace_back(i, c);
    return out;
}

// Left-to-right product of algebra basis elements; (degree, sparse piece).
std::pair<int, Piece> fold_algebra(const GradedAlgebra& A, const std::vector<std::pair<int, int>>& factors) {
    int deg = 0;
    Piece cur{{A.unit_index(), Rational(1)}};
    for (auto [dg, jg] : factors) {
        std::map<int, Rational> acc;
        for (const auto& [i, c] : cur) {
            const SparseVec& pv = A.product(deg, i, dg, jg);
            for (const auto& [e, pc] : pv.entries) acc[(int)e] += c * pc;
        }
        deg += dg;
        cur = collect(acc);
        if (cur.empty()) break;
    }
    return {deg, cur};
}

bool parity_of(int a, int b) { return (a & 1) && (b & 1); }

}  // namespace

int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& perm) {
    if (degrees.size() != perm.size()) throw std::invalid_argument("koszul_sign: size mismatch");
    int parity = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && parity_of(degrees[i], degrees[j])) parity ^= 1;
    return parity ? -1 : 1;
}

HochschildComplex::HochschildComplex(SpacePtr space, AlgebraPtr algebra, Options opt)
    : space_(std::move(space)), algebra_(std::move(algebra)), opt_(std::move(opt)) {
    if (!space_ || !algebra_) throw std::invalid_argument("build_complex: null space or algebra");
    if (opt_.n_min > 0) throw std::invalid_argument("build_complex: window must lie in (-inf, 0]");
    if (opt_.module) {
        if (!space_->is_pointed())
            throw std::invalid_argument("build_complex: module coefficients require a pointed space");
        if (opt_.module->algebra() != algebra_)
            throw std::invalid_argument("build_complex: module is not over the given algebra");
    }
    kmax_ = -opt_.n_min + 1;
    build_level_tables();

    gid_start_.clear();
    gid_floor_ = 1;
    mgid_start_.clear();
    mgid_floor_ = 1;
    extend_gids(0);
    unit_gid_ = gid_rev_.at({0, algebra_->unit_index()});
}

void HochschildComplex::build_level_tables() {
    levels_.resize(kmax_ + 1);
    pos_index_.resize(kmax_ + 1);
    bp_slot_.assign(kmax_ + 1, -1);
    face_pos_.resize(kmax_ + 1);
    s_image_.resize(kmax_ + 1);
    for (int k = 0; k <= kmax_; ++k) {
        levels_[k] = space_->level(k);
        for (int p = 0; p < (int)levels_[k].size(); ++p) pos_index_[k][levels_[k][p]] = p;
        if (opt_.module) bp_slot_[k] = pos_index_[k].at(space_->basepoint_at(k));
        if (k == 0) continue;
        face_pos_[k].assign(k + 1, std::vector<int>(levels_[k].size()));
        for (int i = 0; i <= k; ++i)
            for (int p = 0; p < (int)levels_[k].size(); ++p)
                face_pos_[k][i][p] = pos_index_[k - 1].at(space_->face(levels_[k][p], i));
        s_image_[k].assign(k, std::vector<char>(levels_[k].size(), 0));
        for (int j = 0; j < k; ++j)
            for (const auto& r : levels_[k - 1])
                s_image_[k][j][pos_index_[k].at(FiniteSimplicialSet::degenerate(r, j))] = 1;
    }
}

void HochschildComplex::extend_gids(int down_to) const {
    for (int d = gid_floor_ - 1; d >= down_to; --d) {
        gid_start_.push_back((int)gid_.size());
        for (int i = 0; i < algebra_->dim_of_degree(d); ++i) {
            gid_rev_[{d, i}] = (int)gid_.size();
            gid_.emplace_back(d, i);
        }
        gid_floor_ = d;
    }
    if (!opt_.module) return;
    for (int d = mgid_floor_ - 1; d >= down_to; --d) {
        mgid_start_.push_back((int)mgid_.size());
        for (int i = 0; i < opt_.module->dim_of_degree(d); ++i) {
            mgid_rev_[{d, i}] = (int)mgid_.size();
            mgid_.emplace_back(d, i);
        }
        mgid_floor_ = d;
    }
}

int HochschildComplex::gid_of(int degree, int index) const {
    extend_gids(degree);
    auto it = gid_rev_.find({degree, index});
    if (it == gid_rev_.end()) throw std::out_of_range("gid_of: no such basis element");
    return it->second;
}

int HochschildComplex::mod_gid_of(int degree, int index) const {
    if (!opt_.module) throw std::logic_error("mod_gid_of: complex has no module");
    extend_gids(degree);
    auto it = mgid_rev_.find({degree, index});
    if (it == mgid_rev_.end()) throw std::out_of_range("mod_gid_of: no such basis element");
    return it->second;
}

bool HochschildComplex::degenerate_monomial(int k, const Monomial& m) const {
    if (k == 0) return false;
    const int ms = bp_slot_[k];
    for (int j = 0; j < k; ++j) {
        bool all_unit = true;
        for (int p = 0; p < (int)m.size() && all_unit; ++p) {
            if (p == ms || s_image_[k][j][p]) continue;
            if (m[p] != unit_gid_) all_unit = false;
        }
        if (all_unit) return true;
    }
    return false;
}

void HochschildComplex::enumerate(int k, int d,
                                  const std::function<void(const Monomial&)>& fn,
                                  int64_t* counter) const {
    if (d > 0 || k < 0 || k > kmax_) return;
    const int P = positions(k);
    const int ms = bp_slot_[k];
    if (P == 0) {
        if (d == 0) {
            Monomial m;
            fn(m);
            ++*counter;
        }
        return;
    }
    extend_gids(d);

    // Deepest/shallowest populated degree in [d, 0] for algebra and module.
    auto span_of = [&](const std::vector<std::pair<int, int>>& tab) {
        int lo = 0, hi = d;  // lo = min degree present, hi = max degree present
        bool any = false;
        for (const auto& [dg, idx] : tab) {
            (void)idx;
            if (dg < d) break;
            if (!any) hi = dg, any = true;
            lo = dg;
        }
        if (!any) return std::pair<int, int>{1, -1};  // empty: lo > hi
        return std::pair<int, int>{lo, hi};
    };
    auto [loA, hiA] = span_of(gid_);
    int loM = 0, hiM = 0;
    if (opt_.module) std::tie(loM, hiM) = span_of(mgid_);

    // suffix_min[p] / suffix_max[p]: degree reachable from positions p..P-1.
    std::vector<int64_t> suffix_min(P + 1, 0), suffix_max(P + 1, 0);
    for (int p = P - 1; p >= 0; --p) {
        int lo = (p == ms) ? loM : loA;
        int hi = (p == ms) ? hiM : hiA;
        if (lo > hi) return;  // some position has no admissible factor
        suffix_min[p] = suffix_min[p + 1] + lo;
        suffix_max[p] = suffix_max[p + 1] + hi;
    }

    Monomial m(P, unit_gid_);
    std::function<void(int, int)> rec = [&](int p, int sum) {
        if (p == P) {
            if (sum != d) return;
            if (opt_.normalized && degenerate_monomial(k, m)) return;
            ++*counter;
            if (*counter > opt_.max_block)
                throw basis_budget_exceeded("basis budget exceeded at level " + std::to_string(k) +
                                            ", internal degree " + std::to_string(d));
            fn(m);
            return;
        }
        const bool mod = (p == ms);
        const auto& tab = mod ? mgid_ : gid_;
        const auto& starts = mod ? mgid_start_ : gid_start_;
        // factor degree dg must satisfy d - suffix_max <= sum + dg + suffix_min
        // and sum + dg + suffix_max >= d, with dg in [lo_deg, hi_deg]:
        int64_t hi_deg = (int64_t)d - sum - suffix_min[p + 1];
        int64_t lo_deg = (int64_t)d - sum - suffix_max[p + 1];
        if (hi_deg > 0) hi_deg = 0;
        if (lo_deg < d) lo_deg = d;
        if (lo_deg > hi_deg) return;
        for (int g = starts[(int)-hi_deg]; g < (int)tab.size(); ++g) {
            int dg = tab[g].first;
            if (dg < lo_deg) break;
            m[p] = g;
            rec(p + 1, sum + dg);
        }
        m[p] = mod ? 0 : unit_gid_;
    };
    rec(0, 0);
}

HochschildComplex::Block& HochschildComplex::block(int k, int d) const {
    BlockKey key{k, d};
    auto it = blocks_.find(key);
    if (it != blocks_.end() && it->second.count >= 0) return it->second;
    Block& b = blocks_[key];
    b.monos.clear();
    b.stored = true;
    int64_t counter = 0;
    enumerate(k, d,
              [&](const Monomial& m) {
                  if (!b.stored) return;
                  if ((int64_t)b.monos.size() >= opt_.materialize_cap) {
                      b.monos.clear();
                      b.monos.shrink_to_fit();
                      b.stored = false;
                      return;
                  }
                  b.monos.push_back(m);
              },
              &counter);
    b.count = counter;
    return b;
}

int64_t HochschildComplex::block_dim(int k, int d) const { return block(k, d).count; }

bool HochschildComplex::block_materialized(int k, int d) const { return block(k, d).stored; }

const std::vector<Monomial>& HochschildComplex::block_basis(int k, int d) const {
    const Block& b = block(k, d);
    if (!b.stored)
        throw std::logic_error("block_basis: block (" + std::to_string(k) + "," + std::to_string(d) +
                               ") exceeds the materialization cap");
    return b.monos;
}

int64_t HochschildComplex::row_of(int k, int d, const Monomial& m) const {
    const Block& b = block(k, d);
    if (!b.stored) throw std::logic_error("row_of: block not materialized");
    auto it = std::lower_bound(b.monos.begin(), b.monos.end(), m);
    if (it == b.monos.end() || *it != m) return -1;
    return it - b.monos.begin();
}

void HochschildComplex::for_each_monomial(int k, int d,
                                          const std::function<void(const Monomial&)>& fn) const {
    const Block& b = block(k, d);
    if (b.stored) {
        for (const auto& m : b.monos) fn(m);
        return;
    }
    int64_t counter = 0;
    enumerate(k, d, fn, &counter);
}

int64_t HochschildComplex::total_dim(int n) const {
    if (n > 0) return 0;
    int64_t out = 0;
    for (int k = 0; k <= std::min(kmax_, -n); ++k) out += block_dim(k, n + k);
    return out;
}

int64_t HochschildComplex::block_offset(int k, int n) const {
    int64_t off = 0;
    for (int kk = 0; kk < k; ++kk) off += block_dim(kk, n + kk);
    return off;
}

int HochschildComplex::monomial_degree(int k, const Monomial& m) const {
    int d = 0;
    for (int p = 0; p < (int)m.size(); ++p)
        d += (p == bp_slot_[k]) ? mgid_[m[p]].first : gid_[m[p]].first;
    return d;
}

std::string HochschildComplex::monomial_name(int k, int d, const Monomial& m) const {
    (void)d;
    if (m.empty()) return "1";
    std::ostringstream os;
    for (int p = 0; p < (int)m.size(); ++p) {
        if (p) os << "\xE2\x8A\x97";
        if (p == bp_slot_[k])
            os << opt_.module->basis_name(mgid_[m[p]].first, mgid_[m[p]].second);
        else
            os << algebra_->basis_name(gid_[m[p]].first, gid_[m[p]].second);
    }
    return os.str();
}

std::vector<std::pair<Monomial, Rational>> HochschildComplex::push_monomial(
    const Monomial& m, int k, const HochschildComplex& target, int tk,
    const std::vector<int>& pos_map) const {
    const int P = positions(k);
    const int TP = target.positions(tk);
    const int ms = bp_slot_[k];
    const int tms = target.bp_slot_[tk];
    if ((int)pos_map.size() != P) throw std::invalid_argument("push_monomial: bad position map");
    if ((bool)opt_.module != (bool)target.module())
        throw std::invalid_argument("push_monomial: module mismatch");
    if (ms >= 0 && pos_map[ms] != tms)
        throw std::invalid_argument("push_monomial: map does not preserve the basepoint");

    std::vector<int> degs(P);
    for (int p = 0; p < P; ++p) degs[p] = (p == ms) ? mgid_[m[p]].first : gid_[m[p]].first;

    // Koszul sign of the stable sort of factors into target-position order.
    int parity = 0;
    for (int p = 0; p < P; ++p)
        for (int q = p + 1; q < P; ++q)
            if (pos_map[p] > pos_map[q] && parity_of(degs[p], degs[q])) parity ^= 1;

    std::vector<std::vector<int>> groups(TP);
    for (int p = 0; p < P; ++p) groups[pos_map[p]].push_back(p);

    // Per target position, the sparse list of (target gid, coeff) choices.
    std::vector<std::vector<std::pair<int, Rational>>> choices(TP);
    for (int t = 0; t < TP; ++t) {
        if (t == tms) {
            // Fold into the module: left factors act, later factors commute in.
            const GradedModule& M = *opt_.module;
            int adeg = 0;
            Piece avals{{algebra_->unit_index(), Rational(1)}};
            bool seen = false;
            int mdeg = 0;
            Piece mvals;
            for (int p : groups[t]) {
                if (p == ms) {
                    mdeg = adeg + degs[p];
                    std::map<int, Rational> acc;
                    for (const auto& [i, c] : avals) {
                        const SparseVec& av = M.action(adeg, i, degs[p], mgid_[m[p]].second);
                        for (const auto& [e, ac] : av.entries) acc[(int)e] += c * ac;
                    }
                    mvals = collect(acc);
                    seen = true;
                } else if (!seen) {
                    std::map<int, Rational> acc;
                    for (const auto& [i, c] : avals) {
                        const SparseVec& pv = algebra_->product(adeg, i, degs[p], gid_[m[p]].second);
                        for (const auto& [e, pc] : pv.entries) acc[(int)e] += c * pc;
                    }
                    adeg += degs[p];
                    avals = collect(acc);
                } else {
                    // w * a = (-1)^{|a||w|} a * w
                    Rational s = parity_of(degs[p], mdeg) ? Rational(-1) : Rational(1);
                    std::map<int, Rational> acc;
                    for (const auto& [i, c] : mvals) {
                        const SparseVec& av = M.action(degs[p], gid_[m[p]].second, mdeg, i);
                        for (const auto& [e, ac] : av.entries) acc[(int)e] += s * c * ac;
                    }
                    mdeg += degs[p];
                    mvals = collect(acc);
                }
            }
            if (!seen) throw std::logic_error("push_monomial: basepoint group lacks a module factor");
            choices[t].reserve(mvals.size());
            for (const auto& [i, c] : mvals) choices[t].emplace_back(target.mod_gid_of(mdeg, i), c);
        } else {
            std::vector<std::pair<int, int>> factors;
            for (int p : groups[t]) factors.emplace_back(degs[p], gid_[m[p]].second);
            auto [deg, vals] = fold_algebra(*algebra_, factors);
            choices[t].reserve(vals.size());
            for (const auto& [i, c] : vals) choices[t].emplace_back(target.gid_of(deg, i), c);
        }
        if (choices[t].empty()) return {};
    }

    std::vector<std::pair<Monomial, Rational>> out;
    Monomial tm(TP, target.unit_gid_);
    Rational base = parity ? Rational(-1) : Rational(1);
    std::function<void(int, Rational)> rec = [&](int t, Rational c) {
        if (t == TP) {
            out.emplace_back(tm, c);
            return;
        }
        for (const auto& [g, gc] : choices[t]) {
            tm[t] = g;
            rec(t + 1, c * gc);
        }
    };
    rec(0, base);
    return out;
}

std::vector<HochschildComplex::Term> HochschildComplex::diff_of(int k, int d,
                                                                const Monomial& m) const {
    std::vector<Term> out;
    const int P = positions(k);
    const int ms = bp_slot_[k];

    // Internal differential with sign (-1)^{k + eps_p}.
    int eps = k & 1;
    for (int p = 0; p < P; ++p) {
        const bool mod = (p == ms);
        const int dp = mod ? mgid_[m[p]].first : gid_[m[p]].first;
        const int ip = mod ? mgid_[m[p]].second : gid_[m[p]].second;
        const SparseVec& dv = mod ? opt_.module->differential(dp, ip) : algebra_->differential(dp, ip);
        if (!dv.empty()) {
            Monomial mm = m;
            for (const auto& [e, c] : dv.entries) {
                mm[p] = mod ? mod_gid_of(dp + 1, (int)e) : gid_of(dp + 1, (int)e);
                int64_t row = row_of(k, d + 1, mm);
                if (row >= 0) out.push_back({{k, d + 1}, row, eps ? -c : c});
            }
        }
        eps ^= dp & 1;
    }

    // Face part sum_i (-1)^i (d_i)_*.
    if (k > 0) {
        for (int i = 0; i <= k; ++i) {
            for (auto& [tm, c] : push_monomial(m, k, *this, k - 1, face_pos_[k][i])) {
                int64_t row = row_of(k - 1, d, tm);
                if (row >= 0) out.push_back({{k - 1, d}, row, (i & 1) ? -c : c});
            }
        }
    }
    return out;
}

SparseRationalMatrix HochschildComplex::face_matrix(int k, int d, int i) const {
    const auto& src = block_basis(k, d);
    SparseRationalMatrix mat(block_dim(k - 1, d), (int64_t)src.size());
    for (int64_t j = 0; j < (int64_t)src.size(); ++j) {
        SparseVec col;
        for (auto& [tm, c] : push_monomial(src[j], k, *this, k - 1, face_pos_[k][i])) {
            int64_t row = row_of(k - 1, d, tm);
            if (row >= 0) col.push(row, c);
        }
        col.normalize();
        mat.set_column(j, std::move(col));
    }
    return mat;
}

SparseRationalMatrix HochschildComplex::internal_matrix(int k, int d) const {
    const auto& src = block_basis(k, d);
    const int ms = bp_slot_[k];
    SparseRationalMatrix mat(block_dim(k, d + 1), (int64_t)src.size());
    for (int64_t j = 0; j < (int64_t)src.size(); ++j) {
        SparseVec col;
        const Monomial& m = src[j];
        int eps = 0;
        for (int p = 0; p < (int)m.size(); ++p) {
            const bool mod = (p == ms);
            const int dp = mod ? mgid_[m[p]].first : gid_[m[p]].first;
            const int ip = mod ? mgid_[m[p]].second : gid_[m[p]].second;
            const SparseVec& dv =
                mod ? opt_.module->differential(dp, ip) : algebra_->differential(dp, ip);
            if (!dv.empty()) {
                Monomial mm = m;
                for (const auto& [e, c] : dv.entries) {
                    mm[p] = mod ? mod_gid_of(dp + 1, (int)e) : gid_of(dp + 1, (int)e);
                    int64_t row = row_of(k, d + 1, mm);
                    if (row >= 0) col.push(row, eps ? -c : c);
                }
            }
            eps ^= dp & 1;
        }
        col.normalize();
        mat.set_column(j, std::move(col));
    }
    return mat;
}

SparseRationalMatrix HochschildComplex::total_differential(int n) const {
    SparseRationalMatrix mat(total_dim(n + 1), total_dim(n));
    int64_t col0 = 0;
    for (int k = 0; k <= std::min(kmax_, -n); ++k) {
        const int d = n + k;
        const auto& src = block_basis(k, d);
        for (int64_t j = 0; j < (int64_t)src.size(); ++j) {
            SparseVec col;
            for (const auto& t : diff_of(k, d, src[j]))
                col.push(block_offset(t.block.k, n + 1) + t.row, t.coeff);
            col.normalize();
            mat.set_column(col0 + j, std::move(col));
        }
        col0 += (int64_t)src.size();
    }
    return mat;
}

void HochschildComplex::for_each_column(int n, const std::function<void(const SparseVec&)>& fn) const {
    // Target offsets first, so row indices are stable while streaming.
    std::vector<int64_t> toff(std::min(kmax_, -(n + 1)) + 2, 0);
    for (int k = 0; k <= std::min(kmax_, -(n + 1)); ++k) toff[k + 1] = toff[k] + block_dim(k, n + 1 + k);
    for (int k = 0; k <= std::min(kmax_, -n); ++k) {
        const int d = n + k;
        for_each_monomial(k, d, [&](const Monomial& m) {
            SparseVec col;
            for (const auto& t : diff_of(k, d, m)) col.push(toff[t.block.k] + t.row, t.coeff);
            col.normalize();
            fn(col);
        });
    }
}

// ---------------------------------------------------------------------------
// Chains

void Chain::add(const BlockKey& b, int64_t row, const Rational& c) { parts[b].push(row, c); }

void Chain::normalize() {
    for (auto it = parts.begin(); it != parts.end();) {
        it->second.normalize();
        it = it->second.empty() ? parts.erase(it) : std::next(it);
    }
}

bool Chain::is_zero() const {
    for (const auto& [b, v] : parts)
        if (!v.empty()) return false;
    return true;
}

bool Chain::operator==(const Chain& o) const {
    Chain d = hh::add(*this, scale(o, Rational(-1)));
    return d.is_zero();
}

Chain scale(Chain u, const Rational& c) {
    if (c == 0) return Chain{u.complex, {}};
    for (auto& [b, v] : u.parts) v.scale(c);
    return u;
}

Chain add(Chain u, const Chain& v) {
    if (u.complex != v.complex) throw std::invalid_argument("chain add: different complexes");
    for (const auto& [b, vec] : v.parts) u.parts[b].axpy(Rational(1), vec);
    u.normalize();
    return u;
}

Chain apply_differential(const Chain& u) {
    const HochschildComplex& C = *u.complex;
    Chain out{u.complex, {}};
    for (const auto& [b, vec] : u.parts) {
        const auto& basis = C.block_basis(b.k, b.d);
        for (const auto& [row, c] : vec.entries)
            for (const auto& t : C.diff_of(b.k, b.d, basis[row])) out.add(t.block, t.row, c * t.coeff);
    }
    out.normalize();
    return out;
}

Chain unit_chain(const HochschildComplex& c) {
    if (c.module()) throw std::invalid_argument("unit_chain: complex has module coefficients");
    Monomial m(c.positions(0), c.unit_gid());
    Chain out{&c, {}};
    int64_t row = c.row_of(0, 0, m);
    if (row >= 0) out.add({0, 0}, row, Rational(1));
    return out;
}

std::vector<std::pair<Monomial, Rational>> pointwise_multiply(const HochschildComplex& lhs_cx,
                                                              int k, const Monomial& lhs,
                                                              const HochschildComplex& rhs_cx,
                                                              const Monomial& rhs) {
    const int P = rhs_cx.positions(k);
    if ((int)lhs.size() != P || (int)rhs.size() != P)
        throw std::invalid_argument("pointwise_multiply: level size mismatch");
    if (lhs_cx.module()) throw std::invalid_argument("pointwise_multiply: left factor must be module-free");
    const GradedAlgebra& A = *rhs_cx.algebra();
    const int tms = rhs_cx.basepoint_slot(k);

    std::vector<int> ldeg(P), rdeg(P);
    for (int p = 0; p < P; ++p) {
        ldeg[p] = lhs_cx.gid_degree(lhs[p]);
        rdeg[p] = (p == tms) ? rhs_cx.mod_gid_degree(rhs[p]) : rhs_cx.gid_degree(rhs[p]);
    }
    // Interleaving: rhs factor at p moves left past lhs factors at q > p.
    int parity = 0;
    for (int p = 0; p < P; ++p)
        for (int q = p + 1; q < P; ++q)
            if (parity_of(rdeg[p], ldeg[q])) parity ^= 1;

    std::vector<std::vector<std::pair<int, Rational>>> choices(P);
    for (int p = 0; p < P; ++p) {
        if (p == tms) {
            const GradedModule& M = *rhs_cx.module();
            const SparseVec& av =
                M.action(ldeg[p], lhs_cx.gid_index(lhs[p]), rdeg[p], rhs_cx.mod_gid_index(rhs[p]));
            for (const auto& [e, c] : av.entries)
                choices[p].emplace_back(rhs_cx.mod_gid_of(ldeg[p] + rdeg[p], (int)e), c);
        } else {
            const SparseVec& pv =
                A.product(ldeg[p], lhs_cx.gid_index(lhs[p]), rdeg[p], rhs_cx.gid_index(rhs[p]));
            for (const auto& [e, c] : pv.entries)
                choices[p].emplace_back(rhs_cx.gid_of(ldeg[p] + rdeg[p], (int)e), c);
        }
        if (choices[p].empty()) return {};
    }

    std::vector<std::pair<Monomial, Rational>> out;
    Monomial tm(P, rhs_cx.unit_gid());
    std::function<void(int, Rational)> rec = [&](int p, Rational c) {
        if (p == P) {
            out.emplace_back(tm, c);
            return;
        }
        for (const auto& [g, gc] : choices[p]) {
            tm[p] = g;
            rec(p + 1, c * gc);
        }
    };
    rec(0, parity ? Rational(-1) : Rational(1));
    return out;
}

namespace {

// Position map of the composite degeneracy s_{w_r}...s_{w_1} (w ascending)
// from level k into level k + |w|.
std::vector<int> degeneracy_pos_map(const HochschildComplex& C, int k, const std::vector<int>& w) {
    const auto& refs = C.level_refs(k);
    std::vector<int> pm(refs.size());
    for (int p = 0; p < (int)refs.size(); ++p) {
        SimplexRef cur = refs[p];
        for (int j : w) cur = FiniteSimplicialSet::degenerate(cur, j);
        pm[p] = C.position_index(k + (int)w.size(), cur);
    }
    return pm;
}

void shuffles(int p, int q, const std::function<void(const std::vector<int>&, const std::vector<int>&, int)>& fn) {
    std::vector<int> mu, nu;
    std::function<void(int, int)> rec = [&](int next, int inv) {
        if ((int)mu.size() == p && (int)nu.size() == q) {
            fn(mu, nu, inv & 1 ? -1 : 1);
            return;
        }
        if ((int)mu.size() < p) {
            mu.push_back(next);
            rec(next + 1, inv);
            mu.pop_back();
        }
        if ((int)nu.size() < q) {
            nu.push_back(next);
            // every later mu element is an inversion against this nu element
            rec(next + 1, inv + (p - (int)mu.size()));
            nu.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

Chain shuffle_product(const Chain& u, const Chain& v) {
    if (u.complex != v.complex) throw std::invalid_argument("shuffle_product: different complexes");
    const HochschildComplex& C = *u.complex;
    if (C.module()) throw std::invalid_argument("shuffle_product: module coefficients unsupported");
    Chain out{u.complex, {}};
    for (const auto& [bu, uvec] : u.parts) {
        for (const auto& [bv, vvec] : v.parts) {
            const int p = bu.k, q = bv.k;
            if (p + q > C.max_level())
                throw std::out_of_range("shuffle_product: simplicial degree exceeds the window");
            const auto& ubasis = C.block_basis(p, bu.d);
            const auto& vbasis = C.block_basis(q, bv.d);
            BlockKey tb{p + q, bu.d + bv.d};
            // Internal degrees commute past the simplicial suspension of the
            // other factor: without this the product is not graded
            // commutative for the total degree d - k.
            const int cross = ((bu.d & 1) && (q & 1)) ? -1 : 1;
            shuffles(p, q, [&](const std::vector<int>& mu, const std::vector<int>& nu, int sgn) {
                auto upm = degeneracy_pos_map(C, p, nu);
                auto vpm = degeneracy_pos_map(C, q, mu);
                for (const auto& [urow, uc] : uvec.entries) {
                    auto upush = C.push_monomial(ubasis[urow], p, C, p + q, upm);
                    for (const auto& [vrow, vc] : vvec.entries) {
                        auto vpush = C.push_monomial(vbasis[vrow], q, C, p + q, vpm);
                        Rational base = uc * vc * Rational(sgn * cross);
                        for (const auto& [um, uco] : upush)
                            for (const auto& [vm, vco] : vpush)
                                for (const auto& [tm, tc] : pointwise_multiply(C, p + q, um, C, vm)) {
                                    int64_t row = C.row_of(tb.k, tb.d, tm);
                                    if (row >= 0) out.add(tb, row, base * uco * vco * tc);
                                }
                    }
                }
            });
        }
    }
    out.normalize();
    return out;
}

namespace {

std::vector<int> map_pos_map(const SimplicialMap& f, const HochschildComplex& src,
                             const HochschildComplex& tgt, int k) {
    const auto& refs = src.level_refs(k);
    std::vector<int> pm(refs.size());
    for (int p = 0; p < (int)refs.size(); ++p) pm[p] = tgt.position_index(k, f.apply(refs[p]));
    return pm;
}

}  // namespace

SparseRationalMatrix induced_map_matrix(const SimplicialMap& f, const HochschildComplex& src,
                                        const HochschildComplex& tgt, int n) {
    if (src.algebra() != tgt.algebra() || src.module() != tgt.module())
        throw std::invalid_argument("induced_map: complexes over different coefficients");
    SparseRationalMatrix mat(tgt.total_dim(n), src.total_dim(n));
    int64_t col0 = 0;
    for (int k = 0; k <= std::min(src.max_level(), -n); ++k) {
        const int d = n + k;
        auto pm = map_pos_map(f, src, tgt, k);
        const auto& basis = src.block_basis(k, d);
        for (int64_t j = 0; j < (int64_t)basis.size(); ++j) {
            SparseVec col;
            for (const auto& [tm, c] : src.push_monomial(basis[j], k, tgt, k, pm)) {
                int64_t row = tgt.row_of(k, d, tm);
                if (row >= 0) col.push(tgt.block_offset(k, n) + row, c);
            }
            col.normalize();
            mat.set_column(col0 + j, std::move(col));
        }
        col0 += (int64_t)basis.size();
    }
    return mat;
}

Chain induced_map_apply(const SimplicialMap& f, const HochschildComplex& src,
                        const HochschildComplex& tgt, const Chain& u) {
    Chain out{&tgt, {}};
    for (const auto& [b, vec] : u.parts) {
        auto pm = map_pos_map(f, src, tgt, b.k);
        const auto& basis = src.block_basis(b.k, b.d);
        for (const auto& [row, c] : vec.entries) {
            if (row < 0 || row >= (int64_t)basis.size())
                throw std::out_of_range("induced_map_apply: chain row outside its block");
        }
        for (const auto& [row, c] : vec.entries)
            for (const auto& [tm, tc] : src.push_monomial(basis[row], b.k, tgt, b.k, pm)) {
                int64_t trow = tgt.row_of(b.k, b.d, tm);
                if (trow >= 0) out.add(b, trow, c * tc);
            }
    }
    out.normalize();
    return out;
}

PushoutComparison pushout_comparison(const SimplicialMap& f, const SimplicialMap& g,
                                     const PushoutResult& po, AlgebraPtr algebra, int d_min,
                                     int k_max) {
    if (f.source != g.source) throw std::invalid_argument("pushout_comparison: different sources");
    PushoutComparison out;
    out.injectivity_hypothesis =
        f.is_levelwise_injective(k_max) || g.is_levelwise_injective(k_max);
    out.domain_dims.assign(k_max + 1, 0);
    out.target_dims.assign(k_max + 1, 0);
    out.image_ranks.assign(k_max + 1, 0);
    out.iso = true;

    HochschildComplex::Options o;
    o.n_min = 1 - k_max;
    HochschildComplex CZ(f.source, algebra, o), CX(f.target, algebra, o), CY(g.target, algebra, o),
        CW(po.space, algebra, o);

    for (int k = 0; k <= k_max; ++k) {
        auto fpm = map_pos_map(f, CZ, CX, k);
        auto gpm = map_pos_map(g, CZ, CY, k);
        auto xpm = map_pos_map(po.from_x, CX, CW, k);
        auto ypm = map_pos_map(po.from_y, CY, CW, k);
        const Monomial zunit(CZ.positions(k), CZ.unit_gid());

        for (int d = d_min; d <= 0; ++d) {
            // Ambient = sum over dx of X(k,dx) tensor Y(k,d-dx).
            std::vector<int64_t> off;
            int64_t ambient = 0;
            for (int dx = 0; dx >= d; --dx) {
                off.push_back(ambient);
                ambient += CX.block_dim(k, dx) * CY.block_dim(k, d - dx);
            }
            const int64_t wdim = CW.block_dim(k, d);
            out.target_dims[k] += wdim;
            if (ambient == 0) {
                if (wdim != 0) out.iso = false;
                continue;
            }
            auto idx = [&](int dx, int64_t a, int64_t b) {
                return off[-dx] + a * CY.block_dim(k, d - dx) + b;
            };

            // The comparison map a (x) b -> from_x(a) . from_y(b), per column.
            std::vector<SparseVec> phi((size_t)ambient);
            RankAccumulator phi_rank(wdim);
            for (int dx = 0; dx >= d; --dx) {
                const int dy = d - dx;
                const auto& xb = CX.block_basis(k, dx);
                const auto& yb = CY.block_basis(k, dy);
                for (int64_t a = 0; a < (int64_t)xb.size(); ++a) {
                    auto apush = CX.push_monomial(xb[a], k, CW, k, xpm);
                    for (int64_t b = 0; b < (int64_t)yb.size(); ++b) {
                        SparseVec col;
                        for (const auto& [am, ac] : apush)
                            for (const auto& [bm, bc] : CY.push_monomial(yb[b], k, CW, k, ypm))
                                for (const auto& [wm, wc] : pointwise_multiply(CW, k, am, CW, bm)) {
                                    int64_t row = CW.row_of(k, d, wm);
                                    if (row >= 0) col.push(row, ac * bc * wc);
                                }
                        col.normalize();
                        phi_rank.add_column(col);
                        phi[idx(dx, a, b)] = std::move(col);
                    }
                }
            }

            // Relations (f(z).a) (x) b - a (x) (g(z).b) over basis z, a, b.
            RankAccumulator rel_rank(ambient);
            bool rel_zero = true;
            for (int dz = 0; dz >= d; --dz) {
                const auto& zb = CZ.block_basis(k, dz);
                for (const auto& z : zb) {
                    if (z == zunit) continue;
                    auto fz = CZ.push_monomial(z, k, CX, k, fpm);
                    auto gz = CZ.push_monomial(z, k, CY, k, gpm);
                    for (int da = 0; da >= d - dz; --da) {
                        const int db = d - dz - da;
                        const auto& xb = CX.block_basis(k, da);
                        const auto& yb = CY.block_basis(k, db);
                        // (a.z) (x) b - a (x) (z.b) with a.z = (-1)^{|a||z|} z.a
                        const Rational mid = (dz & 1) && (da & 1) ? Rational(1) : Rational(-1);
                        for (int64_t a = 0; a < (int64_t)xb.size(); ++a) {
                            for (int64_t b = 0; b < (int64_t)yb.size(); ++b) {
                                SparseVec rel;
                                for (const auto& [zm, zc] : fz)
                                    for (const auto& [xm, xc] :
                                         pointwise_multiply(CX, k, zm, CX, xb[a])) {
                                        int64_t row = CX.row_of(k, dz + da, xm);
                                        if (row >= 0) rel.push(idx(dz + da, row, b), zc * xc);
                                    }
                                for (const auto& [zm, zc] : gz)
                                    for (const auto& [ym, yc] :
                                         pointwise_multiply(CY, k, zm, CY, yb[b])) {
                                        int64_t row = CY.row_of(k, dz + db, ym);
                                        if (row >= 0)
                                            rel.push(idx(da, a, row), mid * zc * yc);
                                    }
                                rel.normalize();
                                if (rel.empty()) continue;
                                if (rel_zero) {
                                    SparseVec im;
                                    for (const auto& [col, c] : rel.entries) im.axpy(c, phi[col]);
                                    im.normalize();
                                    if (!im.empty()) rel_zero = false;
                                }
                                rel_rank.add_column(rel);
                            }
                        }
                    }
                }
            }

            const int64_t quotient = ambient - rel_rank.rank();
            const int64_t prank = phi_rank.rank();
            out.domain_dims[k] += quotient;
            out.image_ranks[k] += prank;
            if (!(rel_zero && prank == quotient && prank == wdim)) out.iso = false;
        }
    }
    return out;
}

}  // namespace hh
