#include "hh/cdga.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hh {

const SparseVec GradedAlgebra::kZero{};
const SparseVec GradedModule::kZero{};

namespace {

int slot(int degree) { return -degree; }

}  // namespace

int GradedAlgebra::dim_of_degree(int d) const {
    if (d > 0 || slot(d) >= (int)names_.size()) return 0;
    return (int)names_[slot(d)].size();
}

const std::string& GradedAlgebra::basis_name(int d, int i) const { return names_[slot(d)][i]; }

std::vector<std::string> GradedAlgebra::basis_of_degree(int d) const {
    if (d > 0 || slot(d) >= (int)names_.size()) return {};
    return names_[slot(d)];
}

const SparseVec& GradedAlgebra::product(int d1, int i, int d2, int j) const {
    if (d1 + d2 < min_degree_)
        throw std::out_of_range("product degree below the materialized floor of " + name_);
    auto it = prod_.find({d1, i, d2, j});
    return it == prod_.end() ? kZero : it->second;
}

const SparseVec& GradedAlgebra::differential(int deg, int i) const {
    if (slot(deg) >= (int)diff_.size() || i >= (int)diff_[slot(deg)].size()) return kZero;
    return diff_[slot(deg)][i];
}

SparseVec& GradedAlgebra::prod_slot(int d1, int i, int d2, int j) {
    return prod_[{d1, i, d2, j}];
}

AlgebraPtr GradedAlgebra::table(std::string name, std::vector<BasisElement> basis,
                                const std::string& unit_name,
                                const std::vector<std::tuple<int, int, int, Rational>>& product,
                                const std::vector<std::tuple<int, int, Rational>>& differential,
                                int min_degree) {
    auto A = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
    A->name_ = std::move(name);
    A->min_degree_ = min_degree;
    // Global index -> (degree, per-degree index).
    std::vector<std::pair<int, int>> pos;
    for (const auto& b : basis) {
        if (b.degree > 0) throw std::invalid_argument("basis degree > 0 in " + A->name_);
        if (slot(b.degree) >= (int)A->names_.size()) A->names_.resize(slot(b.degree) + 1);
        pos.emplace_back(b.degree, (int)A->names_[slot(b.degree)].size());
        A->names_[slot(b.degree)].push_back(b.name);
    }
    A->diff_.resize(A->names_.size());
    for (size_t s = 0; s < A->names_.size(); ++s) A->diff_[s].resize(A->names_[s].size());
    for (size_t g = 0; g < basis.size(); ++g)
        if (basis[g].name == unit_name && basis[g].degree == 0) A->unit_ = pos[g].second;
    if (A->unit_ < 0) throw std::invalid_argument("unit basis element not found in " + A->name_);
    for (const auto& [i, j, k, c] : product) {
        if (pos[i].first + pos[j].first != pos[k].first)
            throw std::invalid_argument("structure constant degree mismatch in " + A->name_);
        A->prod_slot(pos[i].first, pos[i].second, pos[j].first, pos[j].second)
            .push(pos[k].second, c);
    }
    for (auto& [key, v] : A->prod_) v.normalize();
    for (const auto& [i, j, c] : differential) {
        if (pos[j].first != pos[i].first + 1)
            throw std::invalid_argument("differential degree mismatch in " + A->name_);
        A->diff_[slot(pos[i].first)][pos[i].second].push(pos[j].second, c);
    }
    for (auto& per : A->diff_)
        for (auto& v : per) v.normalize();
    A->validate();
    return A;
}

// ---------------------------------------------------------------------------
// Free graded-commutative backend

namespace {

struct FreeData {
    std::vector<int> degrees;                           // generator degrees, < 0
    std::vector<std::string> gnames;
    std::vector<std::vector<std::vector<int>>> monos;   // monos[-d] = exponent vectors
    std::vector<std::map<std::vector<int>, int>> index; // per degree
};

bool gen_odd(const FreeData& fd, int g) { return fd.degrees[g] & 1; }

// Sign and exponents of m1 * m2 in normal order; nullopt when an odd
// generator squares to zero.
std::optional<std::pair<int, std::vector<int>>> mono_mul(const FreeData& fd,
                                                         const std::vector<int>& e1,
                                                         const std::vector<int>& e2) {
    // Each odd-parity block of e2 at index j moves left past the odd blocks
    // of e1 at indices > j.
    int n = (int)e1.size();
    std::vector<int> out(n);
    int sign = 1, odd_above = 0;
    for (int j = n - 1; j >= 0; --j) {
        if (gen_odd(fd, j) && e1[j] + e2[j] > 1) return std::nullopt;
        out[j] = e1[j] + e2[j];
        if ((e2[j] * fd.degrees[j]) & 1 && (odd_above & 1)) sign = -sign;
        if ((e1[j] * fd.degrees[j]) & 1) ++odd_above;
    }
    return std::make_pair(sign, out);
}

int mono_degree(const FreeData& fd, const std::vector<int>& e) {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * fd.degrees[i];
    return d;
}

std::string mono_name(const FreeData& fd, const std::vector<int>& e) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (any) os << "*";
        os << fd.gnames[i];
        if (e[i] > 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : "1";
}

void enumerate_monos(FreeData& fd, int floor) {
    fd.monos.resize(slot(floor) + 1);
    fd.index.resize(slot(floor) + 1);
    std::vector<int> e(fd.degrees.size(), 0);
    std::function<void(int, int)> dfs = [&](int g, int deg) {
        if (g == (int)fd.degrees.size()) {
            fd.monos[slot(deg)].push_back(e);
            return;
        }
        int emax = gen_odd(fd, g) ? 1 : (deg - floor) / (-fd.degrees[g]);
        for (int v = 0; v <= emax; ++v) {
            e[g] = v;
            dfs(g + 1, deg + v * fd.degrees[g]);
        }
        e[g] = 0;
    };
    dfs(0, 0);
    for (auto& per : fd.monos) std::sort(per.begin(), per.end());
    for (size_t s = 0; s < fd.monos.size(); ++s)
        for (size_t i = 0; i < fd.monos[s].size(); ++i) fd.index[s][fd.monos[s][i]] = (int)i;
}

}  // namespace

AlgebraPtr GradedAlgebra::free_graded(std::string name, std::vector<FreeGenerator> generators,
                                      const std::map<int, std::vector<Monomial>>& d_on_generators,
                                      int min_degree) {
    FreeData fd;
    for (const auto& g : generators) {
        if (g.degree >= 0)
            throw std::invalid_argument("free generators must have strictly negative degree");
        fd.degrees.push_back(g.degree);
        fd.gnames.push_back(g.name);
    }
    enumerate_monos(fd, min_degree);

    auto A = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
    A->name_ = std::move(name);
    A->min_degree_ = min_degree;
    A->names_.resize(fd.monos.size());
    for (size_t s = 0; s < fd.monos.size(); ++s)
        for (const auto& e : fd.monos[s]) A->names_[s].push_back(mono_name(fd, e));
    A->unit_ = fd.index[0].at(std::vector<int>(fd.degrees.size(), 0));

    for (int d1 = 0; d1 >= min_degree; --d1) {
        for (int d2 = 0; d1 + d2 >= min_degree; --d2) {
            for (size_t i = 0; i < fd.monos[slot(d1)].size(); ++i) {
                for (size_t j = 0; j < fd.monos[slot(d2)].size(); ++j) {
                    auto r = mono_mul(fd, fd.monos[slot(d1)][i], fd.monos[slot(d2)][j]);
                    if (!r) continue;
                    A->prod_slot(d1, (int)i, d2, (int)j)
                        .push(fd.index[slot(d1 + d2)].at(r->second), rat(r->first));
                }
            }
        }
    }

    // Differential on generators, normalized to exponent-vector form.
    std::vector<std::vector<std::pair<Rational, std::vector<int>>>> dgen(fd.degrees.size());
    for (const auto& [g, monoms] : d_on_generators) {
        for (const auto& m : monoms) {
            std::vector<int> e(fd.degrees.size(), 0);
            int sign = 1;
            // Fold the factor list left to right through mono_mul to pick up
            // the sorting sign; drop squares of odd generators.
            bool zero = false;
            for (int f : m.factors) {
                std::vector<int> ef(fd.degrees.size(), 0);
                ef[f] = 1;
                auto r = mono_mul(fd, e, ef);
                if (!r) {
                    zero = true;
                    break;
                }
                sign *= r->first;
                e = r->second;
            }
            if (zero) continue;
            if (mono_degree(fd, e) != fd.degrees[g] + 1)
                throw std::invalid_argument("d(generator) has wrong degree");
            dgen[g].emplace_back(m.coeff * rat(sign), e);
        }
    }

    // Extend by the Leibniz rule: differentiate each factor of the expanded
    // word, multiplying prefix * d(gen) * suffix in exponent form.
    A->diff_.resize(A->names_.size());
    for (int d = 0; d >= min_degree; --d) {
        A->diff_[slot(d)].resize(fd.monos[slot(d)].size());
        if (d + 1 > 0) continue;
        for (size_t i = 0; i < fd.monos[slot(d)].size(); ++i) {
            const auto& e = fd.monos[slot(d)][i];
            SparseVec& out = A->diff_[slot(d)][i];
            int prefix_parity = 0;
            for (int g = 0; g < (int)fd.degrees.size(); ++g) {
                for (int rep = 0; rep < e[g]; ++rep) {
                    // prefix: g^rep together with all earlier generators.
                    std::vector<int> pre(fd.degrees.size(), 0), suf(fd.degrees.size(), 0);
                    for (int h = 0; h < g; ++h) pre[h] = e[h];
                    pre[g] = rep;
                    suf[g] = e[g] - rep - 1;
                    for (int h = g + 1; h < (int)fd.degrees.size(); ++h) suf[h] = e[h];
                    int psign = (prefix_parity + rep * fd.degrees[g]) & 1 ? -1 : 1;
                    for (const auto& [c, de] : dgen[g]) {
                        auto r1 = mono_mul(fd, pre, de);
                        if (!r1) continue;
                        auto r2 = mono_mul(fd, r1->second, suf);
                        if (!r2) continue;
                        out.push(fd.index[slot(d + 1)].at(r2->second),
                                 c * rat(psign * r1->first * r2->first));
                    }
                }
                prefix_parity = (prefix_parity + e[g] * fd.degrees[g]) & 1;
            }
            out.normalize();
        }
    }
    A->validate();
    return A;
}

void GradedAlgebra::validate() const {
    auto dim = [&](int d) { return dim_of_degree(d); };
    int lo = std::max(min_degree_, -(int)names_.size() + 1);
    // Unit and graded commutativity.
    for (int d = 0; d >= lo; --d) {
        for (int i = 0; i < dim(d); ++i) {
            SparseVec want{{{(index_t)i, rat(1)}}};
            if (!(product(0, unit_, d, i) == want) || !(product(d, i, 0, unit_) == want))
                throw std::logic_error(name_ + ": unit law fails on " + basis_name(d, i));
        }
    }
    for (int d1 = 0; d1 >= lo; --d1)
        for (int d2 = d1; d1 + d2 >= lo && d2 <= 0; --d2)
            for (int i = 0; i < dim(d1); ++i)
                for (int j = 0; j < dim(d2); ++j) {
                    SparseVec ab = product(d1, i, d2, j);
                    SparseVec ba = product(d2, j, d1, i);
                    if ((d1 & 1) && (d2 & 1)) ba.scale(rat(-1));
                    if (!(ab == ba))
                        throw std::logic_error(name_ + ": graded commutativity fails on " +
                                               basis_name(d1, i) + ", " + basis_name(d2, j));
                }
    // Associativity.
    for (int d1 = 0; d1 >= lo; --d1)
        for (int d2 = 0; d1 + d2 >= lo; --d2)
            for (int d3 = 0; d1 + d2 + d3 >= lo; --d3)
                for (int i = 0; i < dim(d1); ++i)
                    for (int j = 0; j < dim(d2); ++j)
                        for (int k = 0; k < dim(d3); ++k) {
                            SparseVec lhs, rhs;
                            for (const auto& [t, c] : product(d1, i, d2, j).entries)
                                lhs.axpy(c, product(d1 + d2, (int)t, d3, k));
                            for (const auto& [t, c] : product(d2, j, d3, k).entries)
                                rhs.axpy(c, product(d1, i, d2 + d3, (int)t));
                            if (!(lhs == rhs))
                                throw std::logic_error(name_ + ": associativity fails");
                        }
    // Differential: degree +1, d^2 = 0, Leibniz.
    for (int d = 0; d >= lo; --d)
        for (int i = 0; i < dim(d); ++i) {
            SparseVec dd;
            for (const auto& [t, c] : differential(d, i).entries)
                dd.axpy(c, differential(d + 1, (int)t));
            if (!dd.entries.empty()) throw std::logic_error(name_ + ": d^2 != 0");
        }
    for (int d1 = 0; d1 >= lo; --d1)
        for (int d2 = 0; d1 + d2 >= lo; --d2)
            for (int i = 0; i < dim(d1); ++i)
                for (int j = 0; j < dim(d2); ++j) {
                    SparseVec lhs;
                    for (const auto& [t, c] : product(d1, i, d2, j).entries)
                        lhs.axpy(c, differential(d1 + d2, (int)t));
                    SparseVec rhs;
                    for (const auto& [t, c] : differential(d1, i).entries)
                        rhs.axpy(c, product(d1 + 1, (int)t, d2, j));
                    for (const auto& [t, c] : differential(d2, j).entries)
                        rhs.axpy((d1 & 1) ? -c : c, product(d1, i, d2 + 1, (int)t));
                    if (!(lhs == rhs))
                        throw std::logic_error(name_ + ": Leibniz fails on " + basis_name(d1, i) +
                                               ", " + basis_name(d2, j));
                }
}

AlgebraPtr GradedAlgebra::builtin(const std::string& name, int min_degree) {
    if (name == "rationals" || name == "Q")
        return table("Q", {{"1", 0}}, "1", {{0, 0, 0, rat(1)}}, {});
    if (name == "dual_numbers")
        return table("dual_numbers", {{"1", 0}, {"eps", 0}}, "1",
                     {{0, 0, 0, rat(1)}, {0, 1, 1, rat(1)}, {1, 0, 1, rat(1)}}, {});
    if (name == "koszul")
        return free_graded("koszul", {{"x", -1}, {"y", -2}}, {{1, {{rat(1), {0}}}}}, min_degree);
    if (name.rfind("exterior", 0) == 0) {
        int k = std::stoi(name.substr(8));
        if (!(k & 1)) throw std::invalid_argument("exterior generator degree must be odd");
        return free_graded(name, {{"x", -k}}, {}, min_degree);
    }
    if (name.rfind("poly", 0) == 0) {
        int k = std::stoi(name.substr(4));
        if (k & 1) throw std::invalid_argument("poly generator degree must be even");
        return free_graded(name, {{"y", -k}}, {}, min_degree);
    }
    throw std::invalid_argument("unknown builtin algebra: " + name);
}

AlgebraPtr tensor_algebra(AlgebraPtr ap, AlgebraPtr bp) {
    const auto& A = *ap;
    const auto& B = *bp;
    int floor = std::max(A.min_degree(), B.min_degree());
    std::vector<GradedAlgebra::BasisElement> basis;
    // Global index bookkeeping: degree-major, A-degree descending inside.
    std::map<std::tuple<int, int, int, int>, int> id;  // (da, db, i, j) -> global
    std::vector<std::tuple<int, int, int, int>> rev;
    std::string unit_name;
    auto deep = [](const GradedAlgebra& X) {
        int deepest = 0;
        for (int d = 0; d >= std::max(X.min_degree(), -64); --d)
            if (X.dim_of_degree(d) > 0) deepest = d;
        return deepest;
    };
    int lo = std::max(floor, deep(A) + deep(B));
    for (int d = 0; d >= lo; --d) {
        for (int da = 0; da >= d; --da) {
            int db = d - da;
            for (int i = 0; i < A.dim_of_degree(da); ++i)
                for (int j = 0; j < B.dim_of_degree(db); ++j) {
                    std::string nm = "(" + A.basis_name(da, i) + "," + B.basis_name(db, j) + ")";
                    id[{da, db, i, j}] = (int)basis.size();
                    rev.push_back({da, db, i, j});
                    basis.push_back({nm, d});
                    if (da == 0 && db == 0 && i == A.unit_index() && j == B.unit_index())
                        unit_name = nm;
                }
        }
    }
    std::vector<std::tuple<int, int, int, Rational>> prod;
    std::vector<std::tuple<int, int, Rational>> diff;
    for (size_t g1 = 0; g1 < basis.size(); ++g1) {
        auto [da, db, i, j] = rev[g1];
        // differential: d(a) tensor b + (-1)^{|a|} a tensor d(b)
        for (const auto& [t, c] : A.differential(da, i).entries)
            diff.emplace_back((int)g1, id.at({da + 1, db, (int)t, j}), c);
        for (const auto& [t, c] : B.differential(db, j).entries)
            diff.emplace_back((int)g1, id.at({da, db + 1, i, (int)t}), (da & 1) ? -c : c);
        for (size_t g2 = 0; g2 < basis.size(); ++g2) {
            auto [dc, dd, k, l] = rev[g2];
            if (basis[g1].degree + basis[g2].degree < lo) continue;
            int sign = ((db & 1) && (dc & 1)) ? -1 : 1;
            for (const auto& [t1, c1] : A.product(da, i, dc, k).entries)
                for (const auto& [t2, c2] : B.product(db, j, dd, l).entries)
                    prod.emplace_back((int)g1, (int)g2,
                                      id.at({da + dc, db + dd, (int)t1, (int)t2}), c1 * c2 * rat(sign));
        }
    }
    return GradedAlgebra::table("(" + A.name() + ")x(" + B.name() + ")", std::move(basis),
                                unit_name, prod, diff, floor);
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra != b.algebra) throw std::invalid_argument("elements of different algebras");
    AlgebraElement out{a.algebra, a.degree + b.degree, {}};
    for (const auto& [i, ci] : a.coeffs.entries)
        for (const auto& [j, cj] : b.coeffs.entries)
            out.coeffs.axpy(ci * cj, a.algebra->product(a.degree, (int)i, b.degree, (int)j));
    return out;
}

AlgebraElement differential(const AlgebraElement& a) {
    AlgebraElement out{a.algebra, a.degree + 1, {}};
    for (const auto& [i, ci] : a.coeffs.entries)
        out.coeffs.axpy(ci, a.algebra->differential(a.degree, (int)i));
    return out;
}

// ---------------------------------------------------------------------------
// Modules

int GradedModule::dim_of_degree(int d) const {
    if (d > 0 || slot(d) >= (int)names_.size()) return 0;
    return (int)names_[slot(d)].size();
}

const std::string& GradedModule::basis_name(int d, int i) const { return names_[slot(d)][i]; }

const SparseVec& GradedModule::action(int da, int i, int dm, int j) const {
    if (da + dm < min_degree_) throw std::out_of_range("module action below floor");
    auto it = act_.find({da, i, dm, j});
    return it == act_.end() ? kZero : it->second;
}

const SparseVec& GradedModule::differential(int deg, int i) const {
    if (slot(deg) >= (int)diff_.size() || i >= (int)diff_[slot(deg)].size()) return kZero;
    return diff_[slot(deg)][i];
}

ModulePtr GradedModule::regular(AlgebraPtr a) {
    auto M = std::shared_ptr<GradedModule>(new GradedModule());
    M->name_ = a->name();
    M->algebra_ = a;
    M->min_degree_ = a->min_degree();
    int lo = std::max(a->min_degree(), -64);
    for (int d = 0; d >= lo; --d) {
        M->names_.push_back(a->basis_of_degree(d));
        M->diff_.emplace_back();
        for (int i = 0; i < a->dim_of_degree(d); ++i)
            M->diff_.back().push_back(a->differential(d, i));
    }
    for (int da = 0; da >= -(int)M->names_.size(); --da)
        for (int dm = 0; da + dm > -(int)M->names_.size(); --dm)
            for (int i = 0; i < a->dim_of_degree(da); ++i)
                for (int j = 0; j < a->dim_of_degree(dm); ++j) {
                    const SparseVec& v = a->product(da, i, dm, j);
                    if (!v.entries.empty()) M->act_[{da, i, dm, j}] = v;
                }
    M->validate();
    return M;
}

ModulePtr GradedModule::augmentation(AlgebraPtr a) {
    auto M = std::shared_ptr<GradedModule>(new GradedModule());
    M->name_ = "Q_aug";
    M->algebra_ = a;
    M->min_degree_ = a->min_degree();
    M->names_ = {{"1"}};
    M->diff_ = {{SparseVec{}}};
    M->act_[{0, a->unit_index(), 0, 0}] = SparseVec{{{0, rat(1)}}};
    M->validate();
    return M;
}

ModulePtr GradedModule::table(AlgebraPtr a, std::string name,
                              std::vector<GradedAlgebra::BasisElement> basis,
                              const std::vector<std::tuple<int, int, int, Rational>>& action,
                              const std::vector<std::tuple<int, int, Rational>>& differential) {
    auto M = std::shared_ptr<GradedModule>(new GradedModule());
    M->name_ = std::move(name);
    M->algebra_ = a;
    M->min_degree_ = a->min_degree();
    std::vector<std::pair<int, int>> pos;
    for (const auto& b : basis) {
        if (b.degree > 0) throw std::invalid_argument("module basis degree > 0");
        if (slot(b.degree) >= (int)M->names_.size()) M->names_.resize(slot(b.degree) + 1);
        pos.emplace_back(b.degree, (int)M->names_[slot(b.degree)].size());
        M->names_[slot(b.degree)].push_back(b.name);
    }
    M->diff_.resize(M->names_.size());
    for (size_t s = 0; s < M->names_.size(); ++s) M->diff_[s].resize(M->names_[s].size());
    // action triplets: (algebra global index, module index, module index, c).
    std::vector<std::pair<int, int>> apos;
    for (int d = 0; d >= a->min_degree() && slot(d) < 64; --d)
        for (int i = 0; i < a->dim_of_degree(d); ++i) apos.emplace_back(d, i);
    for (const auto& [ai, mj, mk, c] : action)
        M->act_[{apos[ai].first, apos[ai].second, pos[mj].first, pos[mj].second}].push(
            pos[mk].second, c);
    for (auto& [k, v] : M->act_) v.normalize();
    for (const auto& [i, j, c] : differential)
        M->diff_[slot(pos[i].first)][pos[i].second].push(pos[j].second, c);
    for (auto& per : M->diff_)
        for (auto& v : per) v.normalize();
    M->validate();
    return M;
}

void GradedModule::validate() const {
    const auto& A = *algebra_;
    int lo = -(int)names_.size() + 1;
    int alo = std::max(A.min_degree(), -64);
    // Unit acts as the identity.
    for (int d = 0; d >= lo; --d)
        for (int j = 0; j < dim_of_degree(d); ++j) {
            SparseVec want{{{(index_t)j, rat(1)}}};
            if (!(action(0, A.unit_index(), d, j) == want))
                throw std::logic_error(name_ + ": unit does not act as identity");
        }
    // Associativity a(bm) = (ab)m when all degrees in range.
    for (int d1 = 0; d1 >= alo; --d1)
        for (int d2 = 0; d1 + d2 >= alo; --d2)
            for (int dm = 0; d1 + d2 + dm >= lo && -dm < (int)names_.size(); --dm)
                for (int i = 0; i < A.dim_of_degree(d1); ++i)
                    for (int j = 0; j < A.dim_of_degree(d2); ++j)
                        for (int m = 0; m < dim_of_degree(dm); ++m) {
                            SparseVec lhs, rhs;
                            for (const auto& [t, c] : action(d2, j, dm, m).entries)
                                lhs.axpy(c, action(d1, i, d2 + dm, (int)t));
                            for (const auto& [t, c] : A.product(d1, i, d2, j).entries)
                                rhs.axpy(c, action(d1 + d2, (int)t, dm, m));
                            if (!(lhs == rhs))
                                throw std::logic_error(name_ + ": action associativity fails");
                        }
    // Leibniz and d^2 = 0.
    for (int d = 0; d >= lo; --d)
        for (int j = 0; j < dim_of_degree(d); ++j) {
            SparseVec dd;
            for (const auto& [t, c] : differential(d, j).entries)
                dd.axpy(c, differential(d + 1, (int)t));
            if (!dd.entries.empty()) throw std::logic_error(name_ + ": module d^2 != 0");
        }
    for (int d1 = 0; d1 >= alo; --d1)
        for (int dm = 0; d1 + dm >= lo; --dm)
            for (int i = 0; i < A.dim_of_degree(d1); ++i)
                for (int m = 0; m < dim_of_degree(dm); ++m) {
                    SparseVec lhs;
                    for (const auto& [t, c] : action(d1, i, dm, m).entries)
                        lhs.axpy(c, differential(d1 + dm, (int)t));
                    SparseVec rhs;
                    for (const auto& [t, c] : A.differential(d1, i).entries)
                        rhs.axpy(c, action(d1 + 1, (int)t, dm, m));
                    for (const auto& [t, c] : differential(dm, m).entries)
                        rhs.axpy((d1 & 1) ? -c : c, action(d1, i, dm + 1, (int)t));
                    if (!(lhs == rhs))
                        throw std::logic_error(name_ + ": module Leibniz fails");
                }
}

}  // namespace hh
