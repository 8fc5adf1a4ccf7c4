#include "hh/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hh {

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Increasing degeneracy word -> monotone surjection values sigma[0..k].
std::vector<int> word_to_surjection(int k, const std::vector<int>& word) {
    std::vector<int> sigma(k + 1);
    size_t w = 0;
    sigma[0] = 0;
    for (int i = 1; i <= k; ++i) {
        bool repeat = w < word.size() && word[w] == i - 1;
        sigma[i] = sigma[i - 1] + (repeat ? 0 : 1);
        if (repeat) ++w;
    }
    return sigma;
}

}  // namespace

FiniteSimplicialSet::FiniteSimplicialSet(std::vector<Generator> generators,
                                         std::vector<std::vector<SimplexRef>> faces,
                                         std::optional<gen_t> basepoint)
    : gens_(std::move(generators)), faces_(std::move(faces)), basepoint_(basepoint) {
    if (faces_.size() != gens_.size()) throw std::invalid_argument("faces/generators size mismatch");
    for (size_t g = 0; g < gens_.size(); ++g) {
        max_dim_ = std::max(max_dim_, gens_[g].dim);
        int expected = gens_[g].dim == 0 ? 0 : gens_[g].dim + 1;
        if ((int)faces_[g].size() != expected)
            throw std::invalid_argument("generator " + gens_[g].name + " has wrong face count");
        for (const auto& f : faces_[g]) {
            if (f.gen < 0 || f.gen >= (gen_t)gens_.size() || dim(f) != gens_[g].dim - 1)
                throw std::invalid_argument("face of " + gens_[g].name + " has wrong dimension");
        }
    }
    if (basepoint_ && gens_[*basepoint_].dim != 0)
        throw std::invalid_argument("basepoint must be a 0-generator");
}

gen_t FiniteSimplicialSet::generator_by_name(const std::string& name) const {
    for (size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name) return (gen_t)g;
    throw std::out_of_range("no generator named " + name);
}

std::string FiniteSimplicialSet::name(const SimplexRef& s) const {
    if (s.word.empty()) return gens_[s.gen].name;
    std::ostringstream os;
    os << "s[";
    for (size_t i = 0; i < s.word.size(); ++i) os << (i ? "," : "") << s.word[i];
    os << "]" << gens_[s.gen].name;
    return os.str();
}

SimplexRef FiniteSimplicialSet::degenerate(const SimplexRef& s, int j) {
    // s_j s_m = s_{m+1} s_j for j <= m: entries >= j shift up, then insert j.
    SimplexRef out;
    out.gen = s.gen;
    out.word.reserve(s.word.size() + 1);
    bool inserted = false;
    for (int m : s.word) {
        if (!inserted && j <= m) {
            out.word.push_back(j);
            inserted = true;
        }
        out.word.push_back(m >= j ? m + 1 : m);
    }
    if (!inserted) out.word.push_back(j);
    return out;
}

SimplexRef FiniteSimplicialSet::face(const SimplexRef& s, int i) const {
    int d = dim(s);
    if (d < 1 || i < 0 || i > d) throw std::out_of_range("face index out of range");
    if (s.word.empty()) return faces_[s.gen][i];
    // The outermost degeneracy is the largest word entry.
    SimplexRef inner{s.gen, {s.word.begin(), s.word.end() - 1}};
    int j = s.word.back();
    if (i == j || i == j + 1) return inner;
    if (i < j) return degenerate(face(inner, i), j - 1);
    return degenerate(face(inner, i - 1), j);
}

std::vector<SimplexRef> FiniteSimplicialSet::level(int k) const {
    std::vector<SimplexRef> out;
    for (gen_t g = 0; g < (gen_t)gens_.size(); ++g) {
        int d = gens_[g].dim;
        if (d > k) continue;
        int l = k - d;
        // All strictly increasing length-l words in {0..k-1}, lexicographic.
        std::vector<int> w(l);
        std::iota(w.begin(), w.end(), 0);
        while (true) {
            out.push_back(SimplexRef{g, w});
            if (l == 0) break;
            int i = l - 1;
            while (i >= 0 && w[i] == k - l + i) --i;
            if (i < 0) break;
            ++w[i];
            for (int t = i + 1; t < l; ++t) w[t] = w[t - 1] + 1;
        }
    }
    return out;
}

long FiniteSimplicialSet::level_count(int k) const {
    long n = 0;
    for (const auto& g : gens_) n += binomial(k, k - g.dim);
    return n;
}

SimplexRef FiniteSimplicialSet::basepoint_at(int k) const {
    if (!basepoint_) throw std::logic_error("space is not pointed");
    std::vector<int> w(k);
    std::iota(w.begin(), w.end(), 0);
    return SimplexRef{*basepoint_, std::move(w)};
}

void FiniteSimplicialSet::validate() const {
    int top = 2 * max_dim_;
    for (int k = 2; k <= top; ++k) {
        for (const auto& s : level(k)) {
            for (int j = 1; j <= k; ++j) {
                for (int i = 0; i < j; ++i) {
                    if (!(face(face(s, j), i) == face(face(s, i), j - 1)))
                        throw std::logic_error("simplicial identity d_i d_j failed at " + name(s));
                }
            }
        }
    }
}

SimplexRef SimplicialMap::apply(const SimplexRef& s) const {
    SimplexRef out = generator_images[s.gen];
    for (int j : s.word) out = FiniteSimplicialSet::degenerate(out, j);
    return out;
}

void SimplicialMap::validate() const {
    if ((int)generator_images.size() != source->generator_count())
        throw std::logic_error("simplicial map: generator image count mismatch");
    for (gen_t g = 0; g < source->generator_count(); ++g) {
        if (target->dim(generator_images[g]) != source->generator(g).dim)
            throw std::logic_error("simplicial map: image dimension mismatch");
        int d = source->generator(g).dim;
        for (int i = 0; i <= d && d > 0; ++i) {
            SimplexRef lhs = target->face(generator_images[g], i);
            SimplexRef rhs = apply(source->face(SimplexRef{g, {}}, i));
            if (!(lhs == rhs)) throw std::logic_error("simplicial map does not commute with d_" +
                                                      std::to_string(i) + " on " + source->generator(g).name);
        }
    }
    if (source->basepoint() && target->basepoint()) {
        SimplexRef img = generator_images[*source->basepoint()];
        if (!(img == SimplexRef{*target->basepoint(), {}}))
            throw std::logic_error("simplicial map does not preserve the basepoint");
    }
}

SimplicialMap SimplicialMap::identity(SpacePtr x) {
    SimplicialMap m;
    m.source = m.target = x;
    for (gen_t g = 0; g < x->generator_count(); ++g) m.generator_images.push_back(SimplexRef{g, {}});
    return m;
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (f.target != g.source) throw std::logic_error("compose: middle spaces differ");
    SimplicialMap m;
    m.source = f.source;
    m.target = g.target;
    for (const auto& img : f.generator_images) m.generator_images.push_back(g.apply(img));
    return m;
}

SimplicialMap SimplicialMap::collapse_to_point(SpacePtr x, SpacePtr pt) {
    if (pt->generator_count() != 1) throw std::logic_error("target is not a point model");
    SimplicialMap m;
    m.source = x;
    m.target = pt;
    for (gen_t g = 0; g < x->generator_count(); ++g) {
        std::vector<int> w(x->generator(g).dim);
        std::iota(w.begin(), w.end(), 0);
        m.generator_images.push_back(SimplexRef{0, std::move(w)});
    }
    return m;
}

bool SimplicialMap::is_levelwise_injective(int up_to_dim) const {
    for (int k = 0; k <= up_to_dim; ++k) {
        std::set<SimplexRef> seen;
        for (const auto& s : source->level(k))
            if (!seen.insert(apply(s)).second) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Pushout

namespace {

struct FormalSimplex {
    int side;  // 0 = X, 1 = Y
    SimplexRef ref;
    bool operator<(const FormalSimplex& o) const {
        return side != o.side ? side < o.side : ref < o.ref;
    }
    bool operator==(const FormalSimplex& o) const { return side == o.side && ref == o.ref; }
};

struct UnionFind {
    std::vector<int> parent;
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.source != g.source) throw std::logic_error("pushout legs have different sources");
    const auto& X = *f.target;
    const auto& Y = *g.target;
    const auto& Z = *f.source;
    int top = std::max(X.max_dim(), Y.max_dim());

    // Level-by-level quotient of X_k u Y_k by the closure of f_k(z) ~ g_k(z).
    std::vector<std::map<FormalSimplex, int>> index(top + 1);
    std::vector<UnionFind> uf(top + 1);
    for (int k = 0; k <= top; ++k) {
        for (const auto& s : X.level(k)) index[k].emplace(FormalSimplex{0, s}, (int)index[k].size());
        for (const auto& s : Y.level(k)) index[k].emplace(FormalSimplex{1, s}, (int)index[k].size());
        uf[k].parent.resize(index[k].size());
        std::iota(uf[k].parent.begin(), uf[k].parent.end(), 0);
        for (const auto& z : Z.level(k)) {
            FormalSimplex a{0, f.apply(z)}, b{1, g.apply(z)};
            uf[k].unite(index[k].at(a), index[k].at(b));
        }
    }

    // Classes whose members are all non-degenerate become generators of W.
    std::vector<std::map<int, std::vector<FormalSimplex>>> classes(top + 1);
    for (int k = 0; k <= top; ++k)
        for (const auto& [fs, idx] : index[k]) classes[k][uf[k].find(idx)].push_back(fs);

    std::vector<FiniteSimplicialSet::Generator> gens;
    std::vector<std::map<int, gen_t>> gen_of_class(top + 1);
    std::vector<std::vector<FormalSimplex>> gen_rep;
    for (int k = 0; k <= top; ++k) {
        for (const auto& [root, members] : classes[k]) {
            bool degenerate = std::any_of(members.begin(), members.end(),
                                          [](const FormalSimplex& m) { return !m.ref.word.empty(); });
            if (degenerate) continue;
            gen_of_class[k][root] = (gen_t)gens.size();
            const auto& rep = members.front();
            std::string nm = (rep.side == 0 ? "x:" : "y:") +
                             (rep.side == 0 ? X.name(rep.ref) : Y.name(rep.ref));
            gens.push_back({nm, k});
            gen_rep.push_back(members);
        }
    }

    // Normal form of an arbitrary class, memoized.
    std::vector<std::map<int, SimplexRef>> normal(top + 1);
    auto class_of = [&](int k, const FormalSimplex& fs) { return uf[k].find(index[k].at(fs)); };
    std::function<SimplexRef(int, int)> normal_form = [&](int k, int root) -> SimplexRef {
        auto it = normal[k].find(root);
        if (it != normal[k].end()) return it->second;
        SimplexRef result;
        auto git = gen_of_class[k].find(root);
        if (git != gen_of_class[k].end()) {
            result = SimplexRef{git->second, {}};
        } else {
            // Peel the outermost degeneracy off any degenerate member.
            const FormalSimplex* deg = nullptr;
            for (const auto& m : classes[k][root])
                if (!m.ref.word.empty()) {
                    deg = &m;
                    break;
                }
            if (!deg) throw std::logic_error("pushout: class without normal form");
            int j = deg->ref.word.back();
            FormalSimplex inner{deg->side, SimplexRef{deg->ref.gen,
                                                      {deg->ref.word.begin(), deg->ref.word.end() - 1}}};
            result = FiniteSimplicialSet::degenerate(normal_form(k - 1, class_of(k - 1, inner)), j);
        }
        normal[k][root] = result;
        return result;
    };

    std::vector<std::vector<SimplexRef>> faces(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int k = gens[gi].dim;
        if (k == 0) continue;
        const FormalSimplex& rep = gen_rep[gi].front();
        const FiniteSimplicialSet& side = rep.side == 0 ? X : Y;
        for (int i = 0; i <= k; ++i) {
            SimplexRef fr = side.face(rep.ref, i);
            faces[gi].push_back(normal_form(k - 1, class_of(k - 1, {rep.side, fr})));
        }
    }

    std::optional<gen_t> bp;
    if (X.basepoint())
        bp = gen_of_class[0].at(class_of(0, FormalSimplex{0, SimplexRef{*X.basepoint(), {}}}));

    auto W = std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces), bp);

    PushoutResult out;
    out.space = W;
    out.from_x.source = f.target;
    out.from_x.target = W;
    for (gen_t g = 0; g < X.generator_count(); ++g) {
        int k = X.generator(g).dim;
        out.from_x.generator_images.push_back(normal_form(k, class_of(k, {0, SimplexRef{g, {}}})));
    }
    out.from_y.source = g.target;
    out.from_y.target = W;
    for (gen_t h = 0; h < Y.generator_count(); ++h) {
        int k = Y.generator(h).dim;
        out.from_y.generator_images.push_back(normal_form(k, class_of(k, {1, SimplexRef{h, {}}})));
    }
    return out;
}

SimplicialMap pushout_induced_map(const PushoutResult& po, const SimplicialMap& on_x,
                                  const SimplicialMap& on_y) {
    if (on_x.target != on_y.target) throw std::logic_error("mediating maps: targets differ");
    const auto& W = *po.space;
    SimplicialMap m;
    m.source = po.space;
    m.target = on_x.target;
    m.generator_images.resize(W.generator_count());
    std::vector<bool> got(W.generator_count(), false);
    auto assign = [&](const SimplicialMap& leg, const SimplicialMap& on_leg) {
        for (gen_t g = 0; g < leg.source->generator_count(); ++g) {
            const SimplexRef& img = leg.generator_images[g];
            if (!img.word.empty()) continue;  // lands on a degenerate simplex of W
            SimplexRef val = on_leg.apply(SimplexRef{g, {}});
            if (got[img.gen] && !(m.generator_images[img.gen] == val))
                throw std::logic_error("mediating maps disagree on identified generators");
            m.generator_images[img.gen] = val;
            got[img.gen] = true;
        }
    };
    assign(po.from_x, on_x);
    assign(po.from_y, on_y);
    for (bool b : got)
        if (!b) throw std::logic_error("pushout generator not covered by either leg");
    return m;
}

// ---------------------------------------------------------------------------
// Product

namespace {

// Repeat positions of a monotone surjection.
std::vector<int> surjection_to_word(const std::vector<int>& sigma) {
    std::vector<int> w;
    for (size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] == sigma[i + 1]) w.push_back((int)i);
    return w;
}

struct PairKey {
    gen_t gx;
    std::vector<int> wx;
    gen_t gy;
    std::vector<int> wy;
    bool operator<(const PairKey& o) const {
        return std::tie(gx, wx, gy, wy) < std::tie(o.gx, o.wx, o.gy, o.wy);
    }
};

// Normal form of the pair (a, b) at level m relative to product generators:
// factor out the common degeneracies.
std::pair<PairKey, std::vector<int>> pair_normal_form(int m, const SimplexRef& a, const SimplexRef& b) {
    std::vector<int> sa = word_to_surjection(m, a.word);
    std::vector<int> sb = word_to_surjection(m, b.word);
    std::vector<int> common, ca, cb;
    ca.push_back(sa[0]);
    cb.push_back(sb[0]);
    for (int i = 0; i < m; ++i) {
        if (sa[i] == sa[i + 1] && sb[i] == sb[i + 1]) {
            common.push_back(i);
        } else {
            ca.push_back(sa[i + 1]);
            cb.push_back(sb[i + 1]);
        }
    }
    PairKey key{a.gen, surjection_to_word(ca), b.gen, surjection_to_word(cb)};
    return {key, common};
}

}  // namespace

ProductResult product(SpacePtr xp, SpacePtr yp) {
    const auto& X = *xp;
    const auto& Y = *yp;
    // Word-disjoint pairs of normal forms are the non-degenerate simplices.
    std::map<PairKey, gen_t> ids;
    std::vector<PairKey> keys;
    std::vector<FiniteSimplicialSet::Generator> gens;
    for (int k = 0; k <= X.max_dim() + Y.max_dim(); ++k) {
        for (const auto& sx : X.level(k)) {
            for (const auto& sy : Y.level(k)) {
                std::vector<int> inter;
                std::set_intersection(sx.word.begin(), sx.word.end(), sy.word.begin(),
                                      sy.word.end(), std::back_inserter(inter));
                if (!inter.empty()) continue;
                PairKey key{sx.gen, sx.word, sy.gen, sy.word};
                ids.emplace(key, (gen_t)ids.size());
            }
        }
    }
    // ids were assigned in (dimension, key) order already; record them.
    keys.resize(ids.size());
    gens.resize(ids.size());
    for (const auto& [key, id] : ids) {
        keys[id] = key;
        int k = X.generator(key.gx).dim + (int)key.wx.size();
        gens[id] = {"(" + X.name(SimplexRef{key.gx, key.wx}) + "," +
                        Y.name(SimplexRef{key.gy, key.wy}) + ")",
                    k};
    }
    std::vector<std::vector<SimplexRef>> faces(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int k = gens[gi].dim;
        if (k == 0) continue;
        const PairKey& key = keys[gi];
        for (int i = 0; i <= k; ++i) {
            SimplexRef fa = X.face(SimplexRef{key.gx, key.wx}, i);
            SimplexRef fb = Y.face(SimplexRef{key.gy, key.wy}, i);
            auto [fkey, common] = pair_normal_form(k - 1, fa, fb);
            faces[gi].push_back(SimplexRef{ids.at(fkey), common});
        }
    }
    std::optional<gen_t> bp;
    if (X.basepoint() && Y.basepoint())
        bp = ids.at(PairKey{*X.basepoint(), {}, *Y.basepoint(), {}});
    ProductResult out;
    out.space = std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces), bp);
    out.proj_x.source = out.proj_y.source = out.space;
    out.proj_x.target = xp;
    out.proj_y.target = yp;
    for (const auto& key : keys) {
        out.proj_x.generator_images.push_back(SimplexRef{key.gx, key.wx});
        out.proj_y.generator_images.push_back(SimplexRef{key.gy, key.wy});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Disjoint union and subcomplexes

DisjointUnionResult disjoint_union(SpacePtr xp, SpacePtr yp) {
    const auto& X = *xp;
    const auto& Y = *yp;
    std::vector<FiniteSimplicialSet::Generator> gens;
    std::vector<std::vector<SimplexRef>> faces;
    for (gen_t g = 0; g < X.generator_count(); ++g) {
        gens.push_back({"x:" + X.generator(g).name, X.generator(g).dim});
        std::vector<SimplexRef> fs;
        if (X.generator(g).dim > 0)
            for (int i = 0; i <= X.generator(g).dim; ++i) fs.push_back(X.face(SimplexRef{g, {}}, i));
        faces.push_back(std::move(fs));
    }
    gen_t off = X.generator_count();
    for (gen_t g = 0; g < Y.generator_count(); ++g) {
        gens.push_back({"y:" + Y.generator(g).name, Y.generator(g).dim});
        std::vector<SimplexRef> fs;
        if (Y.generator(g).dim > 0)
            for (int i = 0; i <= Y.generator(g).dim; ++i) {
                SimplexRef f = Y.face(SimplexRef{g, {}}, i);
                f.gen += off;
                fs.push_back(std::move(f));
            }
        faces.push_back(std::move(fs));
    }
    std::optional<gen_t> bp;
    if (X.basepoint()) bp = *X.basepoint();
    auto U = std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces), bp);
    DisjointUnionResult out;
    out.space = U;
    out.from_x.source = xp;
    out.from_x.target = U;
    for (gen_t g = 0; g < X.generator_count(); ++g)
        out.from_x.generator_images.push_back(SimplexRef{g, {}});
    out.from_y.source = yp;
    out.from_y.target = U;
    for (gen_t g = 0; g < Y.generator_count(); ++g)
        out.from_y.generator_images.push_back(SimplexRef{(gen_t)(g + off), {}});
    return out;
}

SubcomplexResult subcomplex(SpacePtr xp, const std::vector<gen_t>& generators) {
    const auto& X = *xp;
    std::vector<gen_t> sorted = generators;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<gen_t, gen_t> reindex;
    for (gen_t g : sorted) reindex.emplace(g, (gen_t)reindex.size());
    std::vector<FiniteSimplicialSet::Generator> gens;
    std::vector<std::vector<SimplexRef>> faces;
    for (gen_t g : sorted) {
        gens.push_back(X.generator(g));
        std::vector<SimplexRef> fs;
        if (X.generator(g).dim > 0)
            for (int i = 0; i <= X.generator(g).dim; ++i) {
                SimplexRef f = X.face(SimplexRef{g, {}}, i);
                auto it = reindex.find(f.gen);
                if (it == reindex.end())
                    throw std::invalid_argument("generator set is not closed under faces");
                f.gen = it->second;
                fs.push_back(std::move(f));
            }
        faces.push_back(std::move(fs));
    }
    std::optional<gen_t> bp;
    if (X.basepoint()) {
        auto it = reindex.find(*X.basepoint());
        if (it != reindex.end()) bp = it->second;
    }
    SubcomplexResult out;
    out.space = std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces), bp);
    out.inclusion.source = out.space;
    out.inclusion.target = xp;
    for (gen_t g : sorted) out.inclusion.generator_images.push_back(SimplexRef{g, {}});
    return out;
}

// ---------------------------------------------------------------------------
// Standard models

namespace {

SpacePtr make_point() {
    return std::make_shared<FiniteSimplicialSet>(
        std::vector<FiniteSimplicialSet::Generator>{{"pt", 0}},
        std::vector<std::vector<SimplexRef>>{{}}, 0);
}

SpacePtr make_interval() {
    std::vector<FiniteSimplicialSet::Generator> gens{{"v0", 0}, {"v1", 0}, {"e", 1}};
    std::vector<std::vector<SimplexRef>> faces{{}, {}, {SimplexRef{1, {}}, SimplexRef{0, {}}}};
    return std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces));
}

SpacePtr make_delta(int n) {
    // Generators are the nonempty subsets of {0..n}.
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> s;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v)) s.push_back(v);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return std::make_shared<FiniteSimplicialSet>([&] {
        std::vector<FiniteSimplicialSet::Generator> gens;
        for (const auto& s : subsets) {
            std::string nm;
            for (int v : s) nm += std::to_string(v);
            gens.push_back({nm, (int)s.size() - 1});
        }
        return gens;
    }(), [&] {
        std::map<std::vector<int>, gen_t> idx;
        for (size_t i = 0; i < subsets.size(); ++i) idx[subsets[i]] = (gen_t)i;
        std::vector<std::vector<SimplexRef>> faces;
        for (const auto& s : subsets) {
            std::vector<SimplexRef> fs;
            if (s.size() > 1)
                for (size_t i = 0; i < s.size(); ++i) {
                    std::vector<int> t = s;
                    t.erase(t.begin() + i);
                    fs.push_back(SimplexRef{idx.at(t), {}});
                }
            faces.push_back(std::move(fs));
        }
        return faces;
    }());
}

SpacePtr make_boundary_delta(int n) {
    auto full = make_delta(n);
    std::vector<gen_t> keep;
    for (gen_t g = 0; g < full->generator_count(); ++g)
        if (full->generator(g).dim < n) keep.push_back(g);
    return subcomplex(full, keep).space;
}

SpacePtr make_sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere(n) needs n >= 1");
    std::vector<FiniteSimplicialSet::Generator> gens{{"pt", 0}, {"cell", n}};
    std::vector<std::vector<SimplexRef>> faces{{}, {}};
    std::vector<int> w(n - 1);
    std::iota(w.begin(), w.end(), 0);
    for (int i = 0; i <= n; ++i) faces[1].push_back(SimplexRef{0, w});
    return std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces), 0);
}

SpacePtr make_circle_two_cell() {
    std::vector<FiniteSimplicialSet::Generator> gens{{"a", 0}, {"b", 0}, {"e", 1}, {"f", 1}};
    std::vector<std::vector<SimplexRef>> faces{
        {}, {}, {SimplexRef{1, {}}, SimplexRef{0, {}}}, {SimplexRef{1, {}}, SimplexRef{0, {}}}};
    return std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces), 0);
}

SpacePtr make_square() {
    // Triangulated unit square: vertices 00,10,01,11, the diagonal 00-11, two
    // triangles. Coincides levelwise with delta(1) x delta(1).
    std::vector<FiniteSimplicialSet::Generator> gens{
        {"00", 0}, {"10", 0}, {"01", 0}, {"11", 0},
        {"bottom", 1},  // 00-10
        {"top", 1},     // 01-11
        {"left", 1},    // 00-01
        {"right", 1},   // 10-11
        {"diag", 1},    // 00-11
        {"lower", 2},   // (00,10,11)
        {"upper", 2},   // (00,01,11)
    };
    auto v = [](gen_t g) { return SimplexRef{g, {}}; };
    std::vector<std::vector<SimplexRef>> faces{
        {},
        {},
        {},
        {},
        {v(1), v(0)},          // bottom
        {v(3), v(2)},          // top
        {v(2), v(0)},          // left
        {v(3), v(1)},          // right
        {v(3), v(0)},          // diag
        {v(7), v(8), v(4)},    // lower: d0=(10,11), d1=(00,11), d2=(00,10)
        {v(5), v(8), v(6)},    // upper: d0=(01,11), d1=(00,11), d2=(00,01)
    };
    return std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces));
}

SimplicialMap interval_into(SpacePtr target, const std::string& v0, const std::string& v1,
                            const std::string& e, SpacePtr interval) {
    SimplicialMap m;
    m.source = interval;
    m.target = target;
    m.generator_images = {SimplexRef{target->generator_by_name(v0), {}},
                          SimplexRef{target->generator_by_name(v1), {}},
                          SimplexRef{target->generator_by_name(e), {}}};
    return m;
}

}  // namespace

GluedModel two_interval_gluing() {
    auto I1 = make_interval();
    auto I2 = make_interval();
    auto P = make_point();
    auto pts = disjoint_union(P, make_point());
    GluedModel out;
    out.f.source = pts.space;
    out.f.target = I1;
    out.f.generator_images = {SimplexRef{0, {}}, SimplexRef{1, {}}};  // v0, v1
    out.g.source = pts.space;
    out.g.target = I2;
    out.g.generator_images = {SimplexRef{0, {}}, SimplexRef{1, {}}};
    out.po = pushout(out.f, out.g);
    return out;
}

GluedModel cylinder_gluing() {
    auto sq = make_square();
    auto I = make_interval();
    auto ZI1 = make_interval();
    auto ZI2 = make_interval();
    auto Z = disjoint_union(ZI1, ZI2);
    SimplicialMap left = interval_into(sq, "00", "01", "left", ZI1);
    SimplicialMap right = interval_into(sq, "10", "11", "right", ZI2);
    GluedModel out;
    out.f.source = Z.space;
    out.f.target = sq;
    out.f.generator_images = {left.generator_images[0],  left.generator_images[1],
                              left.generator_images[2],  right.generator_images[0],
                              right.generator_images[1], right.generator_images[2]};
    out.g.source = Z.space;
    out.g.target = I;
    out.g.generator_images = {SimplexRef{0, {}}, SimplexRef{1, {}}, SimplexRef{2, {}},
                              SimplexRef{0, {}}, SimplexRef{1, {}}, SimplexRef{2, {}}};
    out.po = pushout(out.f, out.g);
    return out;
}

GluedModel torus_gluing() {
    GluedModel cyl = cylinder_gluing();
    auto sq = cyl.f.target;
    auto I = make_interval();
    auto ZI1 = make_interval();
    auto ZI2 = make_interval();
    auto Z = disjoint_union(ZI1, ZI2);
    SimplicialMap bottom =
        SimplicialMap::compose(cyl.po.from_x, interval_into(sq, "00", "10", "bottom", ZI1));
    SimplicialMap top =
        SimplicialMap::compose(cyl.po.from_x, interval_into(sq, "01", "11", "top", ZI2));
    GluedModel out;
    out.f.source = Z.space;
    out.f.target = cyl.po.space;
    out.f.generator_images = {bottom.generator_images[0], bottom.generator_images[1],
                              bottom.generator_images[2], top.generator_images[0],
                              top.generator_images[1],    top.generator_images[2]};
    out.g.source = Z.space;
    out.g.target = I;
    out.g.generator_images = {SimplexRef{0, {}}, SimplexRef{1, {}}, SimplexRef{2, {}},
                              SimplexRef{0, {}}, SimplexRef{1, {}}, SimplexRef{2, {}}};
    out.po = pushout(out.f, out.g);
    return out;
}

SpacePtr standard_model(const std::string& name) {
    if (name == "point" || name == "pt") return make_point();
    if (name == "interval" || name == "delta1") return make_interval();
    if (name == "square") return make_square();
    if (name == "circle_minimal" || name == "sphere1") return make_sphere(1);
    if (name == "circle_two_cell") return make_circle_two_cell();
    if (name == "cylinder") return cylinder_gluing().po.space;
    if (name == "torus_glued") return torus_gluing().po.space;
    if (name.rfind("delta", 0) == 0) return make_delta(std::stoi(name.substr(5)));
    if (name.rfind("boundary_delta", 0) == 0) return make_boundary_delta(std::stoi(name.substr(14)));
    if (name.rfind("sphere", 0) == 0) return make_sphere(std::stoi(name.substr(6)));
    throw std::invalid_argument("unknown standard model: " + name);
}

}  // namespace hh
