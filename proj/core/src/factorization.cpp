#include "hh/factorization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hh {

namespace {

std::vector<gen_t> intersect(const std::vector<gen_t>& a, const std::vector<gen_t>& b) {
    std::vector<gen_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool CombinatorialCover::disjoint(int i, int j) const {
    return intersect(opens[i], opens[j]).empty();
}

CombinatorialCover make_cover(SpacePtr space,
                              std::vector<std::pair<std::string, std::vector<gen_t>>> opens) {
    if (!space) throw std::invalid_argument("make_cover: null space");
    if (opens.empty()) throw std::invalid_argument("make_cover: no opens");
    CombinatorialCover out;
    out.space = space;
    std::vector<char> covered(space->generator_count(), 0);
    for (auto& [name, gens] : opens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        if (gens.empty()) throw std::invalid_argument("make_cover: empty open " + name);
        for (gen_t g : gens) {
            if (g < 0 || g >= space->generator_count())
                throw std::invalid_argument("make_cover: bad generator id in open " + name);
            covered[g] = 1;
            const int dim = space->generator(g).dim;
            for (int i = 0; i <= dim && dim > 0; ++i) {
                SimplexRef f = space->face(SimplexRef{g, {}}, i);
                if (!std::binary_search(gens.begin(), gens.end(), f.gen))
                    throw std::invalid_argument("make_cover: open " + name +
                                                " is not closed under faces");
            }
        }
        out.names.push_back(name);
        out.opens.push_back(std::move(gens));
    }
    for (gen_t g = 0; g < (gen_t)covered.size(); ++g)
        if (!covered[g])
            throw std::invalid_argument("make_cover: generator " + space->generator(g).name +
                                        " is in no open");
    out.original_count = (int)out.opens.size();

    // Saturate under pairwise intersection (nonempty intersections only).
    for (size_t i = 0; i < out.opens.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            auto common = intersect(out.opens[i], out.opens[j]);
            if (common.empty()) continue;
            if (std::find(out.opens.begin(), out.opens.end(), common) != out.opens.end()) continue;
            out.names.push_back(out.names[j] + "&" + out.names[i]);
            out.opens.push_back(std::move(common));
        }
    return out;
}

std::vector<std::vector<int>> disjoint_families(const CombinatorialCover& cover) {
    const int n = cover.original_count;
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> fam;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) fam.push_back(i);
        bool ok = true;
        for (size_t a = 0; a < fam.size() && ok; ++a)
            for (size_t b = a + 1; b < fam.size() && ok; ++b)
                if (!cover.disjoint(fam[a], fam[b])) ok = false;
        if (ok) out.push_back(std::move(fam));
    }
    return out;
}

CechComplex::CechComplex(CombinatorialCover cover, AlgebraPtr algebra, CechOptions opt)
    : cover_(std::move(cover)), algebra_(std::move(algebra)), opt_(opt) {
    if (!cover_.space || !algebra_) throw std::invalid_argument("cech: null space or algebra");
    if (opt_.n_min > 0) throw std::invalid_argument("cech: window must lie in (-inf, 0]");
    if (opt_.cap < 2) throw std::invalid_argument("cech: tuple length cap must be >= 2");
    pu_ = disjoint_families(cover_);
    kmax_ = std::min(opt_.cap, 2 - opt_.n_min);

    HochschildComplex::Options ao;
    ao.n_min = opt_.n_min;
    ao.normalized = opt_.normalized;
    ao.max_block = opt_.max_block;
    ambient_ = std::make_shared<HochschildComplex>(cover_.space, algebra_, ao);

    layers_.resize(kmax_);
    for (int k = 1; k <= kmax_; ++k) {
        const int64_t count = tuple_count(k);
        layers_[k - 1].reserve(count);
        for (int64_t t = 0; t < count; ++t)
            layers_[k - 1].push_back(build_summand(digits(k, t), k));
    }
}

int64_t CechComplex::tuple_count(int k) const {
    int64_t out = 1;
    for (int i = 0; i < k; ++i) out *= (int64_t)pu_.size();
    return out;
}

std::vector<int> CechComplex::digits(int k, int64_t t) const {
    std::vector<int> out(k);
    for (int j = k - 1; j >= 0; --j) {
        out[j] = (int)(t % (int64_t)pu_.size());
        t /= (int64_t)pu_.size();
    }
    return out;
}

int64_t CechComplex::index_of(const std::vector<int>& digits) const {
    int64_t t = 0;
    for (int d : digits) t = t * (int64_t)pu_.size() + d;
    return t;
}

CechComplex::Summand CechComplex::build_summand(const std::vector<int>& tuple, int k) const {
    Summand s;
    int64_t total = 0;
    std::vector<int> idx(k, 0);  // odometer over family members, slot 0 slowest
    for (;;) {
        std::vector<int> choice(k);
        for (int j = 0; j < k; ++j) choice[j] = pu_[tuple[j]][idx[j]];
        std::vector<gen_t> gens = cover_.opens[choice[0]];
        for (int j = 1; j < k && !gens.empty(); ++j)
            gens = intersect(gens, cover_.opens[choice[j]]);
        if (!gens.empty()) {
            s.comp_of[choice] = (int)s.choices.size();
            s.choices.push_back(std::move(choice));
            s.comp_gen0.push_back((int)total);
            total += (int64_t)gens.size();
            s.comp_gens.push_back(std::move(gens));
        }
        int j = k - 1;
        while (j >= 0 && ++idx[j] == (int)pu_[tuple[j]].size()) idx[j--] = 0;
        if (j < 0) break;
    }

    const auto& X = *cover_.space;
    std::vector<FiniteSimplicialSet::Generator> gens;
    std::vector<std::vector<SimplexRef>> faces;
    for (size_t ci = 0; ci < s.comp_gens.size(); ++ci) {
        const auto& cg = s.comp_gens[ci];
        auto local = [&](gen_t g) {
            return (gen_t)(s.comp_gen0[ci] +
                           (std::lower_bound(cg.begin(), cg.end(), g) - cg.begin()));
        };
        for (gen_t g : cg) {
            gens.push_back({"c" + std::to_string(ci) + "." + X.generator(g).name,
                            X.generator(g).dim});
            std::vector<SimplexRef> fs;
            if (X.generator(g).dim > 0)
                for (int i = 0; i <= X.generator(g).dim; ++i) {
                    SimplexRef f = X.face(SimplexRef{g, {}}, i);
                    fs.push_back(SimplexRef{local(f.gen), f.word});
                }
            faces.push_back(std::move(fs));
        }
    }
    s.space = std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces));

    HochschildComplex::Options o;
    o.n_min = std::min(0, opt_.n_min + k - 1);
    o.normalized = opt_.normalized;
    o.max_block = opt_.max_block;
    s.ch = std::make_shared<HochschildComplex>(s.space, algebra_, o);
    return s;
}

const HochschildComplex& CechComplex::summand(int k, int64_t t) const {
    if (k < 1 || k > kmax_ || t < 0 || t >= tuple_count(k))
        throw std::out_of_range("cech: no such summand");
    return *sum(k, t).ch;
}

const std::vector<std::vector<int>>& CechComplex::summand_choices(int k, int64_t t) const {
    if (k < 1 || k > kmax_ || t < 0 || t >= tuple_count(k))
        throw std::out_of_range("cech: no such summand");
    return sum(k, t).choices;
}

SimplicialMap CechComplex::omission(int k, int64_t t, int j) const {
    const Summand& src = sum(k, t);
    std::vector<int> digs = digits(k, t);
    digs.erase(digs.begin() + (j - 1));
    const Summand& tgt = sum(k - 1, index_of(digs));

    SimplicialMap f;
    f.source = src.space;
    f.target = tgt.space;
    for (size_t ci = 0; ci < src.choices.size(); ++ci) {
        std::vector<int> choice = src.choices[ci];
        choice.erase(choice.begin() + (j - 1));
        const int tci = tgt.comp_of.at(choice);
        const auto& tg = tgt.comp_gens[tci];
        for (gen_t g : src.comp_gens[ci]) {
            auto it = std::lower_bound(tg.begin(), tg.end(), g);
            f.generator_images.push_back(
                SimplexRef{(gen_t)(tgt.comp_gen0[tci] + (it - tg.begin())), {}});
        }
    }
    return f;
}

int64_t CechComplex::layer_dim(int k, int n) const {
    const int m = n + k - 1;
    if (m > 0 || m < std::min(0, opt_.n_min + k - 1) - 1) return 0;
    int64_t out = 0;
    for (const auto& s : layers_[k - 1]) out += s.ch->total_dim(m);
    return out;
}

int64_t CechComplex::total_dim(int n) const {
    int64_t out = 0;
    for (int k = 1; k <= kmax_; ++k) out += layer_dim(k, n);
    return out;
}

std::vector<int64_t> CechComplex::offsets(int n) const {
    std::vector<int64_t> off;
    int64_t total = 0;
    for (int k = 1; k <= kmax_; ++k) {
        const int m = n + k - 1;
        const bool live = m <= 0 && m >= std::min(0, opt_.n_min + k - 1) - 1;
        for (const auto& s : layers_[k - 1]) {
            off.push_back(total);
            total += live ? s.ch->total_dim(m) : 0;
        }
    }
    off.push_back(total);
    return off;
}

ComplexView CechComplex::view() const {
    ComplexView v;
    v.n_lo = opt_.n_min - 1;
    v.n_hi = 0;
    v.dim = [this](int n) { return total_dim(n); };
    v.columns = [this](int n, const std::function<void(const SparseVec&)>& fn) {
        const auto up = offsets(n + 1);
        int64_t block = 0;
        for (int k = 1; k <= kmax_; ++k) {
            const int m = n + k - 1;
            for (int64_t t = 0; t < tuple_count(k); ++t, ++block) {
                const Summand& s = sum(k, t);
                const bool live = m <= 0 && m >= std::min(0, opt_.n_min + k - 1) - 1;
                const int64_t dm = live ? s.ch->total_dim(m) : 0;
                if (dm == 0) continue;

                // Hochschild part, twisted by the Cech degree; stays in (k, t).
                const Rational tw((k - 1) % 2 ? -1 : 1);
                SparseRationalMatrix dh = s.ch->total_differential(m);

                // Cech part: alternating omissions into layer k - 1.
                std::vector<std::pair<int64_t, SparseRationalMatrix>> omits;
                if (k >= 2) {
                    const int64_t kbase = block - t - tuple_count(k - 1);
                    std::vector<int> digs = digits(k, t);
                    for (int j = 1; j <= k; ++j) {
                        std::vector<int> rest = digs;
                        rest.erase(rest.begin() + (j - 1));
                        const int64_t tt = index_of(rest);
                        omits.emplace_back(
                            up[kbase + tt],
                            induced_map_matrix(omission(k, t, j), *s.ch,
                                               *sum(k - 1, tt).ch, m));
                    }
                }

                for (int64_t r = 0; r < dm; ++r) {
                    SparseVec col;
                    for (const auto& [row, c] : dh.column(r).entries)
                        col.push(up[block] + row, c * tw);
                    for (int j = 0; j < (int)omits.size(); ++j) {
                        const Rational sg(j % 2 ? -1 : 1);
                        for (const auto& [row, c] : omits[j].second.column(r).entries)
                            col.push(omits[j].first + row, c * sg);
                    }
                    col.normalize();
                    fn(col);
                }
            }
        }
    };
    return v;
}

std::map<int, int64_t> CechComplex::homology_dims() const {
    return hh::homology_dims(view(), trusted_min());
}

SparseRationalMatrix CechComplex::augmentation(int n) const {
    SparseRationalMatrix out(ambient_->total_dim(n), total_dim(n));
    const auto off = offsets(n);
    for (int64_t t = 0; t < tuple_count(1); ++t) {
        const Summand& s = sum(1, t);
        if (s.ch->total_dim(n) == 0) continue;
        SimplicialMap inc;
        inc.source = s.space;
        inc.target = cover_.space;
        for (const auto& cg : s.comp_gens)
            for (gen_t g : cg) inc.generator_images.push_back(SimplexRef{g, {}});
        SparseRationalMatrix m = induced_map_matrix(inc, *s.ch, *ambient_, n);
        for (int64_t j = 0; j < m.cols(); ++j) out.set_column(off[t] + j, m.column(j));
    }
    return out;
}

std::map<int, bool> cech_compare(const CechComplex& c) {
    auto f = [&c](int n) { return c.augmentation(n); };
    return is_quasi_iso(f, c.view(), view_of(c.ambient()), c.trusted_min());
}

Chain structure_map(const std::vector<SimplicialMap>& inclusions,
                    const std::vector<const HochschildComplex*>& sources,
                    const HochschildComplex& target, const std::vector<Chain>& chains) {
    const size_t n = inclusions.size();
    if (n == 0 || sources.size() != n || chains.size() != n)
        throw std::invalid_argument("structure_map: mismatched inputs");
    std::vector<std::set<gen_t>> images(n);
    for (size_t i = 0; i < n; ++i) {
        if (!sources[i] || sources[i]->space() != inclusions[i].source ||
            inclusions[i].target != target.space() ||
            sources[i]->algebra() != target.algebra())
            throw std::invalid_argument("structure_map: inclusion does not match its complex");
        if (chains[i].complex != sources[i])
            throw std::invalid_argument("structure_map: chain lives on the wrong complex");
        inclusions[i].validate();
        for (const auto& s : inclusions[i].generator_images) images[i].insert(s.gen);
        for (size_t j = 0; j < i; ++j)
            for (gen_t g : images[i])
                if (images[j].count(g))
                    throw std::invalid_argument("structure_map: images are not disjoint");
    }
    Chain acc = induced_map_apply(inclusions[0], *sources[0], target, chains[0]);
    for (size_t i = 1; i < n; ++i)
        acc = shuffle_product(acc, induced_map_apply(inclusions[i], *sources[i], target, chains[i]));
    return acc;
}

}  // namespace hh
