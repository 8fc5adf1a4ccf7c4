#include "hh/hochschild.hpp"

#include "hh/linalg.hpp"

#include <doctest.h>

using namespace hh;

namespace {

HochschildComplex::Options opts(int n_min, bool normalized = false, ModulePtr mod = nullptr) {
    HochschildComplex::Options o;
    o.n_min = n_min;
    o.normalized = normalized;
    o.module = std::move(mod);
    return o;
}

bool d_squared_zero(const HochschildComplex& c) {
    for (int n = c.n_min() - 1; n <= -1; ++n) {
        auto dn = c.total_differential(n);
        auto dn1 = c.total_differential(n + 1);
        if (!dn1.multiply(dn).is_zero()) return false;
    }
    return true;
}

Chain basis_chain(const HochschildComplex& c, int k, int d, int64_t row, Rational coeff = 1) {
    Chain u{&c, {}};
    u.add({k, d}, row, coeff);
    u.normalize();
    return u;
}

int chain_total_degree(const Chain& u) {
    REQUIRE(!u.parts.empty());
    int n = u.parts.begin()->first.d - u.parts.begin()->first.k;
    for (const auto& [b, v] : u.parts) CHECK(b.d - b.k == n);
    return n;
}

}  // namespace

TEST_CASE("koszul_sign examples") {
    CHECK(koszul_sign({-1, -2, -1}, {0, 1, 2}) == 1);
    CHECK(koszul_sign({-1, -1}, {1, 0}) == -1);
    CHECK(koszul_sign({-2, -2}, {1, 0}) == 1);
    CHECK(koszul_sign({-1, -2, -1}, {2, 1, 0}) == -1);
}

TEST_CASE("point model with dual numbers") {
    auto pt = standard_model("point");
    auto A = GradedAlgebra::builtin("dual_numbers");
    HochschildComplex c(pt, A, opts(-4));

    for (int k = 0; k <= c.max_level(); ++k) {
        CHECK(c.block_dim(k, 0) == 2);
        CHECK(c.block_dim(k, -1) == 0);
    }
    // D from level k is the alternating sum of k+1 identity faces.
    for (int n = -4; n <= -1; ++n) {
        auto D = c.total_differential(n);
        const int k = -n;
        if (k % 2 == 0)
            CHECK(D == SparseRationalMatrix::identity(2));
        else
            CHECK(D.is_zero());
    }
    CHECK(d_squared_zero(c));

    // Normalized build collapses to A in degree 0.
    HochschildComplex cn(pt, A, opts(-4, true));
    CHECK(cn.block_dim(0, 0) == 2);
    for (int k = 1; k <= cn.max_level(); ++k) CHECK(cn.block_dim(k, 0) == 0);
}

TEST_CASE("circle levels and simplicial identities as matrices") {
    auto s1 = standard_model("circle_minimal");
    auto A = GradedAlgebra::builtin("dual_numbers");
    HochschildComplex c(s1, A, opts(-3));
    for (int k = 0; k <= 4; ++k) CHECK(c.block_dim(k, 0) == (1 << (k + 1)));

    // d_i d_j = d_{j-1} d_i (i < j) on levels 2..4, as matrices.
    for (int k = 2; k <= 4; ++k)
        for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i) {
                auto lhs = c.face_matrix(k - 1, 0, i).multiply(c.face_matrix(k, 0, j));
                auto rhs = c.face_matrix(k - 1, 0, j - 1).multiply(c.face_matrix(k, 0, i));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("D squared is zero across models and algebras") {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    auto kos = GradedAlgebra::builtin("koszul");
    auto ext = GradedAlgebra::builtin("exterior1");
    for (const char* model : {"point", "interval", "circle_minimal", "circle_two_cell", "delta2"}) {
        auto X = standard_model(model);
        for (const auto& A : {dual, kos, ext}) {
            HochschildComplex c(X, A, opts(-3));
            CHECK(d_squared_zero(c));
            HochschildComplex cn(X, A, opts(-3, true));
            CHECK(d_squared_zero(cn));
        }
    }
}

TEST_CASE("D squared is zero with module coefficients") {
    auto kos = GradedAlgebra::builtin("koszul");
    auto s1 = standard_model("circle_minimal");
    for (const auto& M : {GradedModule::regular(kos), GradedModule::augmentation(kos)}) {
        HochschildComplex c(s1, kos, opts(-3, false, M));
        CHECK(d_squared_zero(c));
        HochschildComplex cn(s1, kos, opts(-3, true, M));
        CHECK(d_squared_zero(cn));
    }
    // On the point, CH(A, M) is just M with zero face alternation absorbed.
    auto M = GradedModule::regular(kos);
    HochschildComplex c(standard_model("point"), kos, opts(-3, false, M));
    for (int d = -2; d <= 0; ++d) CHECK(c.block_dim(0, d) == M->dim_of_degree(d));
}

TEST_CASE("monoidality: disjoint union bases are product bases") {
    auto X = standard_model("interval");
    auto Y = standard_model("circle_minimal");
    auto XY = disjoint_union(X, Y);
    auto A = GradedAlgebra::builtin("koszul");
    HochschildComplex cx(X, A, opts(-3)), cy(Y, A, opts(-3)), cxy(XY.space, A, opts(-3));
    for (int k = 0; k <= 3; ++k)
        for (int d = -3; d <= 0; ++d) {
            int64_t expect = 0;
            for (int d1 = 0; d1 >= d; --d1) expect += cx.block_dim(k, d1) * cy.block_dim(k, d - d1);
            CHECK(cxy.block_dim(k, d) == expect);
        }
}

TEST_CASE("induced maps: identity, functoriality, chain map, collapse") {
    auto I = standard_model("interval");
    auto pt = standard_model("point");
    auto A = GradedAlgebra::builtin("koszul");
    HochschildComplex ci(I, A, opts(-3)), cp(pt, A, opts(-3));

    auto idm = SimplicialMap::identity(I);
    for (int n = -3; n <= 0; ++n)
        CHECK(induced_map_matrix(idm, ci, ci, n) ==
              SparseRationalMatrix::identity(ci.total_dim(n)));

    // Collapse to a point multiplies all tensor factors per level.
    auto col = SimplicialMap::collapse_to_point(I, pt);
    for (int n = -3; n <= -1; ++n) {
        auto F = induced_map_matrix(col, ci, cp, n);
        auto Fn = induced_map_matrix(col, ci, cp, n + 1);
        CHECK(Fn.multiply(ci.total_differential(n)) == cp.total_differential(n).multiply(F));
    }
    // Collapse at level 1, internal degree -1: x in one slot maps to x.
    {
        auto F = induced_map_matrix(col, ci, cp, -2);  // n=-2 includes (k=1,d=-1)
        CHECK(F.rows() == cp.total_dim(-2));
        CHECK(F.cols() == ci.total_dim(-2));
    }

    // Functoriality: (col o id) = col.
    auto comp = SimplicialMap::compose(col, idm);
    for (int n = -3; n <= 0; ++n)
        CHECK(induced_map_matrix(comp, ci, cp, n) ==
              induced_map_matrix(col, ci, cp, n)
                  .multiply(induced_map_matrix(idm, ci, ci, n)));
}

TEST_CASE("circle into cylinder and back is the identity") {
    auto cyl = cylinder_gluing();
    auto sq = cyl.f.target;
    auto W = cyl.po.space;
    auto s1 = standard_model("circle_minimal");
    gen_t v00 = sq->generator_by_name("00");
    gen_t bottom = sq->generator_by_name("bottom");

    SimplicialMap incl;
    incl.source = s1;
    incl.target = W;
    incl.generator_images = {cyl.po.from_x.apply(SimplexRef{v00, {}}),
                             cyl.po.from_x.apply(SimplexRef{bottom, {}})};
    incl.validate();

    // Project the square onto its bottom circle, compatibly with the gluing.
    auto ref = [&](const char* nm) { return SimplexRef{s1->generator_by_name(nm), {}}; };
    SimplexRef ptr = ref("pt"), cell = ref("cell");
    SimplicialMap sq_to_c;
    sq_to_c.source = sq;
    sq_to_c.target = s1;
    sq_to_c.generator_images = {ptr, ptr, ptr, ptr,
                                cell, cell,
                                FiniteSimplicialSet::degenerate(ptr, 0),
                                FiniteSimplicialSet::degenerate(ptr, 0),
                                cell,
                                FiniteSimplicialSet::degenerate(cell, 1),
                                FiniteSimplicialSet::degenerate(cell, 0)};
    sq_to_c.validate();
    SimplicialMap i_to_c;
    i_to_c.source = cyl.g.target;
    i_to_c.target = s1;
    i_to_c.generator_images = {ptr, ptr, FiniteSimplicialSet::degenerate(ptr, 0)};
    auto proj = pushout_induced_map(cyl.po, sq_to_c, i_to_c);
    proj.validate();

    auto round = SimplicialMap::compose(proj, incl);
    auto idm = SimplicialMap::identity(s1);
    CHECK(round.generator_images == idm.generator_images);

    auto A = GradedAlgebra::builtin("exterior1");
    HochschildComplex cs(s1, A, opts(-2)), cw(W, A, opts(-2));
    for (int n = -2; n <= 0; ++n) {
        auto rt = induced_map_matrix(proj, cw, cs, n).multiply(induced_map_matrix(incl, cs, cw, n));
        CHECK(rt == SparseRationalMatrix::identity(cs.total_dim(n)));
    }
}

TEST_CASE("shuffle product: unit, point multiplication") {
    auto A = GradedAlgebra::builtin("dual_numbers");
    auto pt = standard_model("point");
    HochschildComplex cp(pt, A, opts(-2));
    auto one = unit_chain(cp);
    // eps at level 0 is row index of the monomial (eps).
    Monomial meps{cp.gid_of(0, 1)};
    auto eps = basis_chain(cp, 0, 0, cp.row_of(0, 0, meps));
    CHECK(shuffle_product(one, eps) == eps);
    CHECK(shuffle_product(eps, one) == eps);
    CHECK(shuffle_product(eps, eps).is_zero());  // eps^2 = 0

    auto s1 = standard_model("circle_minimal");
    HochschildComplex cc(s1, A, opts(-3));
    auto u1 = unit_chain(cc);
    for (int k = 1; k <= 2; ++k) {
        for (int64_t r = 0; r < cc.block_dim(k, 0); r += 3) {
            auto v = basis_chain(cc, k, 0, r);
            CHECK(shuffle_product(u1, v) == v);
            CHECK(shuffle_product(v, u1) == v);
        }
    }
}

TEST_CASE("shuffle product: graded commutativity and Leibniz") {
    auto s1 = standard_model("circle_minimal");
    auto ext = GradedAlgebra::builtin("exterior1");
    HochschildComplex c(s1, ext, opts(-4));

    std::vector<Chain> samples;
    for (int k = 0; k <= 2; ++k)
        for (int d = -2; d <= 0; ++d)
            for (int64_t r = 0; r < c.block_dim(k, d); r += 2)
                samples.push_back(basis_chain(c, k, d, r, Rational(r + 1)));

    for (size_t a = 0; a < samples.size(); a += 3)
        for (size_t b = a; b < samples.size(); b += 4) {
            const Chain &u = samples[a], &v = samples[b];
            int nu = chain_total_degree(u), nv = chain_total_degree(v);
            if (-(nu + nv) > c.max_level()) continue;
            auto uv = shuffle_product(u, v);
            auto vu = shuffle_product(v, u);
            Rational s = (nu * nv) % 2 ? -1 : 1;
            CHECK(uv == scale(vu, s));
        }

    // Leibniz with a nontrivial internal differential.
    auto kos = GradedAlgebra::builtin("koszul");
    HochschildComplex ck(s1, kos, opts(-4));
    std::vector<Chain> ks;
    for (int k = 0; k <= 2; ++k)
        for (int d = -2; d <= 0; ++d)
            for (int64_t r = 0; r < ck.block_dim(k, d); r += 5)
                ks.push_back(basis_chain(ck, k, d, r));
    for (size_t a = 0; a < ks.size(); a += 4)
        for (size_t b = a + 1; b < ks.size(); b += 5) {
            const Chain &u = ks[a], &v = ks[b];
            int nu = chain_total_degree(u), nv = chain_total_degree(v);
            if (-(nu + nv) + 1 > ck.max_level()) continue;
            auto lhs = apply_differential(shuffle_product(u, v));
            Rational s = nu % 2 ? -1 : 1;
            auto rhs = add(shuffle_product(apply_differential(u), v),
                           scale(shuffle_product(u, apply_differential(v)), s));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("shuffle associativity on samples") {
    auto s1 = standard_model("circle_minimal");
    auto ext = GradedAlgebra::builtin("exterior1");
    HochschildComplex c(s1, ext, opts(-3));
    std::vector<Chain> xs;
    for (int d = -1; d <= 0; ++d)
        for (int64_t r = 0; r < c.block_dim(1, d); ++r) xs.push_back(basis_chain(c, 1, d, r));
    for (size_t a = 0; a < xs.size(); a += 2)
        for (size_t b = 1; b < xs.size(); b += 3) {
            auto lhs = shuffle_product(shuffle_product(xs[a], xs[b]), unit_chain(c));
            auto mid = shuffle_product(xs[a], xs[b]);
            CHECK(lhs == mid);
            if (c.max_level() >= 3) {
                auto l = shuffle_product(shuffle_product(xs[a], xs[b]), xs[a]);
                auto r = shuffle_product(xs[a], shuffle_product(xs[b], xs[a]));
                CHECK(l == r);
            }
        }
}

TEST_CASE("induced maps commute with shuffle at chain level") {
    auto s1 = standard_model("circle_minimal");
    auto pt = standard_model("point");
    auto ext = GradedAlgebra::builtin("exterior1");
    HochschildComplex cs(s1, ext, opts(-3)), cp(pt, ext, opts(-3));
    auto col = SimplicialMap::collapse_to_point(s1, pt);
    std::vector<Chain> xs;
    for (int d = -1; d <= 0; ++d)
        for (int64_t r = 0; r < cs.block_dim(1, d); ++r) xs.push_back(basis_chain(cs, 1, d, r));
    for (size_t a = 0; a < xs.size(); ++a)
        for (size_t b = a; b < xs.size(); b += 2) {
            auto lhs = induced_map_apply(col, cs, cp, shuffle_product(xs[a], xs[b]));
            auto rhs = shuffle_product(induced_map_apply(col, cs, cp, xs[a]),
                                       induced_map_apply(col, cs, cp, xs[b]));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("pushout comparison: two intervals make a circle") {
    auto gm = two_interval_gluing();
    auto A = GradedAlgebra::builtin("dual_numbers");
    auto pc = pushout_comparison(gm.f, gm.g, gm.po, A, 0, 3);
    CHECK(pc.injectivity_hypothesis);
    CHECK(pc.iso);
    for (int k = 0; k <= 3; ++k) {
        CHECK(pc.target_dims[k] == (int64_t)1 << (2 * (k + 1)));
        CHECK(pc.domain_dims[k] == pc.target_dims[k]);
        CHECK(pc.image_ranks[k] == pc.target_dims[k]);
    }
}

TEST_CASE("pushout comparison with a graded algebra and deeper window") {
    auto gm = two_interval_gluing();
    auto A = GradedAlgebra::builtin("exterior1");
    auto pc = pushout_comparison(gm.f, gm.g, gm.po, A, -2, 3);
    CHECK(pc.iso);
}

TEST_CASE("streaming blocks agree with materialized ones") {
    auto I = standard_model("interval");
    auto A = GradedAlgebra::builtin("dual_numbers");
    HochschildComplex big(I, A, opts(-2));
    HochschildComplex::Options small = opts(-2);
    small.materialize_cap = 8;
    HochschildComplex tiny(I, A, small);

    for (int k = 0; k <= 3; ++k) {
        CHECK(big.block_dim(k, 0) == tiny.block_dim(k, 0));
        int64_t n = 0;
        tiny.for_each_monomial(k, 0, [&](const Monomial&) { ++n; });
        CHECK(n == tiny.block_dim(k, 0));
    }
    CHECK_FALSE(tiny.block_materialized(2, 0));
    CHECK_THROWS_AS(tiny.block_basis(2, 0), std::logic_error);

    // Column streaming off an unmaterialized source matches the matrix.
    auto D = big.total_differential(-2);
    std::vector<SparseVec> cols;
    tiny.for_each_column(-2, [&](const SparseVec& c) { cols.push_back(c); });
    REQUIRE((int64_t)cols.size() == D.cols());
    for (int64_t j = 0; j < D.cols(); ++j) CHECK(cols[j] == D.column(j));
}

TEST_CASE("basis budget is enforced") {
    auto I = standard_model("interval");
    auto A = GradedAlgebra::builtin("dual_numbers");
    HochschildComplex::Options o = opts(-3);
    o.max_block = 5;
    HochschildComplex c(I, A, o);
    CHECK_THROWS_AS(c.block_dim(2, 0), basis_budget_exceeded);
}

TEST_CASE("build preconditions") {
    auto I = standard_model("interval");
    auto A = GradedAlgebra::builtin("koszul");
    CHECK_THROWS_AS(HochschildComplex(I, A, opts(1)), std::invalid_argument);
    CHECK_THROWS_AS(HochschildComplex(I, A, opts(-2, false, GradedModule::regular(A))),
                    std::invalid_argument);  // interval is not pointed
}
