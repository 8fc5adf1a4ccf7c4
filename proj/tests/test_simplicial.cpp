#include "doctest.h"

#include "hh/simplicial.hpp"

using namespace hh;

TEST_CASE("face rewriting identities") {
    auto circle = standard_model("circle_minimal");
    gen_t e = circle->generator_by_name("cell");

    SUBCASE("d_i s_i = id") {
        for (int k = 1; k <= 4; ++k)
            for (const auto& s : circle->level(k))
                for (int i = 0; i <= k; ++i)
                    CHECK(circle->face(FiniteSimplicialSet::degenerate(s, i), i) == s);
    }
    SUBCASE("d_0 s_1 = s_0 d_0") {
        SimplexRef sigma{e, {}};
        CHECK(circle->face(FiniteSimplicialSet::degenerate(sigma, 1), 0) ==
              FiniteSimplicialSet::degenerate(circle->face(sigma, 0), 0));
    }
    SUBCASE("face table lookup on circle") {
        CHECK(circle->face(SimplexRef{e, {}}, 0) == SimplexRef{circle->generator_by_name("pt"), {}});
    }
}

TEST_CASE("three-case degeneracy/face identity table") {
    for (const char* name : {"circle_minimal", "square", "delta2"}) {
        auto X = standard_model(name);
        for (int k = 1; k <= 4; ++k) {
            for (const auto& s : X->level(k)) {
                for (int j = 0; j <= k; ++j) {
                    SimplexRef sj = FiniteSimplicialSet::degenerate(s, j);
                    for (int i = 0; i <= k + 1; ++i) {
                        SimplexRef lhs = X->face(sj, i);
                        SimplexRef rhs;
                        if (i == j || i == j + 1)
                            rhs = s;
                        else if (i < j)
                            rhs = FiniteSimplicialSet::degenerate(X->face(s, i), j - 1);
                        else
                            rhs = FiniteSimplicialSet::degenerate(X->face(s, i - 1), j);
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("simplicial identities on all standard models") {
    for (const char* name : {"point", "interval", "square", "circle_minimal", "circle_two_cell",
                             "cylinder", "torus_glued", "delta2", "delta3", "boundary_delta2",
                             "sphere2", "sphere3"}) {
        CAPTURE(name);
        CHECK_NOTHROW(standard_model(name)->validate());
    }
}

TEST_CASE("level counts of standard models") {
    auto d1 = standard_model("delta1");
    auto circ = standard_model("circle_minimal");
    auto s2 = standard_model("sphere2");
    auto sq = standard_model("square");
    for (int k = 0; k <= 6; ++k) {
        CHECK(d1->level_count(k) == k + 2);
        CHECK(circ->level_count(k) == k + 1);
        long c2 = k * (k - 1) / 2;
        CHECK(s2->level_count(k) == 1 + c2);
        CHECK(sq->level_count(k) == (long)(k + 2) * (k + 2));
        CHECK((long)d1->level(k).size() == d1->level_count(k));
        CHECK((long)sq->level(k).size() == sq->level_count(k));
    }
}

TEST_CASE("level order is deterministic and canonical") {
    auto circ = standard_model("circle_minimal");
    auto l2 = circ->level(2);
    REQUIRE(l2.size() == 3);
    CHECK(l2[0] == SimplexRef{0, {0, 1}});
    CHECK(l2[1] == SimplexRef{1, {0}});
    CHECK(l2[2] == SimplexRef{1, {1}});
}

TEST_CASE("simplicial maps validate and compose") {
    auto I = standard_model("interval");
    auto pt = standard_model("point");
    auto c = SimplicialMap::collapse_to_point(I, pt);
    CHECK_NOTHROW(c.validate());
    auto id = SimplicialMap::identity(I);
    CHECK_NOTHROW(id.validate());
    auto comp = SimplicialMap::compose(c, id);
    CHECK(comp.generator_images == c.generator_images);
    CHECK_FALSE(c.is_levelwise_injective(2));
    CHECK(id.is_levelwise_injective(3));
}

TEST_CASE("pushout of points is a point") {
    auto pt = standard_model("point");
    auto f = SimplicialMap::collapse_to_point(pt, pt);
    auto po = pushout(f, f);
    CHECK(po.space->generator_count() == 1);
    CHECK(po.space->level_count(3) == 1);
}

TEST_CASE("two intervals glued at both endpoint pairs give a 2-cell circle") {
    auto glued = two_interval_gluing();
    const auto& W = *glued.po.space;
    CHECK_NOTHROW(W.validate());
    int verts = 0, edges = 0;
    for (gen_t g = 0; g < W.generator_count(); ++g)
        (W.generator(g).dim == 0 ? verts : edges)++;
    CHECK(verts == 2);
    CHECK(edges == 2);
    for (int k = 0; k <= 3; ++k) CHECK(W.level_count(k) == 2 * (k + 1));
    CHECK_NOTHROW(glued.po.from_x.validate());
    CHECK_NOTHROW(glued.po.from_y.validate());
}

TEST_CASE("cylinder gluing identifies opposite edges of the square") {
    auto glued = cylinder_gluing();
    const auto& C = *glued.po.space;
    CHECK_NOTHROW(C.validate());
    CHECK_NOTHROW(glued.po.from_x.validate());
    CHECK_NOTHROW(glued.po.from_y.validate());
    // i o f = j o g
    auto lhs = SimplicialMap::compose(glued.po.from_x, glued.f);
    auto rhs = SimplicialMap::compose(glued.po.from_y, glued.g);
    CHECK(lhs.generator_images == rhs.generator_images);
    // S^1 x I: levelwise (k+1)(k+2) simplices.
    for (int k = 0; k <= 4; ++k) CHECK(C.level_count(k) == (long)(k + 1) * (k + 2));
}

TEST_CASE("torus gluing has (k+1)^2 simplices per level") {
    auto T = standard_model("torus_glued");
    CHECK_NOTHROW(T->validate());
    for (int k = 0; k <= 4; ++k) CHECK(T->level_count(k) == (long)(k + 1) * (k + 1));
}

TEST_CASE("product with a point is the identity") {
    auto pt = standard_model("point");
    auto sq = standard_model("square");
    auto p = product(pt, sq);
    CHECK(p.space->generator_count() == sq->generator_count());
    for (int k = 0; k <= 4; ++k) CHECK(p.space->level_count(k) == sq->level_count(k));
    CHECK_NOTHROW(p.space->validate());
    CHECK_NOTHROW(p.proj_y.validate());
}

TEST_CASE("product of minimal circles is a torus") {
    auto c = standard_model("circle_minimal");
    auto t = product(c, c);
    CHECK_NOTHROW(t.space->validate());
    CHECK_NOTHROW(t.proj_x.validate());
    CHECK_NOTHROW(t.proj_y.validate());
    CHECK(t.space->level_count(1) == 4);
    CHECK(t.space->level_count(2) == 9);
    for (int k = 0; k <= 5; ++k) {
        CHECK(t.space->level_count(k) == (long)(k + 1) * (k + 1));
        CHECK((long)t.space->level(k).size() == t.space->level_count(k));
    }
}

TEST_CASE("delta1 x delta1 matches the built-in square levelwise") {
    auto d1 = standard_model("delta1");
    auto p = product(d1, d1);
    auto sq = standard_model("square");
    CHECK_NOTHROW(p.space->validate());
    for (int k = 0; k <= 5; ++k) CHECK(p.space->level_count(k) == sq->level_count(k));
    // Same generator count in each dimension.
    for (int d = 0; d <= 2; ++d) {
        int a = 0, b = 0;
        for (gen_t g = 0; g < p.space->generator_count(); ++g)
            if (p.space->generator(g).dim == d) ++a;
        for (gen_t g = 0; g < sq->generator_count(); ++g)
            if (sq->generator(g).dim == d) ++b;
        CHECK(a == b);
    }
}

TEST_CASE("disjoint union and subcomplex") {
    auto I = standard_model("interval");
    auto du = disjoint_union(I, I);
    CHECK(du.space->generator_count() == 6);
    CHECK_NOTHROW(du.space->validate());
    CHECK_NOTHROW(du.from_x.validate());
    CHECK_NOTHROW(du.from_y.validate());
    for (int k = 0; k <= 3; ++k)
        CHECK(du.space->level_count(k) == 2 * I->level_count(k));

    auto d2 = standard_model("delta2");
    std::vector<gen_t> verts;
    for (gen_t g = 0; g < d2->generator_count(); ++g)
        if (d2->generator(g).dim == 0) verts.push_back(g);
    auto sub = subcomplex(d2, verts);
    CHECK(sub.space->generator_count() == 3);
    CHECK_NOTHROW(sub.inclusion.validate());
    CHECK_THROWS(subcomplex(d2, {d2->generator_by_name("012")}));
}

TEST_CASE("pushout induced map") {
    // Collapse both intervals of the 2-cell circle gluing to a point: the
    // mediating map exists and collapses the circle.
    auto glued = two_interval_gluing();
    auto pt = standard_model("point");
    auto cx = SimplicialMap::collapse_to_point(glued.f.target, pt);
    auto cy = SimplicialMap::collapse_to_point(glued.g.target, pt);
    auto m = pushout_induced_map(glued.po, cx, cy);
    CHECK_NOTHROW(m.validate());
}

TEST_CASE("basepoint handling") {
    auto c = standard_model("circle_minimal");
    REQUIRE(c->is_pointed());
    CHECK(c->basepoint_at(2) == SimplexRef{*c->basepoint(), {0, 1}});
    auto sq = standard_model("square");
    CHECK_FALSE(sq->is_pointed());
}
