#include "doctest.h"

#include <random>

#include "hh/linalg.hpp"
#include "hh/sparse_matrix.hpp"

using namespace hh;

namespace {

SparseRationalMatrix dense(index_t, const std::vector<std::vector<long>>& m) {
    return SparseRationalMatrix::from_dense(m);
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(SparseRationalMatrix(3, 3)) == 0);
    CHECK(rank(SparseRationalMatrix::identity(3)) == 3);
    CHECK(rank(dense(2, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis") {
    auto k1 = kernel_basis(SparseRationalMatrix::identity(2));
    CHECK(k1.ambient_dim == 2);
    CHECK(k1.basis.empty());

    auto k2 = kernel_basis(SparseRationalMatrix(2, 3));
    CHECK(k2.basis.size() == 3);

    auto m = dense(2, {{1, 2}, {2, 4}});
    auto k3 = kernel_basis(m);
    REQUIRE(k3.basis.size() == 1);
    // m * v = 0 and v proportional to (2, -1)
    SparseVec img = m.apply(k3.basis[0]);
    CHECK(img.entries.empty());
    Rational a = k3.basis[0].get(0), b = k3.basis[0].get(1);
    CHECK(a == rat(-2) * b);
}

TEST_CASE("quotient dimension") {
    Subspace one{2, {SparseVec{{{0, rat(1)}}}}};
    Subspace two{2, {SparseVec{{{0, rat(1)}}}, SparseVec{{{1, rat(1)}}}}};
    Subspace zero{2, {}};
    CHECK(quotient_dim(one, one) == 0);
    CHECK(quotient_dim(zero, two) == 2);

    // d = [[0,1],[0,0]]: image and kernel both span e1.
    auto d = dense(2, {{0, 1}, {0, 0}});
    auto ker = kernel_basis(d);
    Subspace im = column_space(d);
    CHECK(quotient_dim(im, ker) == 0);
}

TEST_CASE("quotient containment failure is an error") {
    Subspace sub{2, {SparseVec{{{1, rat(1)}}}}};
    Subspace inside{2, {SparseVec{{{0, rat(1)}}}}};
    CHECK_THROWS_AS(quotient_dim(sub, inside), containment_error);
}

TEST_CASE("representatives") {
    Subspace c1{3, {SparseVec{{{0, rat(1)}}}}};
    CHECK(representatives(c1, c1).empty());

    Subspace b0{3, {}};
    auto r1 = representatives(c1, b0);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].get(0) == rat(1));

    Subspace c3{3,
                {SparseVec{{{0, rat(1)}}}, SparseVec{{{1, rat(1)}}}, SparseVec{{{2, rat(1)}}}}};
    Subspace b1{3, {SparseVec{{{0, rat(1)}, {1, rat(1)}}}}};
    auto r2 = representatives(c3, b1);
    CHECK(r2.size() == 2);
    // Independent modulo boundaries: stacking b1 + reps has rank 3.
    RankAccumulator acc;
    acc.add_column(b1.basis[0]);
    for (const auto& v : r2) acc.add_column(v);
    CHECK(acc.rank() == 3);
}

TEST_CASE("rank-nullity and transpose invariance on random sparse matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> val(-5, 5);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 6; ++trial) {
        index_t rows = 20 + 30 * trial, cols = 35 + 25 * trial;
        std::vector<std::tuple<index_t, index_t, Rational>> trip;
        for (index_t r = 0; r < rows; ++r)
            for (index_t c = 0; c < cols; ++c)
                if (coin(rng) < 0.05) {
                    int v = val(rng);
                    if (v) trip.emplace_back(r, c, rat(v));
                }
        auto m = SparseRationalMatrix::from_triplets(rows, cols, trip);
        index_t r = rank(m);
        CHECK(r + (index_t)kernel_basis(m).basis.size() == cols);
        CHECK(rank(m.transpose()) == r);

        // Exactness: rescaling rows by nonzero rationals preserves rank.
        std::vector<std::tuple<index_t, index_t, Rational>> scaled;
        for (auto& [i, j, v] : trip) scaled.emplace_back(i, j, v * rat(7, 3 + (int)(i % 5)));
        CHECK(rank(SparseRationalMatrix::from_triplets(rows, cols, scaled)) == r);
    }
}

TEST_CASE("streaming rank accumulator matches batch rank") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    index_t rows = 40, cols = 60;
    std::vector<std::tuple<index_t, index_t, Rational>> trip;
    RankAccumulator acc;
    std::vector<SparseVec> colv(cols);
    for (index_t c = 0; c < cols; ++c) {
        for (index_t r = 0; r < rows; ++r)
            if (coin(rng) < 0.1) {
                int v = val(rng);
                if (v) {
                    trip.emplace_back(r, c, rat(v));
                    colv[c].entries.emplace_back(r, rat(v));
                }
            }
        acc.add_column(colv[c]);
    }
    CHECK((index_t)acc.rank() == rank(SparseRationalMatrix::from_triplets(rows, cols, trip)));
}

TEST_CASE("linear solver expresses targets in terms of added vectors") {
    LinearSolver solver;
    solver.add(SparseVec{{{0, rat(1)}, {1, rat(2)}}});
    solver.add(SparseVec{{{1, rat(1)}, {2, rat(1)}}});
    std::vector<Rational> coeffs;
    SparseVec target{{{0, rat(2)}, {1, rat(5)}, {2, rat(1)}}};
    REQUIRE(solver.solve(target, coeffs));
    CHECK(coeffs[0] == rat(2));
    CHECK(coeffs[1] == rat(1));
    SparseVec bad{{{0, rat(1)}}};
    CHECK_FALSE(solver.solve(bad, coeffs));
}

TEST_CASE("sparse matrix multiply and apply") {
    auto a = dense(2, {{1, 2}, {3, 4}});
    auto b = dense(2, {{0, 1}, {1, 0}});
    auto ab = a.multiply(b);
    CHECK(ab.column(0).get(0) == rat(2));
    CHECK(ab.column(0).get(1) == rat(4));
    CHECK(ab.column(1).get(0) == rat(1));
    CHECK(ab.column(1).get(1) == rat(3));
    CHECK(a.multiply(SparseRationalMatrix::identity(2)) == a);
}
