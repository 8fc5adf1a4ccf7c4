#include "hh/bar.hpp"

#include "hh/hochschild.hpp"

#include <doctest.h>

using namespace hh;

namespace {

bool view_d_squared_zero(const ComplexView& v, int n_min) {
    for (int n = n_min - 1; n <= -1; ++n) {
        auto dn = matrix_of(v, n);
        auto dn1 = matrix_of(v, n + 1);
        if (!dn1.multiply(dn).is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("periodic Tor oracle gives 2,1,1,1,1") {
    auto dims = periodic_tor_oracle(-4);
    CHECK(dims.at(0) == 2);
    for (int n = -4; n < 0; ++n) CHECK(dims.at(n) == 1);
}

TEST_CASE("bar differential squares to zero") {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    auto kos = GradedAlgebra::builtin("koszul");
    auto ext = GradedAlgebra::builtin("exterior1");
    for (const auto& A : {dual, kos, ext}) {
        BarComplex b(GradedModule::regular(A), A, GradedModule::regular(A), {-3, 5});
        CHECK(view_d_squared_zero(b.view(), -3));
        auto env = enveloping_module(A);
        BarComplex e(env.module, env.ring, env.module, {-3, 5});
        CHECK(view_d_squared_zero(e.view(), -3));
    }
}

TEST_CASE("bar over the rationals is the tensor product of the modules") {
    auto q = GradedAlgebra::builtin("rationals");
    // A module with one generator in degree 0 and one in degree -1.
    auto mk = [&](const std::string& nm) {
        return GradedModule::table(q, nm, {{"u", 0}, {"v", -1}},
                                   {{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}}, {});
    };
    BarComplex b(mk("P"), q, mk("Q"), {-3, 6});
    auto dims = b.homology_dims();
    CHECK(dims.at(0) == 1);
    CHECK(dims.at(-1) == 2);
    CHECK(dims.at(-2) == 1);
    CHECK(dims.at(-3) == 0);
}

TEST_CASE("bar of the ring acting on itself is the homology of the algebra") {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    BarComplex b(GradedModule::regular(dual), dual, GradedModule::regular(dual), {-4, 8});
    auto dims = b.homology_dims();
    CHECK(dims.at(0) == 2);
    for (int n = -4; n < 0; ++n) CHECK(dims.at(n) == 0);

    auto kos = GradedAlgebra::builtin("koszul");
    BarComplex bk(GradedModule::regular(kos), kos, GradedModule::regular(kos), {-3, 6});
    auto dk = bk.homology_dims();
    CHECK(dk.at(0) == 1);
    for (int n = -3; n < 0; ++n) CHECK(dk.at(n) == 0);
}

TEST_CASE("Tor over the enveloping algebra matches the circle and the resolution") {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    auto env = enveloping_module(dual);
    BarComplex b(env.module, env.ring, env.module, {-4, 8});
    CHECK(b.trusted_min() == -4);
    auto dims = b.homology_dims();
    CHECK(dims == periodic_tor_oracle(-4));

    HochschildComplex::Options o;
    o.n_min = -4;
    HochschildComplex c(standard_model("circle_minimal"), dual, o);
    CHECK(dims == homology(c).dims);
}

TEST_CASE("truncation is honest: trusted degrees agree, the edge may not") {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    auto env = enveloping_module(dual);
    BarComplex small(env.module, env.ring, env.module, {-4, 3});
    CHECK(small.trusted_min() == -2);
    BarComplex full(env.module, env.ring, env.module, {-4, 8});
    auto ds = small.homology_dims();
    auto df = full.homology_dims();
    for (int n = small.trusted_min(); n <= 0; ++n) CHECK(ds.at(n) == df.at(n));
}

TEST_CASE("classical oracle equals the circle build entry for entry") {
    auto s1 = standard_model("circle_minimal");
    for (const char* alg : {"dual_numbers", "exterior1", "koszul"}) {
        auto A = GradedAlgebra::builtin(alg);
        for (const auto& M : {GradedModule::regular(A), GradedModule::augmentation(A)}) {
            ClassicalHochschild oracle(A, M, -3);
            HochschildComplex::Options o;
            o.n_min = -3;
            o.module = M;
            HochschildComplex c(s1, A, o);
            auto ov = oracle.view();
            auto cv = view_of(c);
            for (int k = 0; k <= oracle.max_level(); ++k)
                for (int d = -4; d <= 0; ++d) CHECK(oracle.level_dim(k, d) == c.block_dim(k, d));
            for (int n = -4; n <= -1; ++n) {
                CHECK(oracle.total_dim(n) == c.total_dim(n));
                CHECK(matrix_of(ov, n) == matrix_of(cv, n));
            }
        }
    }
}

TEST_CASE("classical oracle equals the unpointed circle for the regular module") {
    auto s1 = standard_model("circle_minimal");
    auto A = GradedAlgebra::builtin("exterior1");
    ClassicalHochschild oracle(A, GradedModule::regular(A), -3);
    HochschildComplex::Options o;
    o.n_min = -3;
    HochschildComplex c(s1, A, o);
    auto ov = oracle.view();
    auto cv = view_of(c);
    for (int n = -4; n <= -1; ++n) CHECK(matrix_of(ov, n) == matrix_of(cv, n));
}

TEST_CASE("classical oracle homology for the dual numbers") {
    auto A = GradedAlgebra::builtin("dual_numbers");
    ClassicalHochschild reg(A, GradedModule::regular(A), -4);
    auto dims = homology_dims(reg.view(), -4);
    CHECK(dims.at(0) == 2);
    for (int n = -4; n < 0; ++n) CHECK(dims.at(n) == 1);

    auto q = GradedAlgebra::builtin("rationals");
    ClassicalHochschild triv(q, GradedModule::regular(q), -3);
    auto dq = homology_dims(triv.view(), -3);
    CHECK(dq.at(0) == 1);
    for (int n = -3; n < 0; ++n) CHECK(dq.at(n) == 0);
}

TEST_CASE("bar input validation") {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    auto kos = GradedAlgebra::builtin("koszul");
    CHECK_THROWS_AS(BarComplex(GradedModule::regular(dual), kos, GradedModule::regular(kos), {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ClassicalHochschild(kos, GradedModule::regular(dual), -2), std::invalid_argument);
}
