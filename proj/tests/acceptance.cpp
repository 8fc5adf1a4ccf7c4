// Acceptance gate: twelve structural criteria, one pass/fail line each.
// Every check is exact over Q; a failing criterion prints the first reason.

#include "hh/bar.hpp"
#include "hh/factorization.hpp"
#include "hh/homology.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hh;

namespace {

int failures = 0;

void gate(int num, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "criterion " << num << " (" << label << "): pass" << std::endl;
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "criterion " << num << " (" << label << "): fail (" << e.what() << ")"
                  << std::endl;
    }
}

[[noreturn]] void fail(const std::string& why) { throw std::runtime_error(why); }

constexpr int64_t kBudget = 2'000'000;

HochschildComplex::Options opts(int n_min, bool normalized = false, ModulePtr m = nullptr,
                                int64_t budget = kBudget) {
    HochschildComplex::Options o;
    o.n_min = n_min;
    o.normalized = normalized;
    o.module = std::move(m);
    o.max_block = budget;
    return o;
}

std::map<int, int64_t> dims_of(SpacePtr x, AlgebraPtr a, int n_min, bool normalized = false,
                               int64_t budget = kBudget) {
    HochschildComplex c(std::move(x), std::move(a), opts(n_min, normalized, nullptr, budget));
    return homology_dims(view_of(c), n_min);
}

std::map<int, int64_t> convolve(const std::map<int, int64_t>& a, const std::map<int, int64_t>& b,
                                int n_min) {
    std::map<int, int64_t> c;
    for (int n = n_min; n <= 0; ++n) {
        int64_t s = 0;
        for (const auto& [i, ai] : a) {
            auto it = b.find(n - i);
            if (it != b.end()) s += ai * it->second;
        }
        c[n] = s;
    }
    return c;
}

std::string show(const std::map<int, int64_t>& d) {
    std::ostringstream s;
    for (auto it = d.rbegin(); it != d.rend(); ++it) s << (it == d.rbegin() ? "" : ",")
                                                       << it->second;
    return s.str();
}

bool d_squared_zero(const HochschildComplex& c) {
    for (int n = c.n_min() - 1; n <= -1; ++n)
        if (!c.total_differential(n + 1).multiply(c.total_differential(n)).is_zero()) return false;
    return true;
}

const std::vector<std::string> kModels = {"point",          "interval",   "square",
                                          "circle_minimal", "circle_two_cell", "delta2",
                                          "boundary_delta2", "sphere2",   "cylinder",
                                          "torus_glued"};
const std::vector<std::string> kAlgebras = {"dual_numbers", "exterior1", "poly2", "koszul"};

Chain sample_chain(const HochschildComplex& c, int n, std::mt19937& rng) {
    Chain u{&c, {}};
    for (int k = 0; k <= std::min(3, c.max_level()); ++k) {
        int d = n + k;
        if (d > 0 || d < c.n_min()) continue;
        int64_t dim = c.block_dim(k, d);
        if (dim == 0) continue;
        u.add(BlockKey{k, d}, (int64_t)(rng() % dim), rat((int)(rng() % 7) - 3));
    }
    u.normalize();
    return u;
}

void criterion_1() {
    std::string bad;
    for (const auto& model : kModels) {
        auto x = standard_model(model);
        for (const auto& alg : kAlgebras) {
            try {
                HochschildComplex c(x, GradedAlgebra::builtin(alg), opts(-6));
                if (!d_squared_zero(c)) fail("D^2 != 0 for " + model + " x " + alg);
            } catch (const basis_budget_exceeded&) {
                bad += (bad.empty() ? "" : "; ") + model + " x " + alg + " exceeds basis budget";
            }
        }
    }
    if (!bad.empty()) fail(bad + " at window -6");
}

void criterion_2() {
    auto s1 = standard_model("circle_minimal");
    for (const char* alg : {"dual_numbers", "exterior1"}) {
        auto a = GradedAlgebra::builtin(alg);
        auto check_pair = [&](const ClassicalHochschild& oracle, const HochschildComplex& c,
                              const std::string& what) {
            auto ov = oracle.view();
            auto cv = view_of(c);
            for (int k = 0; k <= 6; ++k)
                for (int d = -6; d <= 0; ++d)
                    if (oracle.level_dim(k, d) != c.block_dim(k, d))
                        fail("level dims differ for " + what);
            for (int n = -6; n <= -1; ++n)
                if (!(matrix_of(ov, n) == matrix_of(cv, n)))
                    fail("matrices differ at degree " + std::to_string(n) + " for " + what);
        };
        ClassicalHochschild plain(a, GradedModule::regular(a), -5);
        HochschildComplex cp(s1, a, opts(-5));
        check_pair(plain, cp, std::string(alg) + ", no module");
        for (const auto& m : {GradedModule::regular(a), GradedModule::augmentation(a)}) {
            ClassicalHochschild o(a, m, -5);
            HochschildComplex c(s1, a, opts(-5, false, m));
            check_pair(o, c, std::string(alg) + ", module " + m->name());
        }
    }
}

void criterion_3() {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    std::map<int, int64_t> expected{{0, 2}, {-1, 1}, {-2, 1}, {-3, 1}, {-4, 1}, {-5, 1}};
    auto simplicial = dims_of(standard_model("circle_minimal"), dual, -5);
    ClassicalHochschild oracle(dual, GradedModule::regular(dual), -5);
    auto classical = homology_dims(oracle.view(), -5);
    auto tor = periodic_tor_oracle(-5);
    if (simplicial != expected) fail("simplicial build gives " + show(simplicial));
    if (classical != expected) fail("classical oracle gives " + show(classical));
    if (tor != expected) fail("periodic Tor oracle gives " + show(tor));
}

void criterion_4() {
    std::string bad;
    for (const auto& alg : kAlgebras) {
        auto a = GradedAlgebra::builtin(alg);
        auto s1 = dims_of(standard_model("circle_minimal"), a, -4);
        try {
            if (dims_of(standard_model("circle_two_cell"), a, -4) != s1)
                fail("two-cell circle differs from the minimal circle for " + alg);
        } catch (const basis_budget_exceeded&) {
            bad += (bad.empty() ? "" : "; ") + std::string("circle_two_cell x ") + alg +
                   " exceeds basis budget";
        }
        try {
            if (dims_of(standard_model("cylinder"), a, -4) != s1)
                fail("cylinder differs from the circle for " + alg);
        } catch (const basis_budget_exceeded&) {
            bad += (bad.empty() ? "" : "; ") + std::string("cylinder x ") + alg +
                   " exceeds basis budget";
        }
    }
    if (!bad.empty()) fail(bad + " at window -4");
}

void criterion_5() {
    const int w = -4;
    const int64_t budget = 8'000'000;
    std::vector<std::string> spaces = {"point", "circle_minimal", "sphere2"};
    for (const auto& alg : kAlgebras) {
        auto a = GradedAlgebra::builtin(alg);
        std::map<std::string, std::map<int, int64_t>> base;
        for (const auto& s : spaces) base[s] = dims_of(standard_model(s), a, w, false, budget);
        for (size_t i = 0; i < spaces.size(); ++i)
            for (size_t j = i; j < spaces.size(); ++j) {
                auto u = disjoint_union(standard_model(spaces[i]), standard_model(spaces[j]));
                auto got = dims_of(u.space, a, w, false, budget);
                auto want = convolve(base[spaces[i]], base[spaces[j]], w);
                if (got != want)
                    fail(spaces[i] + " u " + spaces[j] + " x " + alg + ": " + show(got) +
                         " != " + show(want));
            }
    }
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"dual_numbers", "exterior1"}, {"exterior1", "poly2"}, {"dual_numbers", "dual_numbers"},
        {"koszul", "exterior1"}};
    for (const auto& s : spaces) {
        auto x = standard_model(s);
        for (const auto& [na, nb] : pairs) {
            auto a = GradedAlgebra::builtin(na), b = GradedAlgebra::builtin(nb);
            auto got = dims_of(x, tensor_algebra(a, b), w, false, budget);
            auto want = convolve(dims_of(x, a, w, false, budget),
                                 dims_of(x, b, w, false, budget), w);
            if (got != want)
                fail(s + " x (" + na + " (x) " + nb + "): " + show(got) + " != " + show(want));
        }
    }
}

void criterion_6() {
    auto run = [&](const GluedModel& gm, const std::string& alg, int d_min, const char* what) {
        auto pc = pushout_comparison(gm.f, gm.g, gm.po, GradedAlgebra::builtin(alg), d_min, 4);
        if (!pc.iso) fail(std::string(what) + " x " + alg + ": not a levelwise isomorphism");
    };
    run(two_interval_gluing(), "dual_numbers", 0, "two intervals -> circle");
    run(two_interval_gluing(), "exterior1", -3, "two intervals -> circle");
    run(cylinder_gluing(), "exterior1", -3, "square u interval -> cylinder");
    run(torus_gluing(), "exterior1", -3, "cylinder u interval -> torus");
}

void criterion_7() {
    auto torus = standard_model("torus_glued");
    auto prod = product(standard_model("circle_minimal"), standard_model("circle_minimal")).space;
    for (const char* alg : {"dual_numbers", "exterior1"}) {
        auto a = GradedAlgebra::builtin(alg);
        // The level-4 normalized blocks of both models hold ~31M monomials
        // for the dual numbers; this is the slow criterion.
        auto dt = dims_of(torus, a, -3, true, 40'000'000);
        auto dp = dims_of(prod, a, -3, true, 40'000'000);
        if (dt != dp) fail(std::string(alg) + ": torus " + show(dt) + " != product " + show(dp));
    }
}

void criterion_8() {
    auto kos = GradedAlgebra::builtin("koszul");
    std::map<int, int64_t> expected{{0, 1}, {-1, 0}, {-2, 0}, {-3, 0}};
    for (const auto& model : kModels) {
        auto d = dims_of(standard_model(model), kos, -3);
        if (d != expected) fail(model + ": " + show(d));
    }
}

void criterion_9() {
    auto circle = standard_model("circle_two_cell");
    std::vector<gen_t> all = {0, 1, 2, 3};
    std::string bad;
    for (const char* alg : {"dual_numbers", "exterior1"}) {
        auto a = GradedAlgebra::builtin(alg);
        for (const auto& [what, cover] :
             {std::pair<std::string, CombinatorialCover>{
                  "single open", make_cover(circle, {{"X", all}})},
              {"two arcs", make_cover(circle, {{"U1", {0, 1, 2}}, {"U2", {0, 1, 3}}})}}) {
            CechComplex cech(cover, a, {.n_min = -3, .cap = 5});
            for (const auto& [n, ok] : cech_compare(cech))
                if (!ok)
                    bad += (bad.empty() ? "" : "; ") + what + " x " + alg +
                           " fails at degree " + std::to_string(n);
        }
    }
    if (!bad.empty()) fail(bad);
}

void criterion_10() {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    auto env = enveloping_module(dual);
    BarComplex b(env.module, env.ring, env.module, {.n_min = -4, .cap = 8});
    auto bar_dims = b.homology_dims();
    auto circle = dims_of(standard_model("circle_minimal"), dual, -4);
    for (int n = b.trusted_min(); n <= 0; ++n)
        if (bar_dims.at(n) != circle.at(n))
            fail("bar " + show(bar_dims) + " != circle " + show(circle));
}

void criterion_11() {
    auto kos = GradedAlgebra::builtin("koszul");
    for (const char* model : {"point", "interval", "circle_minimal"}) {
        HochschildComplex c(standard_model(model), kos, opts(-9));
        std::mt19937 rng(2026);
        for (int trial = 0; trial < 200; ++trial) {
            int n1 = -(int)(rng() % 3), n2 = -(int)(rng() % 3);
            Chain u = sample_chain(c, n1, rng), v = sample_chain(c, n2, rng);
            Chain w = sample_chain(c, -(int)(rng() % 2), rng);
            if (!(shuffle_product(u, v) ==
                  scale(shuffle_product(v, u), rat((n1 * n2) % 2 ? -1 : 1))))
                fail(std::string(model) + ": graded commutativity fails");
            if (!(shuffle_product(shuffle_product(u, v), w) ==
                  shuffle_product(u, shuffle_product(v, w))))
                fail(std::string(model) + ": associativity fails");
            if (!(shuffle_product(unit_chain(c), u) == u))
                fail(std::string(model) + ": unitality fails");
            Chain lhs = apply_differential(shuffle_product(u, v));
            Chain rhs = add(shuffle_product(apply_differential(u), v),
                            scale(shuffle_product(u, apply_differential(v)),
                                  rat(n1 % 2 ? -1 : 1)));
            if (!(lhs == rhs)) fail(std::string(model) + ": Leibniz fails");
        }
    }
}

void criterion_12() {
    for (const auto& model : {"point", "interval", "circle_minimal", "circle_two_cell",
                              "sphere2"}) {
        for (const auto& alg : kAlgebras) {
            auto a = GradedAlgebra::builtin(alg);
            auto x = standard_model(model);
            if (dims_of(x, a, -4, false) != dims_of(x, a, -4, true))
                fail(std::string(model) + " x " + alg + ": normalized dims differ");
        }
    }
    for (const char* alg : {"exterior1", "poly2", "koszul"}) {
        auto a = GradedAlgebra::builtin(alg);
        auto x = standard_model("delta2");
        if (dims_of(x, a, -4, false) != dims_of(x, a, -4, true))
            fail(std::string("delta2 x ") + alg + ": normalized dims differ");
    }
}

}  // namespace

int main() {
    gate(1, "D^2 = 0 across models and algebras, window -6", criterion_1);
    gate(2, "classical oracle equality through level 6", criterion_2);
    gate(3, "dual numbers circle dims 2,1,1,1,1,1 triple-verified", criterion_3);
    gate(4, "homotopy invariance of the circle models and the cylinder", criterion_4);
    gate(5, "Kunneth convolution in both variables", criterion_5);
    gate(6, "strict gluing along the standard pushouts", criterion_6);
    gate(7, "torus equals the product of two circles", criterion_7);
    gate(8, "Koszul algebra computes like the rationals", criterion_8);
    gate(9, "Cech comparison for the single-open and two-arc covers", criterion_9);
    gate(10, "two-sided bar computes Tor over the enveloping algebra", criterion_10);
    gate(11, "shuffle algebra laws on 200 random samples per model", criterion_11);
    gate(12, "normalized and unnormalized homology agree", criterion_12);
    return failures == 0 ? 0 : 1;
}
