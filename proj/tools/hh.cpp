#include "hh/bar.hpp"
#include "hh/factorization.hpp"
#include "hh/homology.hpp"
#include "hh/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

using namespace hh;

namespace {

// Exit codes: 0 all verdicts pass, 1 invariant violation, 2 parse error,
// 3 basis budget (HH_MAX_BASIS) exceeded.
constexpr int kOk = 0, kViolation = 1, kParseError = 2, kBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SpacePtr load_space(const std::string& arg) {
    try {
        return standard_model(arg);
    } catch (const std::invalid_argument&) {
        return space_from_json(read_file(arg));
    }
}

AlgebraPtr load_algebra(const std::string& arg) {
    try {
        return GradedAlgebra::builtin(arg);
    } catch (const std::invalid_argument&) {
        return algebra_from_json(read_file(arg));
    }
}

ModulePtr load_module(const std::string& arg, AlgebraPtr a) {
    if (arg == "regular") return GradedModule::regular(a);
    if (arg == "augmentation") return GradedModule::augmentation(a);
    return module_from_json(a, read_file(arg));
}

int64_t basis_budget() {
    if (const char* s = std::getenv("HH_MAX_BASIS")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end == s || *end || v <= 0)
            throw std::invalid_argument("HH_MAX_BASIS must be a positive integer");
        return v;
    }
    return 200'000'000;
}

// Same dims as homology_dims, with per-degree ranks in a small thread pool.
std::map<int, int64_t> dims_jobs(const ComplexView& v, int n_min, int jobs) {
    if (jobs <= 1) return homology_dims(v, n_min);
    std::map<int, int64_t> ranks;
    std::vector<int> degs;
    for (int n = n_min - 1; n <= 0; ++n) degs.push_back(n);
    std::vector<std::future<int64_t>> futs;
    std::atomic<size_t> next{0};
    std::vector<int64_t> out(degs.size());
    auto worker = [&]() {
        for (size_t i = next++; i < degs.size(); i = next++)
            out[i] = rank(matrix_of(v, degs[i]));
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (size_t i = 0; i < degs.size(); ++i) ranks[degs[i]] = out[i];
    std::map<int, int64_t> dims;
    for (int n = n_min; n <= 0; ++n) dims[n] = v.dim(n) - ranks[n] - ranks[n - 1];
    return dims;
}

void print_report(const Report& r, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(r) << "\n";
        return;
    }
    if (!r.degrees.empty()) std::cout << "degree  dim\n";
    for (auto it = r.degrees.rbegin(); it != r.degrees.rend(); ++it)
        std::cout << (it->first < r.trusted_min ? "  *" : "   ") << it->first << "     "
                  << it->second << "\n";
    for (const auto& [name, ok] : r.verdicts)
        std::cout << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    std::cout << "trusted down to degree " << r.trusted_min
              << " (degrees are cohomological: classical HH_n is degree -n)\n";
}

std::string chain_text(const HochschildComplex& c, const Chain& u) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [b, vec] : u.parts)
        for (const auto& [row, coeff] : vec.entries) {
            out << (first ? "" : " + ") << rat_to_string(coeff) << "*";
            if (c.block_materialized(b.k, b.d))
                out << c.monomial_name(b.k, b.d, c.block_basis(b.k, b.d)[row]);
            else
                out << "(k=" << b.k << ",d=" << b.d << ",row=" << row << ")";
            first = false;
        }
    return out.str();
}

int cmd_compute(const std::string& space_arg, const std::string& algebra_arg,
                const std::string& module_arg, int window, bool normalized, bool reps, bool ring,
                bool as_json, int jobs) {
    auto space = load_space(space_arg);
    auto algebra = load_algebra(algebra_arg);
    HochschildComplex::Options o{.n_min = window, .normalized = normalized,
                                 .max_block = basis_budget()};
    if (!module_arg.empty()) o.module = load_module(module_arg, algebra);
    HochschildComplex c(space, algebra, o);
    Report rep;
    rep.trusted_min = window;
    if (reps || ring) {
        auto full = homology(c, true);
        for (const auto& [n, d] : full.dims) rep.degrees[n] = d;
        print_report(rep, as_json);
        if (!as_json && reps)
            for (const auto& [n, chains] : full.representatives)
                for (size_t i = 0; i < chains.size(); ++i)
                    std::cout << "rep[" << n << "][" << i
                              << "] = " << chain_text(c, chains[i]) << "\n";
        if (!as_json && ring) {
            auto table = ring_on_homology(c, full);
            for (const auto& [key, coeffs] : table.products) {
                std::cout << "[" << key[0] << ":" << key[1] << "] * [" << key[2] << ":" << key[3]
                          << "] =";
                bool any = false;
                for (size_t i = 0; i < coeffs.size(); ++i)
                    if (!is_zero(coeffs[i])) {
                        std::cout << " " << (any ? "+ " : "") << rat_to_string(coeffs[i]) << "*["
                                  << key[0] + key[2] << ":" << i << "]";
                        any = true;
                    }
                if (!any) std::cout << " 0";
                std::cout << "\n";
            }
        }
        return kOk;
    }
    rep.degrees = dims_jobs(view_of(c), window, jobs);
    print_report(rep, as_json);
    return kOk;
}

int cmd_compare(const std::string& a_arg, const std::string& b_arg,
                const std::string& algebra_arg, int window, bool normalized, bool as_json,
                int jobs) {
    auto algebra = load_algebra(algebra_arg);
    HochschildComplex::Options o{.n_min = window, .normalized = normalized,
                                 .max_block = basis_budget()};
    HochschildComplex ca(load_space(a_arg), algebra, o);
    HochschildComplex cb(load_space(b_arg), algebra, o);
    auto da = dims_jobs(view_of(ca), window, jobs);
    auto db = dims_jobs(view_of(cb), window, jobs);
    Report rep;
    rep.trusted_min = window;
    bool all = true;
    for (int n = window; n <= 0; ++n) {
        rep.degrees[n] = da[n];
        bool eq = da[n] == db[n];
        rep.verdicts["equal at " + std::to_string(n)] = eq;
        all = all && eq;
    }
    if (as_json) {
        print_report(rep, true);
    } else {
        std::cout << "degree  a.dim  b.dim\n";
        for (int n = 0; n >= window; --n)
            std::cout << "   " << n << "     " << da[n] << "      " << db[n]
                      << (da[n] == db[n] ? "" : "   <- differ") << "\n";
        std::cout << (all ? "equal" : "NOT equal") << " on [" << window << ", 0]\n";
    }
    return all ? kOk : kViolation;
}

int cmd_cech(const std::string& space_arg, const std::string& algebra_arg,
             const std::string& cover_arg, int window, int cap, bool normalized, bool as_json) {
    auto space = load_space(space_arg);
    auto algebra = load_algebra(algebra_arg);
    CechOptions o{.n_min = window, .cap = cap, .normalized = normalized,
                  .max_block = basis_budget()};
    CombinatorialCover cover =
        cover_arg.empty()
            ? make_cover(space, {{"X", [&] {
                                      std::vector<gen_t> all(space->generator_count());
                                      for (gen_t g = 0; g < space->generator_count(); ++g) all[g] = g;
                                      return all;
                                  }()}})
            : cover_from_json(space, read_file(cover_arg));
    CechComplex cech(cover, algebra, o);
    Report rep;
    rep.trusted_min = cech.trusted_min();
    rep.degrees = cech.homology_dims();
    bool all = true;
    for (const auto& [n, ok] : cech_compare(cech)) {
        rep.verdicts["augmentation quasi-iso at " + std::to_string(n)] = ok;
        all = all && ok;
    }
    print_report(rep, as_json);
    return all ? kOk : kViolation;
}

int cmd_bar(const std::string& algebra_arg, int window, int cap, bool as_json) {
    auto algebra = load_algebra(algebra_arg);
    auto env = enveloping_module(algebra);
    BarComplex bar(env.module, env.ring, env.module, {.n_min = window, .cap = cap});
    Report rep;
    rep.trusted_min = bar.trusted_min();
    rep.degrees = bar.homology_dims();
    print_report(rep, as_json);
    return kOk;
}

// Deterministic homogeneous sample chain of total degree n.
Chain sample_chain(const HochschildComplex& c, int n, std::mt19937& rng) {
    Chain u{&c, {}};
    for (int k = 0; k <= std::min(3, c.max_level()); ++k) {
        int d = n + k;
        if (d > 0 || d < c.n_min()) continue;
        int64_t dim = c.block_dim(k, d);
        if (dim == 0) continue;
        u.add(BlockKey{k, d}, (int64_t)(rng() % dim),
              rat((int)(rng() % 7) - 3));
    }
    u.normalize();
    return u;
}

int cmd_check(const std::string& space_arg, const std::string& algebra_arg, int window,
              bool normalized, bool as_json) {
    auto space = load_space(space_arg);
    auto algebra = load_algebra(algebra_arg);
    Report rep;
    rep.trusted_min = window;
    auto verdict = [&](const std::string& name, const std::function<void()>& body) {
        try {
            body();
            rep.verdicts[name] = true;
        } catch (const std::exception& e) {
            rep.verdicts[name] = false;
            if (!as_json) std::cout << name << ": " << e.what() << "\n";
        }
    };
    verdict("simplicial identities", [&] { space->validate(); });
    verdict("algebra axioms", [&] { algebra->validate(); });
    HochschildComplex c(space, algebra,
                        {.n_min = window, .normalized = normalized, .max_block = basis_budget()});
    verdict("D^2 = 0", [&] {
        for (int n = window - 1; n < 0; ++n) {
            auto prod = c.total_differential(n + 1).multiply(c.total_differential(n));
            if (!prod.is_zero())
                throw std::logic_error("D^{n+1} D^n != 0 at n = " + std::to_string(n));
        }
    });
    // Shuffles of level <= 3 chains reach level 9, so the law checks run on
    // a deeper build of the same complex.
    HochschildComplex cs(space, algebra,
                         {.n_min = -9, .normalized = normalized, .max_block = basis_budget()});
    verdict("shuffle laws", [&] {
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 24; ++trial) {
            int n1 = -(int)(rng() % 3), n2 = -(int)(rng() % 3);
            Chain u = sample_chain(cs, n1, rng), v = sample_chain(cs, n2, rng), w =
                sample_chain(cs, -(int)(rng() % 2), rng);
            if (!(shuffle_product(u, v) == scale(shuffle_product(v, u),
                                                 rat((n1 * n2) % 2 ? -1 : 1))))
                throw std::logic_error("graded commutativity fails");
            if (!(shuffle_product(shuffle_product(u, v), w) ==
                  shuffle_product(u, shuffle_product(v, w))))
                throw std::logic_error("associativity fails");
            if (!(shuffle_product(unit_chain(cs), u) == u))
                throw std::logic_error("unitality fails");
            Chain lhs = apply_differential(shuffle_product(u, v));
            Chain rhs = add(shuffle_product(apply_differential(u), v),
                            scale(shuffle_product(u, apply_differential(v)),
                                  rat(n1 % 2 ? -1 : 1)));
            if (!(lhs == rhs)) throw std::logic_error("Leibniz fails");
        }
    });
    bool all = true;
    for (const auto& [name, ok] : rep.verdicts) all = all && ok;
    print_report(rep, as_json);
    return all ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher Hochschild homology of graded-commutative DGAs over finite "
                 "simplicial sets, exact over Q"};
    app.require_subcommand(1);

    std::string space = "point", a_space, b_space, algebra = "rationals", module, cover;
    int window = -4, cap = 5, bar_cap = 8, jobs = 1;
    bool normalized = false, reps = false, ring = false, as_json = false;

    auto add_common = [&](CLI::App* cmd, bool with_space) {
        if (with_space) cmd->add_option("--space", space, "builtin model or JSON file");
        cmd->add_option("--algebra", algebra, "builtin algebra or JSON file");
        cmd->add_option("--window", window, "lowest cohomological degree (<= 0)")
            ->check(CLI::Range(-12, 0));
        cmd->add_flag("--normalized", normalized, "use the normalized complex");
        cmd->add_flag("--json", as_json, "machine-readable JSON report");
        return cmd;
    };

    auto* compute = add_common(app.add_subcommand("compute", "homology of CH_X(A)"), true);
    compute->add_option("--module", module, "regular | augmentation | JSON file");
    compute->add_flag("--representatives", reps, "print representative cycles");
    compute->add_flag("--ring", ring, "print the product on homology");
    compute->add_option("--jobs", jobs, "parallel per-degree ranks")->check(CLI::Range(1, 64));

    auto* compare = add_common(app.add_subcommand("compare", "dims of two spaces side by side"),
                               false);
    compare->add_option("--a", a_space, "first space")->required();
    compare->add_option("--b", b_space, "second space")->required();
    compare->add_option("--jobs", jobs, "parallel per-degree ranks")->check(CLI::Range(1, 64));

    auto* cech = add_common(app.add_subcommand("cech", "Cech comparison for a cover"), true);
    cech->add_option("--cover", cover, "cover JSON file (default: the single open X)");
    cech->add_option("--cap", cap, "max tuple length")->check(CLI::Range(2, 12));

    auto* bar = add_common(app.add_subcommand("bar", "two-sided bar homology of A over A^e"),
                           false);
    bar->add_option("--cap", bar_cap, "bar truncation length")->check(CLI::Range(2, 16));

    add_common(app.add_subcommand("check", "invariant suite for a space and algebra"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kParseError;
    }

    try {
        if (app.got_subcommand("compute"))
            return cmd_compute(space, algebra, module, window, normalized, reps, ring, as_json,
                               jobs);
        if (app.got_subcommand("compare"))
            return cmd_compare(a_space, b_space, algebra, window, normalized, as_json, jobs);
        if (app.got_subcommand("cech"))
            return cmd_cech(space, algebra, cover, window, cap, normalized, as_json);
        if (app.got_subcommand("bar")) return cmd_bar(algebra, window, bar_cap, as_json);
        if (app.got_subcommand("check"))
            return cmd_check(space, algebra, window, normalized, as_json);
    } catch (const basis_budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kViolation;
    }
    return kParseError;
}
