#include "hh/json_io.hpp"

#include "hh/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace hh {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("json parse error: ") + e.what());
    }
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string as_str(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Rational as_rat(const json& j) {
    try {
        return rat_from_string(as_str(j, "coefficient"));
    } catch (const std::invalid_argument&) {
        bad("coefficient must be \"num\" or \"num/den\"");
    }
}

std::vector<GradedAlgebra::BasisElement> basis_list(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<GradedAlgebra::BasisElement> out;
    for (const auto& e : j)
        out.push_back({as_str(field(e, "name"), "name"), as_int(field(e, "degree"), "degree")});
    return out;
}

std::vector<std::tuple<int, int, int, Rational>> triple_list(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<std::tuple<int, int, int, Rational>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4) bad(std::string(what) + " entries are [i,j,k,coeff]");
        out.emplace_back(as_int(e[0], "index"), as_int(e[1], "index"), as_int(e[2], "index"),
                         as_rat(e[3]));
    }
    return out;
}

std::vector<std::tuple<int, int, Rational>> pair_list(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<std::tuple<int, int, Rational>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) bad(std::string(what) + " entries are [i,j,coeff]");
        out.emplace_back(as_int(e[0], "index"), as_int(e[1], "index"), as_rat(e[2]));
    }
    return out;
}

}  // namespace

SpacePtr space_from_json(const std::string& text) {
    json j = parse(text);
    const json& jg = field(j, "generators");
    if (!jg.is_array()) bad("generators must be an array");
    std::vector<FiniteSimplicialSet::Generator> gens;
    std::map<std::string, gen_t> by_name;
    for (const auto& e : jg) {
        std::string id = as_str(field(e, "id"), "generator id");
        if (by_name.count(id)) bad("duplicate generator id: " + id);
        by_name[id] = (gen_t)gens.size();
        gens.push_back({id, as_int(field(e, "dim"), "dim")});
    }
    auto ref_of = [&](const json& e) {
        if (!e.is_array() || e.size() != 2) bad("face entries are [gen_id, word]");
        auto it = by_name.find(as_str(e[0], "face generator"));
        if (it == by_name.end()) bad("unknown generator in face: " + as_str(e[0], ""));
        SimplexRef r{it->second, {}};
        if (!e[1].is_array()) bad("degeneracy word must be an array");
        for (const auto& w : e[1]) r.word.push_back(as_int(w, "degeneracy index"));
        if (!std::is_sorted(r.word.begin(), r.word.end()) ||
            std::adjacent_find(r.word.begin(), r.word.end()) != r.word.end())
            bad("degeneracy word must be strictly increasing");
        return r;
    };
    std::vector<std::vector<SimplexRef>> faces(gens.size());
    const json& jf = field(j, "faces");
    if (!jf.is_object()) bad("faces must be an object");
    for (const auto& [id, lst] : jf.items()) {
        auto it = by_name.find(id);
        if (it == by_name.end()) bad("faces for unknown generator: " + id);
        if (!lst.is_array()) bad("face list must be an array");
        for (const auto& e : lst) faces[it->second].push_back(ref_of(e));
    }
    std::optional<gen_t> base;
    if (j.contains("basepoint") && !j["basepoint"].is_null()) {
        auto it = by_name.find(as_str(j["basepoint"], "basepoint"));
        if (it == by_name.end()) bad("unknown basepoint generator");
        base = it->second;
    }
    try {
        auto space = std::make_shared<FiniteSimplicialSet>(std::move(gens), std::move(faces), base);
        space->validate();
        return space;
    } catch (const std::logic_error& e) {
        bad(std::string("invalid simplicial set: ") + e.what());
    }
}

std::string space_to_json(const FiniteSimplicialSet& x) {
    json jg = json::array(), jf = json::object();
    for (gen_t g = 0; g < x.generator_count(); ++g) {
        const auto& gen = x.generator(g);
        jg.push_back({{"id", gen.name}, {"dim", gen.dim}});
        if (gen.dim == 0) continue;
        json lst = json::array();
        for (int i = 0; i <= gen.dim; ++i) {
            SimplexRef f = x.face({g, {}}, i);
            lst.push_back({x.generator(f.gen).name, f.word});
        }
        jf[gen.name] = std::move(lst);
    }
    json j{{"generators", std::move(jg)}, {"faces", std::move(jf)}};
    j["basepoint"] =
        x.basepoint() ? json(x.generator(*x.basepoint()).name) : json(nullptr);
    return j.dump(2);
}

AlgebraPtr algebra_from_json(const std::string& text) {
    json j = parse(text);
    try {
        if (j.contains("free_generators")) {
            std::vector<GradedAlgebra::FreeGenerator> gens;
            std::map<std::string, int> by_name;
            for (const auto& e : field(j, "free_generators")) {
                std::string name = as_str(field(e, "name"), "name");
                by_name[name] = (int)gens.size();
                gens.push_back({name, as_int(field(e, "degree"), "degree")});
            }
            std::map<int, std::vector<GradedAlgebra::Monomial>> d;
            if (j.contains("d")) {
                if (!j["d"].is_object()) bad("d must be an object");
                for (const auto& [name, expr] : j["d"].items()) {
                    auto it = by_name.find(name);
                    if (it == by_name.end()) bad("d on unknown generator: " + name);
                    if (!expr.is_array()) bad("d expressions are monomial lists");
                    for (const auto& m : expr) {
                        if (!m.is_array() || m.size() != 2)
                            bad("monomials are [coeff, [factors]]");
                        GradedAlgebra::Monomial mon{as_rat(m[0]), {}};
                        for (const auto& f : m[1]) {
                            auto fit = by_name.find(as_str(f, "factor"));
                            if (fit == by_name.end()) bad("unknown factor in d");
                            mon.factors.push_back(fit->second);
                        }
                        d[it->second].push_back(std::move(mon));
                    }
                }
            }
            return GradedAlgebra::free_graded("custom", std::move(gens), d);
        }
        auto algebra = GradedAlgebra::table(
            "custom", basis_list(field(j, "basis"), "basis"),
            as_str(field(j, "unit"), "unit"), triple_list(field(j, "product"), "product"),
            pair_list(field(j, "differential"), "differential"));
        algebra->validate();
        return algebra;
    } catch (const std::logic_error& e) {
        bad(std::string("invalid algebra: ") + e.what());
    }
}

std::string algebra_to_json(const GradedAlgebra& a, int min_degree) {
    json basis = json::array(), prod = json::array(), diff = json::array();
    std::vector<std::pair<int, int>> flat;  // global index -> (degree, local)
    std::map<std::pair<int, int>, int> index_of;
    std::string unit;
    for (int d = 0; d >= min_degree; --d)
        for (int i = 0; i < a.dim_of_degree(d); ++i) {
            index_of[{d, i}] = (int)flat.size();
            flat.emplace_back(d, i);
            basis.push_back({{"name", a.basis_name(d, i)}, {"degree", d}});
            if (d == 0 && i == a.unit_index()) unit = a.basis_name(d, i);
        }
    for (int gi = 0; gi < (int)flat.size(); ++gi)
        for (int gj = 0; gj < (int)flat.size(); ++gj) {
            auto [d1, i] = flat[gi];
            auto [d2, jj] = flat[gj];
            if (d1 + d2 < min_degree) continue;
            for (const auto& [k, c] : a.product(d1, i, d2, jj).entries)
                prod.push_back({gi, gj, index_of.at({d1 + d2, (int)k}), rat_to_string(c)});
        }
    for (int gi = 0; gi < (int)flat.size(); ++gi) {
        auto [d, i] = flat[gi];
        if (d + 1 > 0) continue;
        for (const auto& [k, c] : a.differential(d, i).entries)
            diff.push_back({gi, index_of.at({d + 1, (int)k}), rat_to_string(c)});
    }
    json j{{"basis", std::move(basis)},
           {"unit", unit},
           {"product", std::move(prod)},
           {"differential", std::move(diff)}};
    return j.dump(2);
}

ModulePtr module_from_json(AlgebraPtr algebra, const std::string& text) {
    json j = parse(text);
    if (j.is_string()) {
        std::string kind = j.get<std::string>();
        if (kind == "regular") return GradedModule::regular(algebra);
        if (kind == "augmentation") return GradedModule::augmentation(algebra);
        bad("unknown module kind: " + kind);
    }
    try {
        auto mod = GradedModule::table(
            algebra, "custom", basis_list(field(j, "basis"), "basis"),
            triple_list(field(j, "action"), "action"),
            pair_list(field(j, "differential"), "differential"));
        mod->validate();
        return mod;
    } catch (const std::logic_error& e) {
        bad(std::string("invalid module: ") + e.what());
    }
}

CombinatorialCover cover_from_json(SpacePtr space, const std::string& text) {
    json j = parse(text);
    const json& jo = field(j, "opens");
    if (!jo.is_object() || jo.empty()) bad("opens must be a non-empty object");
    std::vector<std::pair<std::string, std::vector<gen_t>>> opens;
    for (const auto& [name, lst] : jo.items()) {  // nlohmann objects iterate sorted
        if (!lst.is_array()) bad("open sets are arrays of generator ids");
        std::vector<gen_t> gens;
        for (const auto& g : lst) gens.push_back(as_int(g, "generator id"));
        opens.emplace_back(name, std::move(gens));
    }
    try {
        return make_cover(std::move(space), opens);
    } catch (const std::logic_error& e) {
        bad(std::string("invalid cover: ") + e.what());
    }
}

std::string report_to_json(const Report& r) {
    json degrees = json::object(), verdicts = json::object();
    for (const auto& [n, dim] : r.degrees) degrees[std::to_string(n)] = dim;
    for (const auto& [name, ok] : r.verdicts) verdicts[name] = ok;
    json j{{"degrees", std::move(degrees)},
           {"trusted_min", r.trusted_min},
           {"verdicts", std::move(verdicts)}};
    return j.dump(2);
}

Report report_from_json(const std::string& text) {
    json j = parse(text);
    Report r;
    r.trusted_min = as_int(field(j, "trusted_min"), "trusted_min");
    const json& jd = field(j, "degrees");
    if (!jd.is_object()) bad("degrees must be an object");
    for (const auto& [key, v] : jd.items()) {
        size_t pos = 0;
        int n;
        try {
            n = std::stoi(key, &pos);
        } catch (const std::exception&) {
            bad("degree keys must be integers");
        }
        if (pos != key.size()) bad("degree keys must be integers");
        if (!v.is_number_integer()) bad("dims must be integers");
        r.degrees[n] = v.get<long>();
    }
    if (j.contains("verdicts")) {
        if (!j["verdicts"].is_object()) bad("verdicts must be an object");
        for (const auto& [name, v] : j["verdicts"].items()) {
            if (!v.is_boolean()) bad("verdicts must be booleans");
            r.verdicts[name] = v.get<bool>();
        }
    }
    return r;
}

}  // namespace hh
