#pragma once

#include "hh/cdga.hpp"
#include "hh/factorization.hpp"
#include "hh/simplicial.hpp"

#include <map>
#include <string>

namespace hh {

// All parsers take JSON text and throw std::invalid_argument on malformed
// input (syntax errors included), so callers see one error type.

// { "generators": [{"id": str, "dim": int}],
//   "faces": {"id": [[gen_id, [j_1 < j_2 < ...]], ...]},
//   "basepoint": str|null }
SpacePtr space_from_json(const std::string& text);
std::string space_to_json(const FiniteSimplicialSet& x);

// Table backend:
//   { "basis": [{"name": str, "degree": int}], "unit": str,
//     "product": [[i, j, k, "num/den"]], "differential": [[i, j, "num/den"]] }
// with i, j, k global basis indices.  Free backend:
//   { "free_generators": [{"name": str, "degree": int}],
//     "d": {"gen": [["num/den", [factor names]], ...]} }
AlgebraPtr algebra_from_json(const std::string& text);
std::string algebra_to_json(const GradedAlgebra& a, int min_degree);

// "regular" | "augmentation" |
//   { "basis": [...], "action": [[i, j, k, "num/den"]],
//     "differential": [[i, j, "num/den"]] }
ModulePtr module_from_json(AlgebraPtr algebra, const std::string& text);

// { "opens": {"name": [generator ids]} }; intersections are completed by
// make_cover.  Opens are added in name order, so parsing is deterministic.
CombinatorialCover cover_from_json(SpacePtr space, const std::string& text);

struct Report {
    std::map<int, long> degrees;  // degree -> dim, degrees <= 0
    int trusted_min = 0;
    std::map<std::string, bool> verdicts;

    bool operator==(const Report&) const = default;
};

// { "degrees": {"-n": dim}, "trusted_min": int, "verdicts": {...} }.
// Serialization is canonical (sorted keys, two-space indent), so
// report_to_json(report_from_json(s)) == s for emitted documents.
std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);

}  // namespace hh
