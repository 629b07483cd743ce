#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dirackit/dirac_index.hpp"
#include "dirackit/realform.hpp"

namespace dirackit {

// One named entry of a job's parameter list: a standard parameter held as a
// one-term combination, or an integer combination of earlier entries
// (kind "virtual"), already flattened to standard parameters.
struct NamedParam {
    std::string name;
    std::vector<std::pair<Int, AnyStandardParam>> terms;
    bool is_virtual = false;
};

struct JobSpec {
    PairDatum pair;
    std::vector<CartanClass> cartans;  // classes of `pair`, indexed by cartan_k
    std::vector<NamedParam> params;
    IndexMode mode = IndexMode::ordinary;
    std::vector<double> angles;  // empty when the document has none
};

// Exact weight parsing: a JSON array whose entries are integers or halves
// written as strings "p/2".
Weight weight_from_json(const nlohmann::json& j);

// Doubled-coordinate array; consumers pair it with the document-level
// "denominator": 2 marker.
nlohmann::json weight_to_json(const Weight& w);

// {family_tag, root_family, rank, compact_roots?, m?}
PairDatum pair_from_json(const nlohmann::json& j);

// Full job document: {pair, params?, mode?, angles?}. Parameter kinds are
// "complex" (lambda in t-coordinates, w, epsilon), "real" (cartan_k index
// into the class listing, positive_system in signed-permutation notation,
// lambda in ambient coordinates, epsilon, case_tag), and "virtual"
// (terms: [[coefficient, name], ...] over earlier entries). A real
// parameter without a case_tag gets the inferred one: case1 when b is
// theta-stable and lambda is fixed, case3 when lambda moves, case2 else.
JobSpec job_from_json(const nlohmann::json& doc);

// Term listings, sorted by descending weight so dominant entries lead.
nlohmann::json module_to_json(const VirtualKModule& v);
nlohmann::json poly_to_json(const CharacterPoly& p);

}  // namespace dirackit
