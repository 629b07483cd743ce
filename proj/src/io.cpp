#include "dirackit/io.hpp"

#include <map>
#include <set>

#include "dirackit/errors.hpp"

namespace dirackit {

namespace {

using nlohmann::json;

Int parse_half_string(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return 2 * static_cast<Int>(std::stoll(text));
        }
        if (text.substr(slash + 1) != "2") {
            throw ConfigError("weight entries must be integers or halves: " + text);
        }
        return static_cast<Int>(std::stoll(text.substr(0, slash)));
    } catch (const std::logic_error&) {
        throw ConfigError("malformed weight entry: " + text);
    }
}

char parse_root_family(const json& j) {
    std::string family = j.get<std::string>();
    if (family.size() != 1) throw ConfigError("root_family must be one letter");
    return family[0];
}

const json& require_field(const json& j, const char* key, const char* context) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ConfigError(std::string(context) + " needs a \"" + key + "\" field");
    }
    return *it;
}

CaseTag case_tag_from_string(const std::string& name) {
    if (name == "case1") return CaseTag::case1;
    if (name == "case2") return CaseTag::case2;
    if (name == "case3") return CaseTag::case3;
    throw ConfigError("unknown case_tag: " + name);
}

CaseTag infer_case_tag(const PairDatum& pair, const CartanClass& cartan,
                       const WeylElement& w_b, const Weight& lambda) {
    bool stable = positive_system_theta_stable(pair, cartan, w_b);
    bool fixed = apply(cartan.theta_h, lambda) == lambda;
    if (stable && fixed) return CaseTag::case1;
    if (!fixed) return CaseTag::case3;
    return CaseTag::case2;
}

AnyStandardParam param_from_json(const json& j, const PairDatum& pair,
                                 const std::vector<CartanClass>& cartans,
                                 const std::string& kind) {
    int epsilon = j.value("epsilon", 1);
    if (kind == "complex") {
        if (pair.tag != FamilyTag::complex_pair) {
            throw ConfigError("complex parameters need a complex pair");
        }
        Weight lambda = weight_from_json(require_field(j, "lambda", "complex parameter"));
        std::string w_text = j.value("w", "e");
        WeylElement w = weyl_from_matrix(parse_signed_perm(w_text, pair.t_rank), pair.k);
        return StandardParamComplex{lambda, w, epsilon};
    }
    if (kind != "real") throw ConfigError("unknown parameter kind: " + kind);
    int cartan_k = j.value("cartan_k", 0);
    if (cartan_k < 0 || cartan_k >= static_cast<int>(cartans.size())) {
        throw ConfigError("cartan_k is outside the class listing");
    }
    const CartanClass& cartan = cartans[static_cast<size_t>(cartan_k)];
    Weight lambda = weight_from_json(require_field(j, "lambda", "real parameter"));
    std::string b_text = j.value("positive_system", "e");
    WeylElement w_b = weyl_from_matrix(parse_signed_perm(b_text, pair.ambient_rank()), pair.g);
    CaseTag tag;
    if (j.contains("case_tag")) {
        tag = case_tag_from_string(j.at("case_tag").get<std::string>());
    } else {
        if (lambda.rank() != pair.ambient_rank()) {
            throw ShapeError("lambda rank does not match the pair");
        }
        tag = infer_case_tag(pair, cartan, w_b, lambda);
    }
    return StandardParamReal{cartan, w_b, lambda, epsilon, tag};
}

}  // namespace

Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("weights must be arrays");
    std::vector<Int> doubled;
    doubled.reserve(j.size());
    for (const json& entry : j) {
        if (entry.is_number_integer()) {
            doubled.push_back(2 * entry.get<Int>());
        } else if (entry.is_string()) {
            doubled.push_back(parse_half_string(entry.get<std::string>()));
        } else {
            throw ConfigError("weight entries must be integers or \"p/2\" strings");
        }
    }
    return weight_from_doubled(doubled);
}

json weight_to_json(const Weight& w) {
    json out = json::array();
    for (int i = 0; i < w.rank(); ++i) out.push_back(w.c2[i]);
    return out;
}

PairDatum pair_from_json(const json& j) {
    std::string tag = require_field(j, "family_tag", "pair").get<std::string>();
    if (tag == "complex") {
        char family = parse_root_family(require_field(j, "root_family", "complex pair"));
        int rank = require_field(j, "rank", "complex pair").get<int>();
        return build_complex_pair(family, rank);
    }
    if (tag == "equal_rank") {
        char family = parse_root_family(require_field(j, "root_family", "equal-rank pair"));
        int rank = require_field(j, "rank", "equal-rank pair").get<int>();
        std::vector<Weight> compact;
        if (j.contains("compact_roots")) {
            for (const json& r : j.at("compact_roots")) compact.push_back(weight_from_json(r));
        }
        return build_equal_rank_pair(family, rank, std::move(compact));
    }
    if (tag == "gl_real") {
        int m = require_field(j, "m", "gl_real pair").get<int>();
        return build_gl_real_pair(m);
    }
    throw ConfigError("unknown family_tag: " + tag);
}

JobSpec job_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("the job document must be a JSON object");
    JobSpec job;
    job.pair = pair_from_json(require_field(doc, "pair", "job"));
    job.cartans = cartan_classes(job.pair);

    std::string mode = doc.value("mode", "ordinary");
    if (mode == "ordinary") {
        job.mode = IndexMode::ordinary;
    } else if (mode == "twisted") {
        job.mode = IndexMode::twisted;
    } else {
        throw ConfigError("mode must be \"ordinary\" or \"twisted\"");
    }

    if (doc.contains("angles")) {
        for (const json& a : doc.at("angles")) {
            if (!a.is_number()) throw ConfigError("angles must be numbers");
            job.angles.push_back(a.get<double>());
        }
    }

    std::map<std::string, size_t> by_name;
    if (doc.contains("params")) {
        for (const json& p : doc.at("params")) {
            NamedParam named;
            named.name = require_field(p, "name", "parameter").get<std::string>();
            if (named.name.empty()) throw ConfigError("parameter names must be nonempty");
            if (by_name.count(named.name)) {
                throw ConfigError("duplicate parameter name: " + named.name);
            }
            std::string kind = require_field(p, "kind", "parameter").get<std::string>();
            if (kind == "virtual") {
                named.is_virtual = true;
                for (const json& term : require_field(p, "terms", "virtual parameter")) {
                    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
                        !term[1].is_string()) {
                        throw ConfigError("virtual terms must be [coefficient, name] pairs");
                    }
                    Int coeff = term[0].get<Int>();
                    std::string ref = term[1].get<std::string>();
                    auto it = by_name.find(ref);
                    if (it == by_name.end()) {
                        throw ConfigError("virtual term refers to unknown parameter: " + ref);
                    }
                    for (const auto& [c, base] : job.params[it->second].terms) {
                        named.terms.emplace_back(coeff * c, base);
                    }
                }
            } else {
                named.terms.emplace_back(1, param_from_json(p, job.pair, job.cartans, kind));
            }
            by_name.emplace(named.name, job.params.size());
            job.params.push_back(std::move(named));
        }
    }
    return job;
}

json module_to_json(const VirtualKModule& v) {
    json out = json::array();
    for (auto it = v.terms.rbegin(); it != v.terms.rend(); ++it) {
        out.push_back({{"weight", weight_to_json(it->first)}, {"multiplicity", it->second}});
    }
    return out;
}

json poly_to_json(const CharacterPoly& p) {
    json out = json::array();
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        out.push_back({{"weight", weight_to_json(it->first)}, {"coefficient", it->second}});
    }
    return out;
}

}  // namespace dirackit
