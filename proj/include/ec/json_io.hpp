#ifndef EC_JSON_IO_HPP
#define EC_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "ec/family.hpp"
#include "ec/field.hpp"
#include "ec/ideal_spec.hpp"
#include "ec/tangent.hpp"

namespace ec {

using json = nlohmann::ordered_json;

inline json field_to_json(const FieldSpec& f) {
    json j;
    if (f.mode == FieldSpec::Mode::Rationals)
        j["field"] = "Q";
    else
        j["field"] = json{{"p", f.p}};
    return j;
}

inline FieldSpec field_from_json(const json& j) {
    const json& f = j.contains("field") ? j.at("field") : j;
    if (f.is_string()) {
        if (f.get<std::string>() == "Q") return FieldSpec::rationals();
        throw std::invalid_argument("field: expected \"Q\" or {\"p\": prime}");
    }
    return FieldSpec::prime(f.at("p").get<std::uint64_t>());
}

inline json spec_to_json(const IdealSpec& s) {
    json j;
    if (s.kind == IdealSpec::Kind::Raw) {
        j["raw"] = s.raw;
    } else {
        j["family"] = json{{"n1", s.n1}, {"n2", s.n2}};
        if (s.kind == IdealSpec::Kind::FamilyVariant)
            j["variant_n3"] = s.n3;
        else
            j["variant_n3"] = nullptr;
    }
    j["extra"] = s.extra;
    return j;
}

inline IdealSpec spec_from_json(const json& j) {
    IdealSpec s;
    if (j.contains("raw")) {
        s = IdealSpec::raw_ideal(j.at("raw").get<std::vector<std::string>>());
    } else {
        const json& fam = j.at("family");
        int n1 = fam.at("n1").get<int>(), n2 = fam.at("n2").get<int>();
        if (j.contains("variant_n3") && !j.at("variant_n3").is_null())
            s = IdealSpec::family_variant(n1, n2, j.at("variant_n3").get<int>());
        else
            s = IdealSpec::family(n1, n2);
    }
    if (j.contains("extra")) s = s.with_extras(j.at("extra").get<std::vector<std::string>>());
    return s;
}

inline json tangent_report_to_json(const TangentReport& r) {
    json per = json::object();
    for (const auto& [j, dim] : r.per_degree) per[std::to_string(j)] = dim;
    json out;
    out["per_degree"] = per;
    out["total"] = r.total;
    out["j_min"] = r.j_min;
    out["j_max"] = r.j_max;
    out["trivial_rank_at_minus1"] = r.trivial_rank_at_minus1;
    out["tnt"] = r.tnt;
    out["engine"] = engine_name(r.engine);
    if (r.fell_back_to_generic) out["note"] = "structured engine unavailable; used generic";
    return out;
}

inline json obstruction_report_to_json(const ObstructionReport& r) {
    json per = json::object();
    for (const auto& [j, dim] : r.per_degree) per[std::to_string(j)] = dim;
    json out;
    out["per_degree"] = per;
    out["t2_nonneg_zero"] = r.vanishes_nonneg;
    out["cutoff"] = r.cutoff_degree;
    out["inconclusive"] = r.inconclusive;
    return out;
}

inline json stats_to_json(const FamilyStats& s) {
    json out;
    out["n1"] = s.n1;
    out["n2"] = s.n2;
    out["d"] = s.d;
    out["D_sum"] = s.D_sum;
    out["D_closed"] = s.D_closed;
    out["lt_4d"] = s.lt_4d;
    out["lt_3dm1"] = s.lt_3dm1;
    return out;
}

inline json expectation_to_json(const ScenarioExpectation& e) {
    json out;
    out["colength"] = e.colength ? json(*e.colength) : json(nullptr);
    out["tangent_total"] = e.tangent_total ? json(*e.tangent_total) : json(nullptr);
    out["tnt"] = e.tnt ? json(*e.tnt) : json(nullptr);
    out["t2_zero"] = e.t2_zero ? json(*e.t2_zero) : json(nullptr);
    out["socle_dim"] = e.socle_dim ? json(*e.socle_dim) : json(nullptr);
    return out;
}

inline json catalog_to_json() {
    json arr = json::array();
    for (const auto& s : example_catalog()) {
        json item;
        item["name"] = s.name;
        item["spec"] = spec_to_json(s.spec);
        item["expected"] = expectation_to_json(s.expected);
        arr.push_back(item);
    }
    return arr;
}

}  // namespace ec

#endif
