#include "bsp/jsonio.hpp"

#include "bsp/errors.hpp"

using nlohmann::json;

namespace bsp {

json vec_to_json(const FinVec& x) {
    json entries = json::array();
    for (const auto& [idx, val] : x.entries()) entries.push_back(json::array({idx, val}));
    return json{{"entries", std::move(entries)}};
}

FinVec vec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw ParseError("vector JSON must be an object with an 'entries' array");
    std::vector<FinVec::Entry> entries;
    for (const auto& item : j["entries"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number())
            throw ParseError("each entry must be an [index, value] pair");
        entries.emplace_back(item[0].get<Index>(), item[1].get<double>());
    }
    try {
        return FinVec::from_pairs(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

FinVec vec_from_json_text(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON vector");
    return vec_from_json(j);
}

json witness_to_json(const SchreierSet& f) {
    json indices = json::array();
    for (Index i : f.indices()) indices.push_back(i);
    return json{{"kind", "set"}, {"indices", std::move(indices)}};
}

json witness_to_json(const SchreierChain& c) {
    json sets = json::array();
    for (const auto& f : c.sets()) {
        json indices = json::array();
        for (Index i : f.indices()) indices.push_back(i);
        sets.push_back(std::move(indices));
    }
    return json{{"kind", "chain"}, {"sets", std::move(sets)}};
}

json inclusion_to_json(const InclusionAnswer& a) {
    json j{{"from", a.from.to_string()},
           {"to", a.to.to_string()},
           {"comparable", a.comparable}};
    if (a.constant) j["constant"] = *a.constant;
    json route = json::array();
    for (const auto& link : a.route)
        route.push_back(json{{"link", std::string(link_name(link.id))},
                             {"from", link.from.to_string()},
                             {"to", link.to.to_string()},
                             {"constant", link.constant}});
    j["route"] = std::move(route);
    if (a.strictly_singular) j["strictly_singular"] = *a.strictly_singular;
    if (a.compact) j["compact"] = *a.compact;
    return j;
}

json classification_to_json(const PairClassification& c) {
    json j{{"from", c.from.to_string()},
           {"to", c.to.to_string()},
           {"formal_inclusion", std::string(fact_name(c.formal_inclusion))},
           {"inclusion_strictly_singular",
            std::string(fact_name(c.inclusion_strictly_singular))},
           {"inclusion_compact", std::string(fact_name(c.inclusion_compact))},
           {"ss_noncompact_exists", std::string(fact_name(c.ss_noncompact_exists))},
           {"notes", c.notes}};
    if (c.constant) j["constant"] = *c.constant;
    return j;
}

json rule_certificate_to_json(const RuleCertificate& r) {
    return json{{"rule", std::string(rule_name(r.rule))},
                {"space", r.space.to_string()},
                {"positions", r.positions}};
}

json cert_report_to_json(const CertReport& r) {
    json chain = json::array();
    for (const auto& label : r.witness_chain) chain.push_back(label.to_string());
    json j{{"k", r.k},
           {"witness_chain", std::move(chain)},
           {"max_rule_free_length", r.max_rule_free_length},
           {"all_long_paths_forced", r.all_long_paths_forced},
           {"basis", "compactness facts for rule firings are treated as axioms; "
                     "the certificate is the combinatorial reduction over label paths"}};
    if (r.exhaustive_paths_checked)
        j["exhaustive_paths_checked"] = *r.exhaustive_paths_checked;
    else
        j["exhaustive_paths_checked"] = nullptr;
    return j;
}

json trial_report_to_json(const TrialReport& r, bool include_ratios) {
    json j{{"trials", r.trials},
           {"violations", r.violations},
           {"max_ratio", r.max_ratio},
           {"worst_input", vec_to_json(r.worst_input)},
           {"seed", r.seed}};
    if (include_ratios) j["ratios"] = r.ratios;
    return j;
}

json probe_result_to_json(double p, double q, int blocks, double c, std::int64_t budget,
                          const std::optional<DominationCounterexample>& result) {
    json j{{"p", p}, {"q", q}, {"blocks", blocks}, {"C", c}, {"budget", budget}};
    j["found"] = result.has_value();
    if (result) {
        j["profile"] = result->profile;
        j["vector"] = vec_to_json(result->vec);
        j["norm_from"] = result->norm_from;
        j["norm_to"] = result->norm_to;
        j["ratio"] = result->ratio;
        j["candidates_tried"] = result->candidates_tried;
    }
    return j;
}

}  // namespace bsp
