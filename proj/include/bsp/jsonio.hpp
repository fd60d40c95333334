#pragma once

#include "bsp/nilpotency.hpp"
#include "bsp/norms.hpp"
#include "bsp/seqvec.hpp"
#include "bsp/spaces.hpp"
#include "bsp/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>

namespace bsp {

/// {"entries": [[index, value], ...]}
nlohmann::json vec_to_json(const FinVec& x);
FinVec vec_from_json(const nlohmann::json& j);
FinVec vec_from_json_text(std::string_view text);

/// {"kind": "set", "indices": [...]}
nlohmann::json witness_to_json(const SchreierSet& f);
/// {"kind": "chain", "sets": [[...], ...]}
nlohmann::json witness_to_json(const SchreierChain& c);

nlohmann::json inclusion_to_json(const InclusionAnswer& a);
nlohmann::json classification_to_json(const PairClassification& c);
nlohmann::json rule_certificate_to_json(const RuleCertificate& r);
nlohmann::json cert_report_to_json(const CertReport& r);
nlohmann::json trial_report_to_json(const TrialReport& r, bool include_ratios = false);
nlohmann::json probe_result_to_json(double p, double q, int blocks, double c,
                                    std::int64_t budget,
                                    const std::optional<DominationCounterexample>& result);

}  // namespace bsp
