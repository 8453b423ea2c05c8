#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "isodual/constructions.hpp"

namespace isodual {

using json = nlohmann::json;

json to_json(const RingSpec& spec);
json to_json(const FqPoly& f);
json to_json(const RPoly& f);
json to_json(const Splitting& s);
json to_json(const CyclicCode& c);
json to_json(const Claim& c);
json to_json(const EquivalenceCertificate& cert);
json to_json(const WeightReport& w);
json to_json(const CodeVerification& v);
json to_json(const ConstructionResult& r, const std::vector<CodeVerification>* checks = nullptr);

// The parsers throw Error(Errc::invalid_argument) on malformed input and
// rerun the usual validation of the parsed object.
RingSpec ring_spec_from_json(const json& j);
FqPoly fq_poly_from_json(const json& j);
RPoly rpoly_from_json(const json& j);
Splitting splitting_from_json(const json& j);
CyclicCode code_from_json(const json& j);
Claim claim_from_json(const json& j);
ConstructionResult construction_from_json(const json& j);

}  // namespace isodual
