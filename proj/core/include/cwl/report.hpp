#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cwl/dim2.hpp"
#include "cwl/resolution.hpp"
#include "cwl/verdict.hpp"
#include "cwl/verify.hpp"

namespace cwl {

/// JSON reports. Keys keep insertion order so the output is diff-stable;
/// ideals are written as arrays of canonical generator strings.
using Json = nlohmann::ordered_json;

Json to_json(const MonomialIdeal& ideal);
Json to_json(const Verdict& verdict);
Json to_json(const BettiTable& table);
Json to_json(const RegularityReport& report, const Ring& ring);
Json to_json(const OrderingCertificate& certificate);
Json to_json(const CampaignReport& report);

/// Inverse of to_json(CampaignReport). Throws InvalidArgument on schema
/// mismatch.
CampaignReport campaign_from_json(const Json& json);

/// Two-space indented text.
std::string dump(const Json& json);

}  // namespace cwl
