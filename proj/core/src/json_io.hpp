#pragma once

// Internal nlohmann-level converters shared by serialize.cpp, scan.cpp
// and campaign.cpp. Not installed; the public surface is string-based.

#include <json.hpp>

#include "derivlab/campaign.hpp"
#include "derivlab/globalize.hpp"
#include "derivlab/jordan.hpp"
#include "derivlab/localcheck.hpp"

namespace derivlab::detail {

using Json = nlohmann::json;

CampaignConfig campaign_config_from_parsed(const Json& j);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json ring_spec_json(const RingSpec& spec);
RingSpec ring_spec_from(const Json& j);

Json scalar_json(const Scalar& s);
Scalar scalar_from(const Ring& ring, const Json& j);

Json matrix_json(const Matrix& m);
Matrix matrix_from(const Ring& ring, const Json& j);

Json map_json(const AdditiveMap& f);
AdditiveMap map_from(const Json& j);

Json verdict_json(const Verdict& v);
Json reconstruct_json(const ReconstructReport& r);
Json jordan_outcome_json(const JordanGlobalizeOutcome& r);

std::string carrier_name(Carrier c);
Carrier carrier_from_name(const std::string& name);

} // namespace derivlab::detail
