#pragma once

// JSON forms of the exact values and reports.
//
//   Dyadic5      {"p": "<decimal>", "q": "<decimal>", "e": <int>}
//   LadValue     <int> or "-inf"
//   Quaternion5  {"c": [Dyadic5 x 4]}   components along 1, i_1, i_2, i_3
//   Word         canonical text, e.g. "g1*g2^-1"

#include <json.hpp>

#include "freesimplex/goldfield.hpp"
#include "freesimplex/quatrep.hpp"
#include "freesimplex/theoremlab.hpp"

namespace freesimplex {

void to_json(nlohmann::json& j, const Dyadic5& x);
void from_json(const nlohmann::json& j, Dyadic5& x);

void to_json(nlohmann::json& j, const LadValue& v);
void from_json(const nlohmann::json& j, LadValue& v);

void to_json(nlohmann::json& j, const Quaternion5& x);
void from_json(const nlohmann::json& j, Quaternion5& x);

void to_json(nlohmann::json& j, const Word& w);
void from_json(const nlohmann::json& j, Word& w);

void to_json(nlohmann::json& j, const TheoremReport& r);
void to_json(nlohmann::json& j, const IdentityDecomposition& d);
void to_json(nlohmann::json& j, const LadCertificate& cert);
void to_json(nlohmann::json& j, const UnhandledPattern& u);

/// {"maxLen", "wordsChecked", "failures", "maxLad", "identityFamily", "elapsedMs"}
nlohmann::json campaign_report(const CampaignSummary& summary, const IdentityFamilySummary& family);

}  // namespace freesimplex
