#pragma once

#include <json.hpp>

#include "cpa/alpha.hpp"
#include "cpa/analysis.hpp"
#include "cpa/brute.hpp"
#include "cpa/overlap.hpp"
#include "cpa/scheme.hpp"
#include "cpa/tailfe.hpp"
#include "cpa/upoly.hpp"

// JSON shapes are part of the CLI contract:
//   TPoly           ascending array of decimal strings
//   UPoly           array of TPoly
//   Permutation     array of ints
//   PatternSet      array of Permutation
//   OverlapProfile  sorted [j, [[a,b],...]] pairs
//   ... see README for the full list.

namespace cpa {

using nlohmann::json;

json to_json(const TPoly& p);
TPoly tpoly_from_json(const json& j);

json to_json(const UPoly& p);
UPoly upoly_from_json(const json& j);

json to_json(const URat& r);
URat urat_from_json(const json& j);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const PatternSet& b);
PatternSet pattern_set_from_json(const json& j);

json to_json(const AlphaSequence& a);
AlphaSequence alpha_from_json(const json& j);

json to_json(const OverlapProfile& p);
OverlapProfile overlap_profile_from_json(const json& j);

json to_json(const EquivCertificate& c);
EquivCertificate certificate_from_json(const json& j);

json to_json(const Cluster& c);

json to_json(const ClusterScheme& s);
ClusterScheme scheme_from_json(const json& j);

json to_json(const TailFE& fe);
TailFE tail_fe_from_json(const json& j);

json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const json& j);

json to_json(const AsymEstimate& e);
AsymEstimate asym_estimate_from_json(const json& j);

json to_json(const std::vector<AsymRankRow>& rows);

} // namespace cpa
