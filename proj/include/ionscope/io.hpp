#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ionscope/inference.hpp"
#include "ionscope/pattern.hpp"
#include "ionscope/sampling.hpp"

namespace ionscope {

/// One row per resolved slice point: "phi1,phi2,value" for order-2 patterns,
/// "phi1,value" for order-1. Floating-point fields carry 17 significant
/// digits so the file round-trips the doubles exactly.
void write_pattern_csv(std::ostream& out, const Pattern& pattern);

std::string format_double(double v);  // %.17g

/// Accepts {"positions_lambda": [...], "isotope": p|null} or
/// {"n": N, "spacing_lambda": d, "isotope": p|null}. Unknown or mixed keys
/// are rejected.
IonChain chain_from_json(const nlohmann::json& j);
nlohmann::json chain_to_json(const IonChain& chain);

nlohmann::json slice_to_json(const SliceSpec& slice);

/// {"seed": u64, "bins": [[phi1(,phi2)], ...], "events": [indices],
///  "distribution_id": u64}. Bins come from the distribution the events were
/// drawn from.
nlohmann::json event_set_to_json(const EventSet& events,
                                 const DiscreteDistribution& dist);

/// Rebuilds an EventSet from JSON; bins_id is recomputed from the stored
/// bins so the events can be scored against any distribution on the same
/// grid.
EventSet event_set_from_json(const nlohmann::json& j);

nlohmann::json search_result_to_json(const SearchExperimentResult& result);

}  // namespace ionscope
