#include "ionscope/io.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include "ionscope/errors.hpp"

namespace ionscope {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_pattern_csv(std::ostream& out, const Pattern& pattern) {
  if (pattern.order == 2) {
    out << "phi1,phi2,value\n";
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      out << format_double(pattern.resolved.points[k].phi1) << ','
          << format_double(pattern.resolved.points[k].phi2) << ','
          << format_double(pattern.values[static_cast<Eigen::Index>(k)])
          << '\n';
    }
  } else {
    out << "phi1,value\n";
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      out << format_double(pattern.resolved.points[k].phi1) << ','
          << format_double(pattern.values[static_cast<Eigen::Index>(k)])
          << '\n';
    }
  }
}

namespace {

void reject_unknown_keys(const nlohmann::json& j,
                         const std::set<std::string>& allowed,
                         const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw std::invalid_argument(std::string(what) + ": unknown field \"" +
                                  it.key() + "\"");
    }
  }
}

std::optional<int> isotope_from(const nlohmann::json& j) {
  if (!j.contains("isotope") || j.at("isotope").is_null()) return std::nullopt;
  return j.at("isotope").get<int>();
}

}  // namespace

IonChain chain_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("chain: JSON object expected");
  }
  if (j.contains("positions_lambda")) {
    reject_unknown_keys(j, {"positions_lambda", "isotope"}, "chain");
    const auto& arr = j.at("positions_lambda");
    if (!arr.is_array()) {
      throw std::invalid_argument("chain: positions_lambda must be an array");
    }
    Eigen::ArrayXd positions(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
      positions[static_cast<Eigen::Index>(k)] = arr[k].get<double>();
    }
    return IonChain(std::move(positions), isotope_from(j));
  }
  if (j.contains("n")) {
    reject_unknown_keys(j, {"n", "spacing_lambda", "isotope"}, "chain");
    if (!j.contains("spacing_lambda")) {
      throw std::invalid_argument("chain: spacing_lambda required with n");
    }
    return IonChain::equally_spaced(j.at("n").get<int>(),
                                    j.at("spacing_lambda").get<double>(),
                                    isotope_from(j));
  }
  throw std::invalid_argument(
      "chain: expected positions_lambda or n/spacing_lambda");
}

nlohmann::json chain_to_json(const IonChain& chain) {
  nlohmann::json j;
  j["positions_lambda"] = std::vector<double>(
      chain.positions().data(), chain.positions().data() + chain.size());
  j["isotope"] = chain.isotope() ? nlohmann::json(*chain.isotope())
                                 : nlohmann::json(nullptr);
  return j;
}

nlohmann::json slice_to_json(const SliceSpec& slice) {
  nlohmann::json j;
  switch (slice.kind) {
    case SliceSpec::Kind::Grid2D:
      j["kind"] = "grid2d";
      break;
    case SliceSpec::Kind::FixedSecond:
      j["kind"] = "fixed-second";
      j["phi2"] = slice.phi2;
      break;
    case SliceSpec::Kind::OppositeScan:
      j["kind"] = "opposite";
      break;
    case SliceSpec::Kind::OffsetMagnitude:
      j["kind"] = "offset-mag";
      j["offset"] = slice.offset;
      break;
    case SliceSpec::Kind::FixedSinDelta:
      j["kind"] = "fixed-sindelta";
      j["delta"] = slice.delta;
      break;
  }
  j["phi_min"] = slice.phi_min;
  j["phi_max"] = slice.phi_max;
  j["points"] = slice.points;
  return j;
}

nlohmann::json event_set_to_json(const EventSet& events,
                                 const DiscreteDistribution& dist) {
  if (events.bins_id != dist.bins_id()) {
    throw integrity_error(
        "event_set_to_json: events and distribution bin grids differ");
  }
  nlohmann::json bins = nlohmann::json::array();
  for (const AnglePair& b : dist.bins()) {
    if (dist.order() == 2) {
      bins.push_back({b.phi1, b.phi2});
    } else {
      bins.push_back({b.phi1});
    }
  }
  nlohmann::json j;
  j["seed"] = events.seed;
  j["bins"] = std::move(bins);
  j["events"] = events.events;
  j["distribution_id"] = events.distribution_id;
  return j;
}

EventSet event_set_from_json(const nlohmann::json& j) {
  reject_unknown_keys(j, {"seed", "bins", "events", "distribution_id"},
                      "event set");
  EventSet out;
  out.seed = j.at("seed").get<std::uint64_t>();
  out.events = j.at("events").get<std::vector<std::int32_t>>();
  if (j.contains("distribution_id")) {
    out.distribution_id = j.at("distribution_id").get<std::uint64_t>();
  }
  const auto& bins = j.at("bins");
  if (!bins.is_array() || bins.empty()) {
    throw std::invalid_argument("event set: non-empty bins array required");
  }
  const std::size_t width = bins.front().size();
  if (width != 1 && width != 2) {
    throw std::invalid_argument("event set: bins must be [phi1] or [phi1, phi2]");
  }
  std::vector<AnglePair> pairs;
  pairs.reserve(bins.size());
  for (const auto& b : bins) {
    if (b.size() != width) {
      throw std::invalid_argument("event set: ragged bins array");
    }
    pairs.push_back({b[0].get<double>(), width == 2 ? b[1].get<double>() : 0.0});
  }
  out.bins_id = hash_bins(pairs, width == 2 ? 2 : 1);
  for (const std::int32_t e : out.events) {
    if (e < 0 || static_cast<std::size_t>(e) >= pairs.size()) {
      throw std::invalid_argument("event set: event index out of bin range");
    }
  }
  return out;
}

nlohmann::json search_result_to_json(const SearchExperimentResult& result) {
  nlohmann::json j;
  j["n"] = result.chain.size();
  j["spacing_lambda"] = result.chain.is_equally_spaced()
                            ? nlohmann::json(result.chain.spacing())
                            : nlohmann::json(nullptr);
  j["positions_lambda"] = std::vector<double>(
      result.chain.positions().data(),
      result.chain.positions().data() + result.chain.size());
  j["true_p"] = result.true_p;
  j["slice"] = slice_to_json(result.slice);
  j["schedule"] = result.schedule;
  j["success_rates"] = result.success_rates;
  j["m_at_95"] = result.m_at_95 ? nlohmann::json(*result.m_at_95)
                                : nlohmann::json(nullptr);
  j["mean_events_to_confidence"] = result.mean_events_to_confidence;
  j["classical_mean_probes"] = result.classical_mean_probes;
  j["master_seed"] = result.master_seed;
  j["n_trials"] = result.n_trials;
  j["equivalence_classes"] = result.equivalence_classes;
  return j;
}

}  // namespace ionscope
