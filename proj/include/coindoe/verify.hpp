#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coindoe/coinduction.hpp"
#include "coindoe/oe.hpp"

namespace coindoe {

using Json = nlohmann::ordered_json;

// One verified claim: how many instances were examined, how many failed and
// the first failing instance.
struct Check {
  std::string claim;
  std::string anchor;  // the formula being checked
  std::uint64_t count = 0;
  std::uint64_t failures = 0;
  Json witness;  // null unless failures > 0

  bool passed() const { return failures == 0; }
  // Records an instance; the witness of the first failure is kept.
  void record(bool ok, const std::function<Json()>& make_witness);
};

struct VerificationReport {
  std::string suite;
  Json instance;
  std::vector<Check> checks;
  Json statistics;  // null when the suite has none

  bool passed() const;
  // Deterministic: no timings, keys in insertion order.
  Json to_json() const;
};

/// Which configurations a suite visits: every configuration of the depth,
/// or `count` samples where sample i uses seed split_seed(seed, i).
struct ConfigSelection {
  bool exhaustive = false;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;

  static ConfigSelection all(std::uint64_t budget = kDefaultBudget) {
    return {true, 0, 0, budget};
  }
  static ConfigSelection sampled(std::size_t count, std::uint64_t seed) {
    return {false, count, seed, kDefaultBudget};
  }
};

// Replacement maps for fault injection; unset members use the real maps.
struct OeMaps {
  std::function<TruncatedConfig(const TruncatedConfig&)> omega;
  std::function<TruncatedConfig(const TruncatedConfig&)> theta;
};

VerificationReport check_cocycle_suite(const OeContext& ctx);

VerificationReport check_bijectivity_length(const OeContext& ctx, int depth,
                                            const ConfigSelection& configs);

VerificationReport check_inverse_suite(const OeContext& ctx, int depth,
                                       const ConfigSelection& configs,
                                       const OeMaps& maps = {});

// Default generators: every element of G1 and the generators of H.
VerificationReport check_orbit_mapping(
    const OeContext& ctx, int depth, const ConfigSelection& configs,
    const std::optional<std::vector<Word>>& generators = std::nullopt);

// Pairs of depth n+1 configurations that agree on L1(n) and differ beyond it.
VerificationReport check_locality(const OeContext& ctx, int n,
                                  std::size_t pairs, std::uint64_t seed);

enum class PushforwardMode { kExact, kSampled };

struct PushforwardParams {
  PushforwardMode mode = PushforwardMode::kExact;
  std::size_t samples = 100'000;
  std::uint64_t seed = 0;
  double tv_marginal = 0.02;
  double tv_pair = 0.03;
  std::uint64_t budget = kDefaultBudget;
};

// Exact mode throws BudgetExceeded when |X|^{#reps} exceeds params.budget.
VerificationReport check_pushforward(const OeContext& ctx, int depth,
                                     const PushforwardParams& params);

// Total variation distance between two distributions on the same index set.
double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q);

}  // namespace coindoe
