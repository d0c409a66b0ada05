#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "coindoe/actions.hpp"
#include "coindoe/groups.hpp"
#include "coindoe/oe.hpp"

namespace coindoe {

/// A fully validated problem instance read from a scenario file.
///
/// Sections, each introduced by a bracketed header:
///   [G1] [G2]   a group table (order, then rows), or "cyclic n",
///               or "elementary_abelian2 k"
///   [H]         a group in the same forms, or "integers" (+ "h_cap n")
///   [space]     "points n" with "masses p/q ..." or "uniform";
///               or "product p/q ..." for K^G1 with the product measure
///   [action1] [action2]
///               lines "g: images..." for generating elements, or "shift"
///               for the left shift on a product space
///   [run]       optional "depth", "seed", "samples", "tv_marginal",
///               "tv_pair", "h_cap"
/// '#' starts a comment.
struct Scenario {
  FiniteGroup g1;
  FiniteGroup g2;
  FreeFactor h;
  std::optional<std::int64_t> h_cap;
  OrbitEqualPair pair;
  int depth = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 100'000;
  double tv_marginal = 0.02;
  double tv_pair = 0.03;

  OeContext context(std::optional<std::int64_t> h_cap_override = std::nullopt) const;
};

Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace coindoe
