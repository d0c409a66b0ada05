#pragma once

#include <cstdint>
#include <optional>

#include "coindoe/actions.hpp"
#include "coindoe/coinduction.hpp"
#include "coindoe/groups.hpp"

namespace coindoe {

enum class Side : std::uint8_t { kFirst = 1, kSecond = 2 };

/// Everything the cocycles beta and alpha close over: the orbit-equal pair,
/// its Zimmer cocycles and the two coinduced spaces over G1*H and G2*H.
///
/// Configurations passed to the maps below must come from space(side) of the
/// same context; a config built over another space object is rejected.
class OeContext {
 public:
  // Computes the cocycles from the pair.
  static OeContext create(OrbitEqualPair pair, FreeFactor h,
                          std::optional<std::int64_t> h_cap = std::nullopt);
  // Uses the given cocycles after validating them (CocycleInconsistent).
  static OeContext with_cocycles(OrbitEqualPair pair, CocycleTable cocycles,
                                 FreeFactor h,
                                 std::optional<std::int64_t> h_cap = std::nullopt);
  // No validation at all. Meant for fault injection in tests.
  static OeContext unchecked(OrbitEqualPair pair, CocycleTable cocycles,
                             FreeFactor h,
                             std::optional<std::int64_t> h_cap = std::nullopt);

  const OrbitEqualPair& pair() const { return pair_; }
  const CocycleTable& cocycles() const { return cocycles_; }
  const SpacePtr& space(Side side) const {
    return side == Side::kFirst ? first_ : second_;
  }
  std::optional<std::int64_t> h_cap() const { return first_->h_cap(); }

 private:
  OeContext(OrbitEqualPair pair, CocycleTable cocycles, const FreeFactor& h,
            std::optional<std::int64_t> h_cap);

  OrbitEqualPair pair_;
  CocycleTable cocycles_;
  SpacePtr first_;
  SpacePtr second_;
};

// beta(gamma, f) in G2*H for gamma in G1*H and f on side 1, by the block
// recursion beta(h g tau, f) = h omega(g, f(tau^{-1})) beta(tau, f).
Word beta(const OeContext& ctx, const Word& gamma, const TruncatedConfig& f);
// Mirror with upsilon; gamma in G2*H, f on side 2.
Word alpha(const OeContext& ctx, const Word& gamma, const TruncatedConfig& f);

// The unique gamma with beta(gamma, f) = delta, solved block by block from
// the right with upsilon. Throws PreimageMismatch if the result does not map
// back to delta (only possible with inconsistent cocycles).
Word solve_beta_preimage(const OeContext& ctx, const Word& delta,
                         const TruncatedConfig& f);
Word solve_alpha_preimage(const OeContext& ctx, const Word& delta,
                          const TruncatedConfig& f);

// B_f(gamma) = beta(gamma^{-1}, f)^{-1} and its mirror A_f.
Word b_map(const OeContext& ctx, const Word& gamma, const TruncatedConfig& f);
Word a_map(const OeContext& ctx, const Word& gamma, const TruncatedConfig& f);

// (Omega f)(B_f(gamma)) = f(gamma), on the side-2 ball of the same depth.
// Preimages are built along Ball parents so every rep costs one solver step.
TruncatedConfig omega_map(const OeContext& ctx, const TruncatedConfig& f);
// (Theta f)(A_f(gamma)) = f(gamma), side 2 to side 1.
TruncatedConfig theta_map(const OeContext& ctx, const TruncatedConfig& f);

}  // namespace coindoe
