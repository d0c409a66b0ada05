#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coindoe/actions.hpp"
#include "coindoe/groups.hpp"
#include "coindoe/rational.hpp"

namespace coindoe {

// Exact sampler for a finite rational distribution: a key is hashed to a
// uniform integer below the common denominator of the masses.
class PointSampler {
 public:
  explicit PointSampler(const ProbSpace& space);
  Point draw(std::uint64_t key) const;

 private:
  std::uint64_t denominator_ = 1;
  std::uint64_t limit_ = 0;  // largest multiple of denominator_ below 2^64
  std::vector<std::uint64_t> cumulative_;
};

/// The coinduced action of G*H on configurations f: G*H -> X with
/// f(w g) = T(g^{-1}) f(w), truncated to balls of canonical representatives.
///
/// Balls are built on first use and cached; the object is otherwise
/// immutable and safe to share across threads.
class CoinducedSpace {
 public:
  CoinducedSpace(PmpAction action, FreeFactor h,
                 std::optional<std::int64_t> h_cap = std::nullopt);

  static std::shared_ptr<const CoinducedSpace> create(
      PmpAction action, FreeFactor h,
      std::optional<std::int64_t> h_cap = std::nullopt);

  const FreeProduct& gamma() const { return gamma_; }
  const PmpAction& action() const { return action_; }
  const ProbSpace& space() const { return action_.space(); }
  std::optional<std::int64_t> h_cap() const { return h_cap_; }
  const PointSampler& sampler() const { return sampler_; }

  std::shared_ptr<const Ball> ball(int depth) const;

 private:
  PmpAction action_;
  FreeProduct gamma_;
  std::optional<std::int64_t> h_cap_;
  PointSampler sampler_;
  mutable std::mutex mutex_;
  mutable std::vector<std::shared_ptr<const Ball>> balls_;
};

using SpacePtr = std::shared_ptr<const CoinducedSpace>;

/// A depth-n configuration: one point of X per canonical representative of
/// coset length <= n. Values at other words of the ball follow from
/// equivariance, so a stored configuration is always equivariant.
class TruncatedConfig {
 public:
  TruncatedConfig(SpacePtr space, int depth, std::vector<Point> values);

  const SpacePtr& space() const { return space_; }
  int depth() const { return ball_->depth(); }
  const Ball& ball() const { return *ball_; }
  const std::vector<Point>& values() const { return values_; }
  Point value_at(std::size_t rep_index) const { return values_[rep_index]; }

  // Same space object, same depth, same values.
  friend bool operator==(const TruncatedConfig& a, const TruncatedConfig& b) {
    return a.space_ == b.space_ && a.depth() == b.depth() &&
           a.values_ == b.values_;
  }

 private:
  friend class ConfigEnumerator;

  SpacePtr space_;
  std::shared_ptr<const Ball> ball_;
  std::vector<Point> values_;
};

// f(w) = T(g^{-1}) f(rep) for w = rep * g. Throws TruncationExceeded when rep
// lies outside the stored ball.
Point eval_config(const TruncatedConfig& f, const Word& w);

// Whether eval_config(f, w) is defined.
bool is_evaluable(const TruncatedConfig& f, const Word& w);

// (S^gamma f)(w) = f(gamma^{-1} w), truncated to the largest depth m whose
// ball stays evaluable.
TruncatedConfig shift_config(const Word& gamma, const TruncatedConfig& f);

// Same as shift_config but truncated to exactly `depth`.
TruncatedConfig shift_config(const Word& gamma, const TruncatedConfig& f,
                             int depth);

// Keep only the reps of coset length <= depth.
TruncatedConfig restrict_config(const TruncatedConfig& f, int depth);

// Product of point masses over the stored representatives.
Rational config_mass(const TruncatedConfig& f);

// |X|^{#reps} as a decimal string, and whether it is within `budget`.
std::string config_count(const CoinducedSpace& space, int depth);
bool within_budget(const CoinducedSpace& space, int depth,
                   std::uint64_t budget);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Odometer over every configuration of a given depth, with exact masses.
///
/// The mass is maintained as prefix products, so advancing costs amortized
/// O(1) rational multiplications.
class ConfigEnumerator {
 public:
  // Throws BudgetExceeded when |X|^{#reps} > budget.
  ConfigEnumerator(SpacePtr space, int depth,
                   std::uint64_t budget = kDefaultBudget);

  bool done() const { return done_; }
  const TruncatedConfig& config() const { return config_; }
  const Rational& mass() const { return prefix_.back(); }
  std::uint64_t index() const { return index_; }
  void next();

 private:
  TruncatedConfig config_;
  std::vector<Rational> prefix_;
  std::uint64_t index_ = 0;
  bool done_ = false;
};

void for_each_config(
    const SpacePtr& space, int depth, std::uint64_t budget,
    const std::function<void(const TruncatedConfig&, const Rational&)>& visit);

// Each rep's value is drawn from mu keyed by (seed, rep), so the result does
// not depend on iteration order or on the depth it was sampled at.
TruncatedConfig sample_config(const SpacePtr& space, int depth,
                              std::uint64_t seed);

// The product measure on depth-n configurations.
class CoinducedMeasure {
 public:
  CoinducedMeasure(SpacePtr space, int depth)
      : space_(std::move(space)), depth_(depth) {}

  int depth() const { return depth_; }
  Rational mass(const TruncatedConfig& f) const;
  // Mass of the cylinder fixing the values at the first values.size() reps.
  Rational cylinder(const std::vector<Point>& values) const;

 private:
  SpacePtr space_;
  int depth_;
};

// One line per rep: "<rep-word> <point>".
std::string serialize_config(const TruncatedConfig& f);
TruncatedConfig parse_config(const SpacePtr& space, std::string_view text);

/// F(w) = f(w)(e) for every word w = rep * g of the ball, on a base space
/// presented as K^G with the shift action.
class BernoulliImage {
 public:
  BernoulliImage(SpacePtr space, std::shared_ptr<const Ball> ball,
                 std::vector<std::uint32_t> symbols);

  const Ball& ball() const { return *ball_; }
  std::size_t size() const { return symbols_.size(); }
  // Symbols ordered by (rep index, g index).
  const std::vector<std::uint32_t>& symbols() const { return symbols_; }
  std::uint32_t at(const Word& w) const;
  std::optional<std::uint32_t> find(const Word& w) const;

 private:
  SpacePtr space_;
  std::shared_ptr<const Ball> ball_;
  std::vector<std::uint32_t> symbols_;
};

// Throws NotAProductSpace unless the base space carries a K^G layout over the
// acting group and the action is the left shift.
BernoulliImage bernoulli_conjugacy(const TruncatedConfig& f);

// Shannon entropy in nats.
double entropy(const ProbSpace& space);

}  // namespace coindoe
