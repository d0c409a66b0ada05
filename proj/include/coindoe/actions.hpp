#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coindoe/groups.hpp"
#include "coindoe/rational.hpp"

namespace coindoe {

using Point = std::uint32_t;

// Marks a space as K^G: point p is the tuple (k_0, ..., k_{|G|-1}) with
// p = sum_g k_g |K|^g, indexed by group element.
struct ProductLayout {
  std::vector<Rational> base_masses;  // kappa on K
  std::size_t group_order = 0;

  std::size_t base_size() const { return base_masses.size(); }
  std::uint32_t coordinate(Point p, Element g) const;
  Point encode(std::span<const std::uint32_t> tuple) const;

  friend bool operator==(const ProductLayout&, const ProductLayout&) = default;
};

/// A finite probability space with exact, strictly positive point masses.
class ProbSpace {
 public:
  // Throws InvalidSpace unless every mass is > 0 and they sum to exactly 1.
  explicit ProbSpace(std::vector<Rational> masses);
  static ProbSpace uniform(std::size_t n);
  // K^G with the product measure kappa^G.
  static ProbSpace product(const ProbSpace& base, std::size_t group_order);

  std::size_t size() const { return masses_.size(); }
  const Rational& mass(Point x) const { return masses_[x]; }
  const std::vector<Rational>& masses() const { return masses_; }
  const std::optional<ProductLayout>& layout() const { return layout_; }

  friend bool operator==(const ProbSpace&, const ProbSpace&) = default;

 private:
  std::vector<Rational> masses_;
  std::optional<ProductLayout> layout_;
};

/// A measure-preserving permutation action g -> T(g) of a finite group.
class PmpAction {
 public:
  // perms[g][x] = T(g)x for every element g. Validated eagerly.
  static PmpAction from_tables(FiniteGroup group, ProbSpace space,
                               std::vector<std::vector<Point>> perms);
  // Full tables derived from generator images by closure; inconsistent
  // generator data surfaces as NotHomomorphism.
  static PmpAction from_generators(
      FiniteGroup group, ProbSpace space,
      const std::vector<std::pair<Element, std::vector<Point>>>& generators);
  // The left shift (S^g x)(h) = x(g^{-1} h) on K^G.
  static PmpAction bernoulli_shift(FiniteGroup group, const ProbSpace& base);

  const FiniteGroup& group() const { return group_; }
  const ProbSpace& space() const { return space_; }
  Point act(Element g, Point x) const { return perms_[g][x]; }
  const std::vector<std::vector<Point>>& tables() const { return perms_; }

 private:
  PmpAction(FiniteGroup group, ProbSpace space,
            std::vector<std::vector<Point>> perms)
      : group_(std::move(group)),
        space_(std::move(space)),
        perms_(std::move(perms)) {}

  FiniteGroup group_;
  ProbSpace space_;
  std::vector<std::vector<Point>> perms_;
};

// Throws NotHomomorphism / NotMeasurePreserving (or std::invalid_argument for
// malformed tables) on the first violation.
void validate_action(const FiniteGroup& group, const ProbSpace& space,
                     const std::vector<std::vector<Point>>& perms);

// Orbits as sorted point lists, ordered by their smallest point.
std::vector<std::vector<Point>> orbit_partition(const PmpAction& action);

/// Two free actions on the same space with identical orbits.
class OrbitEqualPair {
 public:
  // Throws NotFree(action id, g, x), OrbitMismatch(x), or InvalidSpace when
  // the spaces differ.
  static OrbitEqualPair make(PmpAction first, PmpAction second);

  const PmpAction& first() const { return first_; }
  const PmpAction& second() const { return second_; }
  const ProbSpace& space() const { return first_.space(); }

 private:
  OrbitEqualPair(PmpAction a, PmpAction b)
      : first_(std::move(a)), second_(std::move(b)) {}

  PmpAction first_;
  PmpAction second_;
};

/// Materialized Zimmer cocycles: omega(g, x) in G2 for g in G1 and its
/// mirror upsilon(g, x) in G1 for g in G2.
class CocycleTable {
 public:
  // Stores the given tables without checking them against any pair.
  static CocycleTable from_tables(std::size_t order1, std::size_t order2,
                                  std::size_t points,
                                  std::vector<Element> omega,
                                  std::vector<Element> upsilon);

  std::size_t order1() const { return order1_; }
  std::size_t order2() const { return order2_; }
  std::size_t points() const { return points_; }
  Element omega(Element g, Point x) const { return omega_[g * points_ + x]; }
  Element upsilon(Element g, Point x) const {
    return upsilon_[g * points_ + x];
  }

  // Roles of the two groups swapped.
  CocycleTable inverted() const;
  // Copy with one omega entry overwritten (fault injection).
  CocycleTable with_omega_entry(Element g, Point x, Element value) const;

  friend bool operator==(const CocycleTable&, const CocycleTable&) = default;

 private:
  std::size_t order1_ = 0, order2_ = 0, points_ = 0;
  std::vector<Element> omega_;
  std::vector<Element> upsilon_;
};

// One identity family of a cocycle scan: how many instances were checked,
// how many failed, and the first failing instance.
struct IdentityAudit {
  std::string claim;
  std::string formula;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::uint32_t> witness;  // (g, x) or (g1, g2, x)
};

// Exhaustive scan of the six cocycle identities:
//   omega(g,x).x = g.x                 upsilon(g,x).x = g.x
//   omega(g1 g2,x) = omega(g1, g2.x) omega(g2,x)   (and the upsilon mirror)
//   omega(upsilon(g2,x),x) = g2        upsilon(omega(g1,x),x) = g1
std::vector<IdentityAudit> audit_cocycle(const OrbitEqualPair& pair,
                                         const CocycleTable& table);

// Throws CocycleInconsistent naming the first violated identity.
void validate_cocycle(const OrbitEqualPair& pair, const CocycleTable& table);

CocycleTable compute_zimmer_cocycle(const OrbitEqualPair& pair);
CocycleTable invert_cocycle(const CocycleTable& table);

}  // namespace coindoe
