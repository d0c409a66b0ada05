#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "coindoe/actions.hpp"
#include "coindoe/coinduction.hpp"
#include "coindoe/groups.hpp"
#include "coindoe/oe.hpp"

namespace fixtures {

using namespace coindoe;

// Klein four-group with index a + 2b, multiplication = XOR.
inline FiniteGroup klein() { return FiniteGroup::elementary_abelian2(2); }

inline PmpAction rotation4() {
  return PmpAction::from_generators(FiniteGroup::cyclic(4), ProbSpace::uniform(4),
                                    {{1, {1, 2, 3, 0}}});
}

inline PmpAction xor4() {
  return PmpAction::from_generators(klein(), ProbSpace::uniform(4),
                                    {{1, {1, 0, 3, 2}}, {2, {2, 3, 0, 1}}});
}

// The reference pair: Z/4 rotation and Klein XOR on four uniform points.
inline OrbitEqualPair s1_pair() { return OrbitEqualPair::make(rotation4(), xor4()); }

inline OeContext s1(std::optional<FreeFactor> h = std::nullopt) {
  return OeContext::create(s1_pair(),
                           h ? *h : FreeFactor::finite(FiniteGroup::cyclic(2)));
}

inline OeContext trivial_h() {
  return OeContext::create(s1_pair(), FreeFactor::finite(FiniteGroup::trivial()));
}

// Z/2 acting by (0 1)(2 3) on masses 1/3 1/3 1/6 1/6, paired with itself,
// over H = Z with |h| <= cap.
inline OeContext integers_h(std::int64_t cap) {
  std::vector<Rational> masses{Rational(1, 3), Rational(1, 3), Rational(1, 6),
                               Rational(1, 6)};
  auto act = [&] {
    return PmpAction::from_generators(FiniteGroup::cyclic(2),
                                      ProbSpace(masses), {{1, {1, 0, 3, 2}}});
  };
  return OeContext::create(OrbitEqualPair::make(act(), act()),
                           FreeFactor::integers(), cap);
}

// Z/6 by rotation against Z/2 x Z/3 (index a + 2b) acting by
// (a, b) . x = x + 3a + 2b mod 6: the same orbit, a non-trivial cocycle.
inline OeContext z6_vs_product() {
  std::vector<std::vector<Element>> t(6, std::vector<Element>(6));
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      const Element a = (x % 2 + y % 2) % 2;
      const Element b = (x / 2 + y / 2) % 3;
      t[x][y] = a + 2 * b;
    }
  }
  const FiniteGroup product = FiniteGroup::from_table(t);
  const ProbSpace space = ProbSpace::uniform(6);
  std::vector<std::vector<Point>> perms(6, std::vector<Point>(6));
  for (Element g = 0; g < 6; ++g) {
    const Element a = g % 2, b = g / 2;
    for (Point x = 0; x < 6; ++x) perms[g][x] = (x + 3 * a + 2 * b) % 6;
  }
  auto first = PmpAction::from_generators(FiniteGroup::cyclic(6), space,
                                          {{1, {1, 2, 3, 4, 5, 0}}});
  auto second = PmpAction::from_tables(product, space, perms);
  return OeContext::create(OrbitEqualPair::make(first, second),
                           FreeFactor::finite(FiniteGroup::cyclic(3)));
}

// Two orbits of unequal mass: Z/4 rotates {0..3} and {4..7}; the Klein group
// acts by XOR on the first block and by a relabelled XOR on the second.
inline OeContext two_orbits() {
  std::vector<Rational> masses(8);
  for (Point x = 0; x < 8; ++x) masses[x] = x < 4 ? Rational(1, 6) : Rational(1, 12);
  const ProbSpace space(masses);
  auto first = PmpAction::from_generators(FiniteGroup::cyclic(4), space,
                                          {{1, {1, 2, 3, 0, 5, 6, 7, 4}}});
  auto second = PmpAction::from_generators(
      klein(), space, {{1, {1, 0, 3, 2, 6, 7, 4, 5}}, {2, {2, 3, 0, 1, 5, 4, 7, 6}}});
  return OeContext::create(OrbitEqualPair::make(first, second),
                           FreeFactor::finite(FiniteGroup::cyclic(3)));
}

// Uniformly random word of the free product with up to max_letters letters,
// built by random letters and reduction (so shorter words also occur).
inline Word random_word(const FreeProduct& fp, std::mt19937_64& rng,
                        std::size_t max_letters, std::int64_t h_cap = 3) {
  std::uniform_int_distribution<std::size_t> len(0, max_letters);
  std::vector<Letter> letters;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() % 2 == 0) {
      letters.push_back({Tag::kG, static_cast<std::int64_t>(rng() % fp.g().order())});
    } else if (fp.h().is_integers()) {
      letters.push_back({Tag::kH, static_cast<std::int64_t>(rng() % (2 * h_cap + 1)) - h_cap});
    } else {
      letters.push_back(
          {Tag::kH, static_cast<std::int64_t>(rng() % fp.h().group().order())});
    }
  }
  return fp.reduce(letters);
}

// All words rep * g of the ball of the given depth.
inline std::vector<Word> ball_words(const CoinducedSpace& space, int depth) {
  const FreeProduct& fp = space.gamma();
  std::vector<Word> out;
  for (const Word& rep : space.ball(depth)->reps()) {
    for (Element g = 0; g < fp.g().order(); ++g) {
      out.push_back(fp.multiply(rep, fp.g_letter(g)));
    }
  }
  return out;
}

}  // namespace fixtures
