#include "coindoe/actions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "coindoe/errors.hpp"

namespace coindoe {

// ---------------------------------------------------------------------------
// ProbSpace

std::uint32_t ProductLayout::coordinate(Point p, Element g) const {
  std::uint64_t v = p;
  for (Element i = 0; i < g; ++i) v /= base_size();
  return static_cast<std::uint32_t>(v % base_size());
}

Point ProductLayout::encode(std::span<const std::uint32_t> tuple) const {
  std::uint64_t p = 0;
  for (std::size_t i = tuple.size(); i-- > 0;) p = p * base_size() + tuple[i];
  return static_cast<Point>(p);
}

ProbSpace::ProbSpace(std::vector<Rational> masses) : masses_(std::move(masses)) {
  if (masses_.empty()) throw InvalidSpace("probability space has no points");
  Rational total = 0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (masses_[i] <= 0) {
      throw InvalidSpace("point " + std::to_string(i) +
                         " has non-positive mass " +
                         format_rational(masses_[i]));
    }
    total += masses_[i];
  }
  if (total != 1) {
    throw InvalidSpace("masses sum to " + format_rational(total) +
                       ", expected 1");
  }
}

ProbSpace ProbSpace::uniform(std::size_t n) {
  if (n == 0) throw InvalidSpace("probability space has no points");
  return ProbSpace(std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
}

ProbSpace ProbSpace::product(const ProbSpace& base, std::size_t group_order) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < group_order; ++i) {
    count *= base.size();
    if (count > (1u << 24)) {
      throw InvalidSpace("product space K^G is too large to materialize");
    }
  }
  ProductLayout layout{base.masses(), group_order};
  std::vector<Rational> masses(count);
  for (Point p = 0; p < count; ++p) {
    Rational m = 1;
    for (Element g = 0; g < group_order; ++g) {
      m *= base.mass(layout.coordinate(p, g));
    }
    masses[p] = m;
  }
  ProbSpace out(std::move(masses));
  out.layout_ = std::move(layout);
  return out;
}

// ---------------------------------------------------------------------------
// PmpAction

namespace {

void check_permutation(const std::vector<Point>& perm, std::size_t n,
                       Element g) {
  if (perm.size() != n) {
    throw std::invalid_argument("permutation for element " +
                                std::to_string(g) + " has " +
                                std::to_string(perm.size()) +
                                " images, expected " + std::to_string(n));
  }
  std::vector<bool> hit(n, false);
  for (Point y : perm) {
    if (y >= n || hit[y]) {
      throw std::invalid_argument("images for element " + std::to_string(g) +
                                  " are not a permutation of the points");
    }
    hit[y] = true;
  }
}

}  // namespace

void validate_action(const FiniteGroup& group, const ProbSpace& space,
                     const std::vector<std::vector<Point>>& perms) {
  const std::size_t n = space.size();
  if (perms.size() != group.order()) {
    throw std::invalid_argument("action needs one permutation per element");
  }
  for (Element g = 0; g < group.order(); ++g) check_permutation(perms[g], n, g);

  for (Element g1 = 0; g1 < group.order(); ++g1) {
    for (Element g2 = 0; g2 < group.order(); ++g2) {
      const auto& composite = perms[group.mul(g1, g2)];
      for (Point x = 0; x < n; ++x) {
        if (composite[x] != perms[g1][perms[g2][x]]) {
          throw NotHomomorphism(g1, g2, x);
        }
      }
    }
  }
  for (Element g = 0; g < group.order(); ++g) {
    for (Point x = 0; x < n; ++x) {
      if (space.mass(perms[g][x]) != space.mass(x)) {
        throw NotMeasurePreserving(g, x);
      }
    }
  }
}

PmpAction PmpAction::from_tables(FiniteGroup group, ProbSpace space,
                                 std::vector<std::vector<Point>> perms) {
  validate_action(group, space, perms);
  return PmpAction(std::move(group), std::move(space), std::move(perms));
}

PmpAction PmpAction::from_generators(
    FiniteGroup group, ProbSpace space,
    const std::vector<std::pair<Element, std::vector<Point>>>& generators) {
  const std::size_t n = space.size();
  for (const auto& [g, images] : generators) {
    if (!group.contains(g)) {
      throw std::invalid_argument("generator " + std::to_string(g) +
                                  " is not a group element");
    }
    check_permutation(images, n, g);
  }

  std::vector<std::vector<Point>> perms(group.order());
  std::vector<Point> id(n);
  for (Point x = 0; x < n; ++x) id[x] = x;
  perms[group.identity()] = id;

  // T(a s) = T(a) o T(s), explored breadth-first from the identity.
  std::vector<Element> queue{group.identity()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element a = queue[qi];
    for (const auto& [s, images] : generators) {
      const Element b = group.mul(a, s);
      std::vector<Point> composed(n);
      for (Point x = 0; x < n; ++x) composed[x] = perms[a][images[x]];
      if (perms[b].empty()) {
        perms[b] = std::move(composed);
        queue.push_back(b);
      } else if (perms[b] != composed) {
        for (Point x = 0; x < n; ++x) {
          if (perms[b][x] != composed[x]) throw NotHomomorphism(a, s, x);
        }
      }
    }
  }
  if (queue.size() != group.order()) {
    throw std::invalid_argument("the listed generators do not generate the "
                                "group (" +
                                std::to_string(queue.size()) + " of " +
                                std::to_string(group.order()) +
                                " elements reached)");
  }
  return from_tables(std::move(group), std::move(space), std::move(perms));
}

PmpAction PmpAction::bernoulli_shift(FiniteGroup group, const ProbSpace& base) {
  ProbSpace space = ProbSpace::product(base, group.order());
  const ProductLayout& layout = *space.layout();
  std::vector<std::vector<Point>> perms(group.order(),
                                        std::vector<Point>(space.size()));
  std::vector<std::uint32_t> shifted(group.order());
  for (Element g = 0; g < group.order(); ++g) {
    const Element g_inv = group.inv(g);
    for (Point p = 0; p < space.size(); ++p) {
      for (Element h = 0; h < group.order(); ++h) {
        shifted[h] = layout.coordinate(p, group.mul(g_inv, h));
      }
      perms[g][p] = layout.encode(shifted);
    }
  }
  return from_tables(std::move(group), std::move(space), std::move(perms));
}

std::vector<std::vector<Point>> orbit_partition(const PmpAction& action) {
  const std::size_t n = action.space().size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> orbits;
  for (Point x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Point> orbit;
    for (Element g = 0; g < action.group().order(); ++g) {
      const Point y = action.act(g, x);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// ---------------------------------------------------------------------------
// OrbitEqualPair

namespace {

std::vector<std::size_t> orbit_ids(const PmpAction& a) {
  std::vector<std::size_t> id(a.space().size());
  const auto orbits = orbit_partition(a);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (Point x : orbits[i]) id[x] = i;
  return id;
}

void check_free(const PmpAction& a, int which) {
  for (Element g = 0; g < a.group().order(); ++g) {
    if (g == a.group().identity()) continue;
    for (Point x = 0; x < a.space().size(); ++x) {
      if (a.act(g, x) == x) throw NotFree(which, g, x);
    }
  }
}

}  // namespace

OrbitEqualPair OrbitEqualPair::make(PmpAction first, PmpAction second) {
  if (!(first.space() == second.space())) {
    throw InvalidSpace("orbit-equal actions must share one probability space");
  }
  // Orbits are compared first so that a mismatch is reported as such even
  // when one side is also non-free.
  const auto id1 = orbit_ids(first);
  const auto id2 = orbit_ids(second);
  const std::size_t n = first.space().size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if ((id1[x] == id1[y]) != (id2[x] == id2[y])) throw OrbitMismatch(x);
    }
  }
  check_free(first, 1);
  check_free(second, 2);
  return OrbitEqualPair(std::move(first), std::move(second));
}

// ---------------------------------------------------------------------------
// Cocycles

CocycleTable CocycleTable::from_tables(std::size_t order1, std::size_t order2,
                                       std::size_t points,
                                       std::vector<Element> omega,
                                       std::vector<Element> upsilon) {
  if (omega.size() != order1 * points || upsilon.size() != order2 * points) {
    throw std::invalid_argument("cocycle table has the wrong shape");
  }
  for (Element v : omega)
    if (v >= order2) throw std::invalid_argument("omega value out of range");
  for (Element v : upsilon)
    if (v >= order1) throw std::invalid_argument("upsilon value out of range");
  CocycleTable t;
  t.order1_ = order1;
  t.order2_ = order2;
  t.points_ = points;
  t.omega_ = std::move(omega);
  t.upsilon_ = std::move(upsilon);
  return t;
}

CocycleTable CocycleTable::inverted() const {
  return from_tables(order2_, order1_, points_, upsilon_, omega_);
}

CocycleTable CocycleTable::with_omega_entry(Element g, Point x,
                                            Element value) const {
  CocycleTable t = *this;
  if (g >= order1_ || x >= points_ || value >= order2_) {
    throw std::invalid_argument("cocycle entry out of range");
  }
  t.omega_[g * points_ + x] = value;
  return t;
}

namespace {

// One direction: c maps (g in A, x) to B where both act on the same points.
void audit_direction(const PmpAction& from, const PmpAction& to,
                     const std::function<Element(Element, Point)>& c,
                     const std::string& name,
                     std::vector<IdentityAudit>& out) {
  const FiniteGroup& ga = from.group();
  const FiniteGroup& gb = to.group();
  const std::size_t n = from.space().size();

  IdentityAudit action{name + ".action", name + "(g,x)·x = g·x", 0, 0, {}};
  for (Element g = 0; g < ga.order(); ++g) {
    for (Point x = 0; x < n; ++x) {
      ++action.checked;
      if (to.act(c(g, x), x) != from.act(g, x) && action.violations++ == 0) {
        action.witness = {g, x};
      }
    }
  }
  out.push_back(std::move(action));

  IdentityAudit cocycle{name + ".cocycle",
                        name + "(g₁g₂,x) = " + name + "(g₁,g₂·x)·" + name +
                            "(g₂,x)",
                        0, 0, {}};
  for (Element g1 = 0; g1 < ga.order(); ++g1) {
    for (Element g2 = 0; g2 < ga.order(); ++g2) {
      for (Point x = 0; x < n; ++x) {
        ++cocycle.checked;
        const Element lhs = c(ga.mul(g1, g2), x);
        const Element rhs = gb.mul(c(g1, from.act(g2, x)), c(g2, x));
        if (lhs != rhs && cocycle.violations++ == 0) {
          cocycle.witness = {g1, g2, x};
        }
      }
    }
  }
  out.push_back(std::move(cocycle));
}

}  // namespace

std::vector<IdentityAudit> audit_cocycle(const OrbitEqualPair& pair,
                                         const CocycleTable& table) {
  const auto& a1 = pair.first();
  const auto& a2 = pair.second();
  const std::size_t n = pair.space().size();
  if (table.order1() != a1.group().order() ||
      table.order2() != a2.group().order() || table.points() != n) {
    throw std::invalid_argument("cocycle table does not match the pair");
  }

  std::vector<IdentityAudit> out;
  audit_direction(
      a1, a2, [&](Element g, Point x) { return table.omega(g, x); }, "ω", out);
  audit_direction(
      a2, a1, [&](Element g, Point x) { return table.upsilon(g, x); }, "υ",
      out);

  IdentityAudit round2{"ω∘υ.roundtrip", "ω(υ(g₂,x),x) = g₂", 0, 0, {}};
  for (Element g = 0; g < a2.group().order(); ++g) {
    for (Point x = 0; x < n; ++x) {
      ++round2.checked;
      if (table.omega(table.upsilon(g, x), x) != g && round2.violations++ == 0)
        round2.witness = {g, x};
    }
  }
  IdentityAudit round1{"υ∘ω.roundtrip", "υ(ω(g₁,x),x) = g₁", 0, 0, {}};
  for (Element g = 0; g < a1.group().order(); ++g) {
    for (Point x = 0; x < n; ++x) {
      ++round1.checked;
      if (table.upsilon(table.omega(g, x), x) != g && round1.violations++ == 0)
        round1.witness = {g, x};
    }
  }
  out.push_back(std::move(round2));
  out.push_back(std::move(round1));
  return out;
}

void validate_cocycle(const OrbitEqualPair& pair, const CocycleTable& table) {
  for (const auto& audit : audit_cocycle(pair, table)) {
    if (audit.violations == 0) continue;
    std::string w;
    for (auto v : audit.witness) w += (w.empty() ? "" : ",") + std::to_string(v);
    throw CocycleInconsistent("cocycle identity " + audit.formula +
                              " fails at (" + w + ")");
  }
}

CocycleTable compute_zimmer_cocycle(const OrbitEqualPair& pair) {
  const auto& a1 = pair.first();
  const auto& a2 = pair.second();
  const std::size_t n = pair.space().size();

  // solve[x][y] = the element of `a` moving x to y, if any.
  auto solver = [n](const PmpAction& a) {
    constexpr Element kNone = static_cast<Element>(-1);
    std::vector<std::vector<Element>> solve(n, std::vector<Element>(n, kNone));
    for (Point x = 0; x < n; ++x) {
      for (Element g = 0; g < a.group().order(); ++g) {
        Element& slot = solve[x][a.act(g, x)];
        if (slot != kNone) {
          throw CocycleInconsistent(
              "cocycle is not unique: two elements move point " +
              std::to_string(x) + " to the same image");
        }
        slot = g;
      }
    }
    return solve;
  };
  const auto solve1 = solver(a1);
  const auto solve2 = solver(a2);

  auto fill = [n](const PmpAction& from,
                  const std::vector<std::vector<Element>>& solve_to) {
    std::vector<Element> out(from.group().order() * n);
    for (Element g = 0; g < from.group().order(); ++g) {
      for (Point x = 0; x < n; ++x) {
        const Element v = solve_to[x][from.act(g, x)];
        if (v == static_cast<Element>(-1)) throw OrbitMismatch(x);
        out[g * n + x] = v;
      }
    }
    return out;
  };

  auto table = CocycleTable::from_tables(a1.group().order(), a2.group().order(),
                                         n, fill(a1, solve2), fill(a2, solve1));
  validate_cocycle(pair, table);
  return table;
}

CocycleTable invert_cocycle(const CocycleTable& table) {
  return table.inverted();
}

}  // namespace coindoe
