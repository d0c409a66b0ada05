#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "coindoe/errors.hpp"
#include "coindoe/oe.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace coindoe;

namespace {

std::vector<OeContext> all_contexts() {
  return {fixtures::s1(), fixtures::two_orbits(), fixtures::z6_vs_product(),
          fixtures::integers_h(2), fixtures::trivial_h()};
}

}  // namespace

TEST_CASE("beta and alpha on single letters") {
  const OeContext ctx = fixtures::s1();
  const SpacePtr& s1 = ctx.space(Side::kFirst);
  const SpacePtr& s2 = ctx.space(Side::kSecond);
  const FreeProduct& fp1 = s1->gamma();
  const FreeProduct& fp2 = s2->gamma();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TruncatedConfig f = sample_config(s1, 1, seed);
    const TruncatedConfig g = sample_config(s2, 1, seed);
    CHECK(beta(ctx, fp1.identity(), f).is_identity());
    CHECK(alpha(ctx, fp2.identity(), g).is_identity());
    CHECK(beta(ctx, fp1.h_letter(1), f) == fp2.h_letter(1));
    CHECK(alpha(ctx, fp2.h_letter(1), g) == fp1.h_letter(1));
    for (Element a = 0; a < 4; ++a) {
      CHECK(beta(ctx, fp1.g_letter(a), f) == fp2.g_letter(ctx.cocycles().omega(a, f.value_at(0))));
      CHECK(alpha(ctx, fp2.g_letter(a), g) == fp1.g_letter(ctx.cocycles().upsilon(a, g.value_at(0))));
    }
  }
  // f(e) = x1: beta(1, f) = omega(1, x1) = (1,1) and alpha((1,1), f) = 1.
  const TruncatedConfig f(s1, 0, {1});
  CHECK(beta(ctx, fp1.g_letter(1), f) == fp2.g_letter(3));
  const TruncatedConfig g(s2, 0, {1});
  CHECK(alpha(ctx, fp2.g_letter(3), g) == fp1.g_letter(1));
}

TEST_CASE("beta agrees with the letter-by-letter oracle") {
  std::mt19937_64 rng(23);
  for (const OeContext& ctx : all_contexts()) {
    for (Side side : {Side::kFirst, Side::kSecond}) {
      const SpacePtr& space = ctx.space(side);
      const FreeProduct& fp = space->gamma();
      for (int trial = 0; trial < 200; ++trial) {
        const TruncatedConfig f = sample_config(space, 2, rng());
        const Word w = fixtures::random_word(fp, rng, 6, 2);
        std::optional<Word> got, want;
        try {
          got = side == Side::kFirst ? beta(ctx, w, f) : alpha(ctx, w, f);
        } catch (const TruncationExceeded&) {
        }
        try {
          want = oracles::letter_beta(ctx, side, w, f);
        } catch (const TruncationExceeded&) {
        }
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(*got == *want);
      }
    }
  }
}

TEST_CASE("depth accounting: k blocks need depth k-1") {
  const OeContext ctx = fixtures::s1();
  const FreeProduct& fp = ctx.space(Side::kFirst)->gamma();
  // h g h g h g: three blocks, every g non-trivial.
  const Word w = fp.multiply({fp.h_letter(1), fp.g_letter(1), fp.h_letter(1),
                              fp.g_letter(2), fp.h_letter(1), fp.g_letter(3)});
  REQUIRE(fp.blocks(w).size() == 3);
  CHECK_THROWS_AS(beta(ctx, w, sample_config(ctx.space(Side::kFirst), 1, 0)),
                  TruncationExceeded);
  CHECK_NOTHROW(beta(ctx, w, sample_config(ctx.space(Side::kFirst), 2, 0)));
}

TEST_CASE("the beta and alpha cocycle identities") {
  std::mt19937_64 rng(29);
  for (const OeContext& ctx : all_contexts()) {
    for (Side side : {Side::kFirst, Side::kSecond}) {
      const Side other = side == Side::kFirst ? Side::kSecond : Side::kFirst;
      const SpacePtr& space = ctx.space(side);
      const FreeProduct& src = space->gamma();
      const FreeProduct& dst = ctx.space(other)->gamma();
      const auto cocycle = [&](const Word& w, const TruncatedConfig& f) {
        return side == Side::kFirst ? beta(ctx, w, f) : alpha(ctx, w, f);
      };
      int checked = 0;
      for (int trial = 0; trial < 300; ++trial) {
        const TruncatedConfig f = sample_config(space, 3, rng());
        const Word a = fixtures::random_word(src, rng, 3, 1);
        const Word b = fixtures::random_word(src, rng, 3, 1);
        try {
          const Word lhs = cocycle(src.multiply(a, b), f);
          const Word rhs = dst.multiply(cocycle(a, shift_config(b, f)), cocycle(b, f));
          CHECK(lhs == rhs);
          ++checked;
        } catch (const TruncationExceeded&) {
        }
      }
      CHECK(checked > 100);
    }
  }
}

TEST_CASE("preimage solving") {
  const OeContext ctx = fixtures::s1();
  const SpacePtr& s1 = ctx.space(Side::kFirst);
  const FreeProduct& fp2 = ctx.space(Side::kSecond)->gamma();
  const TruncatedConfig f = sample_config(s1, 2, 1);
  CHECK(solve_beta_preimage(ctx, fp2.identity(), f).is_identity());
  CHECK(solve_beta_preimage(ctx, fp2.h_letter(1), f) == s1->gamma().h_letter(1));

  std::mt19937_64 rng(31);
  for (const OeContext& c : all_contexts()) {
    for (Side side : {Side::kFirst, Side::kSecond}) {
      const Side other = side == Side::kFirst ? Side::kSecond : Side::kFirst;
      const FreeProduct& target = c.space(other)->gamma();
      for (int trial = 0; trial < 100; ++trial) {
        const TruncatedConfig g = sample_config(c.space(side), 2, rng());
        const Word delta = fixtures::random_word(target, rng, 4, 2);
        if (target.blocks(delta).size() > 2) continue;
        // The ball only holds integer letters within the cap.
        bool capped = true;
        for (const Letter& l : delta.letters()) {
          if (l.tag == Tag::kH && target.h().is_integers() && std::abs(l.value) > 2) capped = false;
        }
        if (!capped) continue;
        const Word pre = side == Side::kFirst ? solve_beta_preimage(c, delta, g)
                                              : solve_alpha_preimage(c, delta, g);
        CHECK(oracles::letter_beta(c, side, pre, g) == delta);
        const auto searched = oracles::search_preimage(c, side, delta, g, 2);
        REQUIRE(searched.has_value());
        CHECK(*searched == pre);
      }
    }
  }
}

TEST_CASE("B_f is a length-preserving bijection of rep sets") {
  {
    const OeContext ctx = fixtures::s1();
    const TruncatedConfig f = sample_config(ctx.space(Side::kFirst), 0, 0);
    CHECK(b_map(ctx, ctx.space(Side::kFirst)->gamma().identity(), f).is_identity());
  }
  for (const OeContext& ctx : all_contexts()) {
    const SpacePtr& s1 = ctx.space(Side::kFirst);
    const SpacePtr& s2 = ctx.space(Side::kSecond);
    const FreeProduct& fp2 = s2->gamma();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const TruncatedConfig f = sample_config(s1, 2, seed);
      std::set<std::size_t> hit;
      const auto ball1 = s1->ball(2);
      for (std::size_t i = 0; i < ball1->size(); ++i) {
        const Word image = b_map(ctx, ball1->rep(i), f);
        CHECK(fp2.is_canonical_rep(image));
        CHECK(fp2.coset_length(image) == ball1->length(i));
        const auto idx = s2->ball(2)->find(image);
        REQUIRE(idx.has_value());
        hit.insert(*idx);
      }
      CHECK(hit.size() == s2->ball(2)->size());
    }
  }
}

TEST_CASE("Omega matches the search oracle") {
  for (const OeContext& ctx : all_contexts()) {
    for (Side side : {Side::kFirst, Side::kSecond}) {
      for (std::uint64_t seed = 0; seed < 15; ++seed) {
        for (int depth : {0, 1, 2}) {
          const TruncatedConfig f = sample_config(ctx.space(side), depth, seed);
          const TruncatedConfig g =
              side == Side::kFirst ? omega_map(ctx, f) : theta_map(ctx, f);
          CHECK(g.depth() == depth);
          CHECK(g.value_at(0) == f.value_at(0));
          CHECK(g.values() == oracles::search_omega(ctx, side, f));
        }
      }
    }
  }
}

TEST_CASE("Omega on every depth-1 configuration of the reference pair") {
  const OeContext ctx = fixtures::s1();
  for (ConfigEnumerator it(ctx.space(Side::kFirst), 1); !it.done(); it.next()) {
    const TruncatedConfig& f = it.config();
    const TruncatedConfig g = omega_map(ctx, f);
    CHECK(g.values() == oracles::search_omega(ctx, Side::kFirst, f));
    CHECK(theta_map(ctx, g) == f);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const TruncatedConfig g = sample_config(ctx.space(Side::kSecond), 2, seed);
    CHECK(omega_map(ctx, theta_map(ctx, g)) == g);
  }
}

TEST_CASE("H trivial: Omega is the identity on the single coordinate") {
  const OeContext ctx = fixtures::trivial_h();
  for (int depth : {0, 1, 3}) {
    CHECK(ctx.space(Side::kFirst)->ball(depth)->size() == 1);
    for (Point x = 0; x < 4; ++x) {
      const TruncatedConfig f(ctx.space(Side::kFirst), depth, {x});
      CHECK(omega_map(ctx, f).values() == std::vector<Point>{x});
    }
  }
}

TEST_CASE("inverse pairing and the evaluation identity") {
  for (const OeContext& ctx : all_contexts()) {
    const FreeProduct& fp1 = ctx.space(Side::kFirst)->gamma();
    const FreeProduct& fp2 = ctx.space(Side::kSecond)->gamma();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const TruncatedConfig f = sample_config(ctx.space(Side::kFirst), 2, seed);
      const TruncatedConfig g = omega_map(ctx, f);
      for (const Word& w : fixtures::ball_words(*ctx.space(Side::kFirst), 2)) {
        CHECK(alpha(ctx, beta(ctx, w, f), g) == w);
      }
      for (const Word& w : fixtures::ball_words(*ctx.space(Side::kSecond), 2)) {
        CHECK(eval_config(g, w) == eval_config(f, fp1.invert(alpha(ctx, fp2.invert(w), g))));
      }
    }
  }
}

TEST_CASE("locality") {
  const OeContext ctx = fixtures::s1();
  const SpacePtr& s1 = ctx.space(Side::kFirst);
  const FreeProduct& fp2 = ctx.space(Side::kSecond)->gamma();
  for (int n : {0, 1}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const TruncatedConfig f1 = sample_config(s1, n + 1, seed);
      std::vector<Point> values = f1.values();
      for (std::size_t i = s1->ball(n)->size(); i < values.size(); ++i) {
        values[i] = (values[i] + 1 + seed % 3) % 4;
      }
      const TruncatedConfig f2(s1, n + 1, values);
      const TruncatedConfig g1 = omega_map(ctx, f1);
      const TruncatedConfig g2 = omega_map(ctx, f2);
      CHECK(restrict_config(g1, n) == restrict_config(g2, n));
      for (const Word& gamma : ctx.space(Side::kSecond)->ball(n + 1)->reps()) {
        CHECK(alpha(ctx, fp2.invert(gamma), g1) == alpha(ctx, fp2.invert(gamma), g2));
      }
    }
  }
}

TEST_CASE("configs from the wrong side are rejected") {
  const OeContext ctx = fixtures::s1();
  const OeContext other = fixtures::s1();
  const TruncatedConfig f2 = sample_config(ctx.space(Side::kSecond), 1, 0);
  CHECK_THROWS_AS(omega_map(ctx, f2), std::invalid_argument);
  CHECK_THROWS_AS(omega_map(other, sample_config(ctx.space(Side::kFirst), 1, 0)),
                  std::invalid_argument);
}

TEST_CASE("a corrupted omega entry surfaces as PreimageMismatch") {
  const OeContext good = fixtures::s1();
  const CocycleTable& t = good.cocycles();
  // omega(1, x2) replaced by omega(3, x2); upsilon is left untouched.
  const OeContext bad = OeContext::unchecked(fixtures::s1_pair(),
                                             t.with_omega_entry(1, 2, t.omega(3, 2)),
                                             FreeFactor::finite(FiniteGroup::cyclic(2)));
  CHECK_THROWS_AS(OeContext::with_cocycles(fixtures::s1_pair(), bad.cocycles(),
                                           FreeFactor::finite(FiniteGroup::cyclic(2))),
                  CocycleInconsistent);
  int mismatches = 0;
  for (ConfigEnumerator it(bad.space(Side::kFirst), 1); !it.done(); it.next()) {
    try {
      omega_map(bad, it.config());
    } catch (const PreimageMismatch&) {
      ++mismatches;
    }
  }
  CHECK(mismatches > 0);
  const FreeProduct& fp2 = bad.space(Side::kSecond)->gamma();
  const TruncatedConfig f(bad.space(Side::kFirst), 0, {2});
  // upsilon still sends omega(1, x2) back to 1, whose image is now omega(3, x2).
  const Word delta = fp2.g_letter(t.omega(1, 2));
  CHECK_THROWS_AS(solve_beta_preimage(bad, delta, f), PreimageMismatch);
}
