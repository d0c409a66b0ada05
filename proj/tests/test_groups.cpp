#include <doctest.h>

#include <random>
#include <set>

#include "coindoe/errors.hpp"
#include "coindoe/groups.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace coindoe;

namespace {

FreeProduct z4_z2() {
  return FreeProduct(FiniteGroup::cyclic(4), FreeFactor::finite(FiniteGroup::cyclic(2)));
}

}  // namespace

TEST_CASE("finite groups from tables") {
  const FiniteGroup z4 = FiniteGroup::from_table(
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  CHECK(z4.order() == 4);
  CHECK(z4.identity() == 0);
  CHECK(z4.inv(1) == 3);
  CHECK(z4 == FiniteGroup::cyclic(4));

  const FiniteGroup k = fixtures::klein();
  for (Element a = 0; a < 4; ++a) CHECK(k.inv(a) == a);
  CHECK(k.mul(1, 2) == 3);

  SUBCASE("identity need not be element 0") {
    const FiniteGroup g = FiniteGroup::from_table({{1, 0}, {0, 1}});
    CHECK(g.identity() == 1);
    CHECK(g.inv(0) == 0);
  }
}

TEST_CASE("non-groups are rejected with a witness") {
  SUBCASE("associativity") {
    try {
      FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 2, 0}});
      FAIL("expected NotAGroup");
    } catch (const NotAGroup& e) {
      CHECK(e.axiom() == NotAGroup::Axiom::kAssociativity);
      // The witness really violates associativity in the given table.
      const std::vector<std::vector<Element>> t{{0, 1, 2}, {1, 2, 0}, {2, 2, 0}};
      const auto a = e.a(), b = e.b(), c = e.c();
      CHECK(t[t[a][b]][c] != t[a][t[b][c]]);
    }
  }
  SUBCASE("no identity") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 1}, {1, 1}}), NotAGroup);
  }
  SUBCASE("no inverses") {
    // Associative monoid {0,1} under max: identity 0, but 1 has no inverse.
    try {
      FiniteGroup::from_table({{0, 1}, {1, 1}});
      FAIL("expected NotAGroup");
    } catch (const NotAGroup& e) {
      CHECK(e.axiom() == NotAGroup::Axiom::kInverse);
    }
  }
  SUBCASE("malformed table") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), NotAGroup);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 5}, {5, 0}}), NotAGroup);
  }
}

TEST_CASE("group table text format round-trips") {
  const FiniteGroup k = fixtures::klein();
  const std::string text = format_group_table(k);
  CHECK(parse_group_table(text) == k);
  CHECK_THROWS_AS(parse_group_table("2\n0 1\n1"), ParseError);
  CHECK_THROWS_AS(parse_group_table("x"), ParseError);
}

TEST_CASE("generating sets generate") {
  for (const FiniteGroup& g :
       {FiniteGroup::cyclic(6), fixtures::klein(), FiniteGroup::trivial(),
        FiniteGroup::elementary_abelian2(3)}) {
    std::set<Element> closure{g.identity()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (Element a : std::set<Element>(closure)) {
        for (Element s : g.generating_set()) {
          grew |= closure.insert(g.mul(a, s)).second;
        }
      }
    }
    CHECK(closure.size() == g.order());
  }
  CHECK(FiniteGroup::cyclic(4).generating_set() == std::vector<Element>{1});
  CHECK(fixtures::klein().generating_set() == std::vector<Element>{1, 2});
}

TEST_CASE("word multiplication") {
  const FreeProduct fp = z4_z2();
  const Word h = fp.h_letter(1);
  CHECK(fp.multiply(h, fp.invert(h)).is_identity());
  CHECK(fp.multiply(fp.g_letter(1), h).size() == 2);
  for (Element g1 = 0; g1 < 4; ++g1) {
    for (Element g2 = 0; g2 < 4; ++g2) {
      const Word left = fp.multiply(fp.g_letter(g1), h);
      const Word right = fp.multiply(fp.h_letter(1), fp.g_letter(g2));
      const Word prod = fp.multiply(left, right);
      // h * h = e in Z/2, so the seam collapses.
      CHECK(prod == fp.g_letter((g1 + g2) % 4));
      CHECK(prod.is_identity() == ((g1 + g2) % 4 == 0));
    }
  }
  CHECK_THROWS_AS(fp.g_letter(4), std::invalid_argument);
  CHECK_THROWS_AS(fp.h_letter(2), std::invalid_argument);
}

TEST_CASE("reduction agrees with a naive reducer") {
  std::mt19937_64 rng(11);
  for (const FreeProduct& fp :
       {z4_z2(), FreeProduct(fixtures::klein(), FreeFactor::integers()),
        FreeProduct(FiniteGroup::cyclic(3), FreeFactor::finite(FiniteGroup::cyclic(3)))}) {
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Letter> letters;
      const std::size_t n = rng() % 12;
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() % 2) {
          letters.push_back({Tag::kG, static_cast<std::int64_t>(rng() % fp.g().order())});
        } else if (fp.h().is_integers()) {
          letters.push_back({Tag::kH, static_cast<std::int64_t>(rng() % 5) - 2});
        } else {
          letters.push_back({Tag::kH, static_cast<std::int64_t>(rng() % fp.h().group().order())});
        }
      }
      const Word w = fp.reduce(letters);
      const auto expected = oracles::naive_reduce(letters, fp.g(), fp.h());
      REQUIRE(std::vector<Letter>(w.letters().begin(), w.letters().end()) == expected);
    }
  }
}

TEST_CASE("inverse and group laws on random words") {
  std::mt19937_64 rng(3);
  const FreeProduct fp = z4_z2();
  const FreeProduct fz(FiniteGroup::cyclic(3), FreeFactor::integers());
  CHECK(fp.invert(fp.identity()).is_identity());
  const Word hg = fp.multiply(fp.h_letter(1), fp.g_letter(1));
  CHECK(fp.invert(hg) == fp.multiply(fp.g_letter(3), fp.h_letter(1)));
  for (const FreeProduct* p : {&fp, &fz}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Word u = fixtures::random_word(*p, rng, 8);
      const Word v = fixtures::random_word(*p, rng, 8);
      const Word w = fixtures::random_word(*p, rng, 8);
      CHECK(p->multiply(u, p->invert(u)).is_identity());
      CHECK(p->multiply(p->invert(u), u).is_identity());
      CHECK(p->multiply(p->multiply(u, v), w) == p->multiply(u, p->multiply(v, w)));
      CHECK(p->multiply(u, p->identity()) == u);
      CHECK(p->invert(p->multiply(u, v)) == p->multiply(p->invert(v), p->invert(u)));
    }
  }
}

TEST_CASE("six-syllable words cancel against their inverses") {
  const FreeProduct fp = z4_z2();
  std::mt19937_64 rng(5);
  int seen = 0;
  while (seen < 50) {
    const Word w = fixtures::random_word(fp, rng, 12);
    if (w.size() != 6) continue;
    ++seen;
    CHECK(fp.multiply(w, fp.invert(w)).is_identity());
  }
}

TEST_CASE("coset sections") {
  const FreeProduct fp = z4_z2();
  const Word g = fp.g_letter(2);
  CHECK(fp.coset_section(g).rep.is_identity());
  CHECK(fp.coset_section(g).g == 2);
  const Word gh = fp.multiply(fp.g_letter(3), fp.h_letter(1));
  CHECK(fp.coset_section(gh).rep == gh);
  CHECK(fp.coset_section(gh).g == 0);
  const Word hg = fp.multiply(fp.h_letter(1), fp.g_letter(3));
  const CosetSection s = fp.coset_section(hg);
  CHECK(fp.multiply(s.rep, fp.g_letter(s.g)) == hg);
  CHECK(s.rep == fp.h_letter(1));
  CHECK(fp.coset_length(fp.identity()) == 0);
  CHECK(fp.coset_length(gh) == 1);

  // rep * g = w and rep canonical, across every word of a depth-3 ball.
  const Ball ball = fp.enumerate_reps(3, std::nullopt);
  for (const Word& rep : ball.reps()) {
    for (Element a = 0; a < 4; ++a) {
      const Word w = fp.multiply(rep, fp.g_letter(a));
      const CosetSection cs = fp.coset_section(w);
      CHECK(fp.multiply(cs.rep, fp.g_letter(cs.g)) == w);
      CHECK(fp.is_canonical_rep(cs.rep));
      CHECK(cs.rep == rep);
      // Structural oracle: count H-letters of the representative.
      int hs = 0;
      for (const Letter& l : cs.rep.letters()) hs += l.tag == Tag::kH;
      CHECK(fp.coset_length(w) == hs);
      for (Element b = 0; b < 4; ++b) {
        CHECK(fp.coset_length(fp.multiply(w, fp.g_letter(b))) == fp.coset_length(w));
      }
    }
  }
}

TEST_CASE("ball enumeration") {
  const FreeProduct fp = z4_z2();
  CHECK(fp.enumerate_reps(0, std::nullopt).size() == 1);
  CHECK(fp.enumerate_reps(0, std::nullopt).rep(0).is_identity());
  const Ball b1 = fp.enumerate_reps(1, std::nullopt);
  CHECK(b1.size() == 1 + 4 * (2 - 1));
  const Ball b2 = fp.enumerate_reps(2, std::nullopt);
  CHECK(b2.size() == 5 + 4 * 1 * 3 * 1);
  const Ball b3 = fp.enumerate_reps(3, std::nullopt);
  CHECK(b3.size() == 17 + 12 * 3);

  SUBCASE("ordering, parents and prefix closure") {
    for (std::size_t i = 0; i < b3.size(); ++i) {
      CHECK(fp.is_canonical_rep(b3.rep(i)));
      CHECK(fp.coset_length(b3.rep(i)) == b3.length(i));
      if (i > 0) {
        CHECK(b3.length(i - 1) <= b3.length(i));
        const std::size_t p = b3.parent(i);
        REQUIRE(p != Ball::kNoParent);
        CHECK(b3.length(p) + 1 == b3.length(i));
        // Dropping the trailing g_k h_k block gives the parent.
        auto letters = b3.rep(i).letters();
        const std::size_t drop = b3.length(i) == 1 ? letters.size() : 2;
        CHECK(fp.reduce(letters.first(letters.size() - drop)) == b3.rep(p));
      }
    }
    for (std::size_t i = 0; i < b2.size(); ++i) CHECK(b2.rep(i) == b3.rep(i));
    CHECK(b3.prefix_size(1) == 5);
    CHECK(b3.prefix_size(2) == 17);
  }

  SUBCASE("reps lie in distinct cosets") {
    for (std::size_t i = 0; i < b3.size(); ++i) {
      for (std::size_t j = i + 1; j < b3.size(); ++j) {
        const Word q = fp.multiply(fp.invert(b3.rep(i)), b3.rep(j));
        const bool same_coset = q.is_identity() ||
                                (q.size() == 1 && q.letters()[0].tag == Tag::kG);
        CHECK_FALSE(same_coset);
      }
    }
  }

  SUBCASE("lexicographic order within a level") {
    auto key = [&](const Word& w) {
      std::vector<std::int64_t> k;
      const auto l = w.letters();
      std::size_t i = 0;
      if (!l.empty() && l[0].tag == Tag::kH) k.push_back(0);
      for (; i < l.size(); ++i) k.push_back(l[i].value);
      return k;
    };
    for (std::size_t i = 1; i < b3.size(); ++i) {
      if (b3.length(i) == b3.length(i - 1)) CHECK(key(b3.rep(i - 1)) < key(b3.rep(i)));
    }
  }
}

TEST_CASE("integers as the free factor") {
  const FreeProduct fp(FiniteGroup::cyclic(2), FreeFactor::integers());
  CHECK_THROWS_AS(fp.enumerate_reps(1, std::nullopt), std::invalid_argument);
  const Ball b = fp.enumerate_reps(2, 2);
  CHECK(b.size() == 1 + 2 * 4 + 2 * 4 * 1 * 4);
  CHECK(fp.multiply(fp.h_letter(3), fp.h_letter(-3)).is_identity());
  CHECK(fp.multiply(fp.h_letter(3), fp.h_letter(-1)) == fp.h_letter(2));
  CHECK(FreeFactor::integers().generators() == std::vector<std::int64_t>{1});
}

TEST_CASE("word text format") {
  const FreeProduct fp = z4_z2();
  const Word w = fp.multiply({fp.g_letter(3), fp.h_letter(1), fp.g_letter(2)});
  CHECK(format_word(w) == "g:3 h:1 g:2");
  CHECK(fp.parse_word("g:3 h:1 g:2") == w);
  CHECK(fp.parse_word("e").is_identity());
  CHECK(fp.parse_word("g:1 g:3") == fp.identity());
  CHECK_THROWS(fp.parse_word("x:1"));
  CHECK_THROWS(fp.parse_word("g:9"));
}
