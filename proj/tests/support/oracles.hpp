#pragma once

// Deliberately naive reference implementations. They share no code paths with
// the library beyond the group tables and config evaluation.

#include <optional>
#include <stdexcept>
#include <vector>

#include "coindoe/actions.hpp"
#include "coindoe/coinduction.hpp"
#include "coindoe/groups.hpp"
#include "coindoe/oe.hpp"

namespace oracles {

using namespace coindoe;

// Repeatedly scan for an identity letter or two adjacent same-tag letters and
// fix the first one found.
inline std::vector<Letter> naive_reduce(std::vector<Letter> w, const FiniteGroup& g,
                                        const FreeFactor& h) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const bool is_id = w[i].tag == Tag::kG
                             ? w[i].value == static_cast<std::int64_t>(g.identity())
                             : w[i].value == h.identity();
      if (is_id) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (i + 1 < w.size() && w[i].tag == w[i + 1].tag) {
        w[i].value = w[i].tag == Tag::kG
                         ? g.mul(static_cast<Element>(w[i].value),
                                 static_cast<Element>(w[i + 1].value))
                         : h.mul(w[i].value, w[i + 1].value);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// The unique c in G2 with T2(c) x = T1(g) x, by exhaustive search.
inline Element search_cocycle(const PmpAction& a1, const PmpAction& a2,
                              Element g, Point x) {
  std::optional<Element> found;
  for (Element c = 0; c < a2.group().order(); ++c) {
    if (a2.act(c, x) == a1.act(g, x)) {
      if (found) throw std::logic_error("cocycle value not unique");
      found = c;
    }
  }
  if (!found) throw std::logic_error("no cocycle value");
  return *found;
}

// beta by peeling letters off the left:
//   beta(h w) = h beta(w),  beta(g w) = omega(g, f(w^{-1})) beta(w).
// The cocycle is found by search, never read from the table.
inline Word letter_beta(const OeContext& ctx, Side from, const Word& gamma,
                        const TruncatedConfig& f) {
  const Side to = from == Side::kFirst ? Side::kSecond : Side::kFirst;
  const FreeProduct& src = ctx.space(from)->gamma();
  const FreeProduct& dst = ctx.space(to)->gamma();
  const PmpAction& a_from = ctx.space(from)->action();
  const PmpAction& a_to = ctx.space(to)->action();
  const auto letters = gamma.letters();
  Word result = dst.identity();
  for (std::size_t i = letters.size(); i-- > 0;) {
    const Word rest = src.reduce(letters.subspan(i + 1));
    const Letter l = letters[i];
    if (l.tag == Tag::kH) {
      result = dst.multiply(dst.h_letter(l.value), result);
    } else {
      const Point x = eval_config(f, src.invert(rest));
      const Element c = search_cocycle(a_from, a_to, static_cast<Element>(l.value), x);
      result = dst.multiply(dst.g_letter(c), result);
    }
  }
  return result;
}

// Preimage of delta under letter_beta, by search over the ball words of the
// given depth and their inverses.
inline std::optional<Word> search_preimage(const OeContext& ctx, Side from,
                                           const Word& delta,
                                           const TruncatedConfig& f, int depth) {
  const CoinducedSpace& space = *ctx.space(from);
  const FreeProduct& fp = space.gamma();
  for (const Word& rep : space.ball(depth)->reps()) {
    for (Element g = 0; g < fp.g().order(); ++g) {
      const Word w = fp.multiply(rep, fp.g_letter(g));
      for (const Word& cand : {w, fp.invert(w)}) {
        try {
          if (letter_beta(ctx, from, cand, f) == delta) return cand;
        } catch (const TruncationExceeded&) {
        }
      }
    }
  }
  return std::nullopt;
}

// Omega f by its defining property (Omega f)(beta(gamma^{-1}, f)^{-1}) = f(gamma),
// searching gamma over the side-1 ball words for each side-2 rep.
inline std::vector<Point> search_omega(const OeContext& ctx, Side from,
                                       const TruncatedConfig& f) {
  const Side to = from == Side::kFirst ? Side::kSecond : Side::kFirst;
  const CoinducedSpace& src = *ctx.space(from);
  const CoinducedSpace& dst = *ctx.space(to);
  const FreeProduct& fs = src.gamma();
  const FreeProduct& fd = dst.gamma();
  const auto target = dst.ball(f.depth());
  std::vector<std::optional<Point>> values(target->size());
  for (const Word& rep : src.ball(f.depth())->reps()) {
    for (Element g = 0; g < fs.g().order(); ++g) {
      const Word gamma = fs.multiply(rep, fs.g_letter(g));
      const Word image = fd.invert(letter_beta(ctx, from, fs.invert(gamma), f));
      if (const auto idx = target->find(image)) {
        const Point x = eval_config(f, gamma);
        if (values[*idx] && *values[*idx] != x) {
          throw std::logic_error("search_omega: inconsistent values");
        }
        values[*idx] = x;
      }
    }
  }
  std::vector<Point> out;
  for (const auto& v : values) {
    if (!v) throw std::logic_error("search_omega: rep not reached");
    out.push_back(*v);
  }
  return out;
}

}  // namespace oracles
