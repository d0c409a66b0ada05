#include "coindoe/oe.hpp"

#include <stdexcept>
#include <vector>

#include "coindoe/errors.hpp"

namespace coindoe {

OeContext::OeContext(OrbitEqualPair pair, CocycleTable cocycles,
                     const FreeFactor& h, std::optional<std::int64_t> h_cap)
    : pair_(std::move(pair)),
      cocycles_(std::move(cocycles)),
      first_(CoinducedSpace::create(pair_.first(), h, h_cap)),
      second_(CoinducedSpace::create(pair_.second(), h, h_cap)) {}

OeContext OeContext::create(OrbitEqualPair pair, FreeFactor h,
                            std::optional<std::int64_t> h_cap) {
  CocycleTable table = compute_zimmer_cocycle(pair);
  return OeContext(std::move(pair), std::move(table), h, h_cap);
}

OeContext OeContext::with_cocycles(OrbitEqualPair pair, CocycleTable cocycles,
                                   FreeFactor h,
                                   std::optional<std::int64_t> h_cap) {
  validate_cocycle(pair, cocycles);
  return OeContext(std::move(pair), std::move(cocycles), h, h_cap);
}

OeContext OeContext::unchecked(OrbitEqualPair pair, CocycleTable cocycles,
                               FreeFactor h,
                               std::optional<std::int64_t> h_cap) {
  return OeContext(std::move(pair), std::move(cocycles), h, h_cap);
}

namespace {

// One direction of the construction. forward is the cocycle used by the
// recursion (omega for beta), backward the one used to solve it.
struct Route {
  const CoinducedSpace& from;
  const SpacePtr& to_ptr;
  const CoinducedSpace& to;
  const CocycleTable& table;
  bool reversed;

  Element forward(Element g, Point x) const {
    return reversed ? table.upsilon(g, x) : table.omega(g, x);
  }
  Element backward(Element g, Point x) const {
    return reversed ? table.omega(g, x) : table.upsilon(g, x);
  }
};

Route route(const OeContext& ctx, Side from, const TruncatedConfig& f) {
  const SpacePtr& source = ctx.space(from);
  if (f.space() != source) {
    throw std::invalid_argument(
        "configuration does not belong to the expected side of this context");
  }
  const Side to = from == Side::kFirst ? Side::kSecond : Side::kFirst;
  return Route{*source, ctx.space(to), *ctx.space(to), ctx.cocycles(),
               from == Side::kSecond};
}

Word cocycle_word(const Route& r, const Word& gamma, const TruncatedConfig& f) {
  const FreeProduct& src = r.from.gamma();
  const FreeProduct& dst = r.to.gamma();
  const std::vector<Block> blocks = src.blocks(gamma);
  Word result = dst.identity();
  Word tau = src.identity();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    const Point x = eval_config(f, src.invert(tau));
    result = dst.multiply(
        {dst.h_letter(it->h), dst.g_letter(r.forward(it->g, x)), result});
    tau = src.multiply({src.h_letter(it->h), src.g_letter(it->g), tau});
  }
  return result;
}

Word solve_preimage(const Route& r, const Word& delta, const TruncatedConfig& f) {
  const FreeProduct& src = r.from.gamma();
  const FreeProduct& dst = r.to.gamma();
  const std::vector<Block> blocks = dst.blocks(delta);
  Word tau = src.identity();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    const Point x = eval_config(f, src.invert(tau));
    tau = src.multiply(
        {src.h_letter(it->h), src.g_letter(r.backward(it->g, x)), tau});
  }
  const Word image = cocycle_word(r, tau, f);
  if (image != delta) {
    throw PreimageMismatch(format_word(delta), format_word(image));
  }
  return tau;
}

TruncatedConfig transport(const Route& r, const TruncatedConfig& f) {
  const FreeProduct& src = r.from.gamma();
  const FreeProduct& dst = r.to.gamma();
  const FiniteGroup& target_g = dst.g();
  const auto ball = r.to.ball(f.depth());
  // tau[i] is the preimage of rep(i)^{-1}; rep(i) = rep(parent) g_k h_k gives
  // rep(i)^{-1} = h_k^{-1} g_k^{-1} rep(parent)^{-1}, one more solver step.
  std::vector<Word> tau(ball->size());
  std::vector<Point> values(ball->size());
  for (std::size_t i = 0; i < ball->size(); ++i) {
    const std::size_t p = ball->parent(i);
    if (p == Ball::kNoParent) {
      tau[i] = src.identity();
      values[i] = eval_config(f, tau[i]);
      continue;
    }
    const auto letters = ball->rep(i).letters();
    const std::int64_t h = letters.back().value;
    const Element g = letters.size() >= 2
                          ? static_cast<Element>(letters[letters.size() - 2].value)
                          : target_g.identity();
    const Element g_inv = target_g.inv(g);
    const Point x = eval_config(f, src.invert(tau[p]));
    const Element solved = r.backward(g_inv, x);
    if (r.forward(solved, x) != g_inv) {
      throw PreimageMismatch(format_word(dst.invert(ball->rep(i))),
                             "cocycle round trip fails at g=" +
                                 std::to_string(g_inv) +
                                 " x=" + std::to_string(x));
    }
    tau[i] = src.multiply({src.h_letter(dst.h().inv(h)), src.g_letter(solved), tau[p]});
    values[i] = eval_config(f, src.invert(tau[i]));
  }
  return TruncatedConfig(r.to_ptr, f.depth(), std::move(values));
}

}  // namespace

Word beta(const OeContext& ctx, const Word& gamma, const TruncatedConfig& f) {
  return cocycle_word(route(ctx, Side::kFirst, f), gamma, f);
}

Word alpha(const OeContext& ctx, const Word& gamma, const TruncatedConfig& f) {
  return cocycle_word(route(ctx, Side::kSecond, f), gamma, f);
}

Word solve_beta_preimage(const OeContext& ctx, const Word& delta,
                         const TruncatedConfig& f) {
  return solve_preimage(route(ctx, Side::kFirst, f), delta, f);
}

Word solve_alpha_preimage(const OeContext& ctx, const Word& delta,
                          const TruncatedConfig& f) {
  return solve_preimage(route(ctx, Side::kSecond, f), delta, f);
}

Word b_map(const OeContext& ctx, const Word& gamma, const TruncatedConfig& f) {
  const Route r = route(ctx, Side::kFirst, f);
  return r.to.gamma().invert(cocycle_word(r, r.from.gamma().invert(gamma), f));
}

Word a_map(const OeContext& ctx, const Word& gamma, const TruncatedConfig& f) {
  const Route r = route(ctx, Side::kSecond, f);
  return r.to.gamma().invert(cocycle_word(r, r.from.gamma().invert(gamma), f));
}

TruncatedConfig omega_map(const OeContext& ctx, const TruncatedConfig& f) {
  return transport(route(ctx, Side::kFirst, f), f);
}

TruncatedConfig theta_map(const OeContext& ctx, const TruncatedConfig& f) {
  return transport(route(ctx, Side::kSecond, f), f);
}

}  // namespace coindoe
