#include "coindoe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "coindoe/errors.hpp"
#include "coindoe/random.hpp"

namespace coindoe {

void Check::record(bool ok, const std::function<Json()>& make_witness) {
  ++count;
  if (ok) return;
  if (failures++ == 0) witness = make_witness();
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed(); });
}

Json VerificationReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["status"] = passed() ? "pass" : "fail";
  out["instance"] = instance;
  Json list = Json::array();
  for (const Check& c : checks) {
    Json item;
    item["claim"] = c.claim;
    item["anchor"] = c.anchor;
    item["status"] = c.passed() ? "pass" : "fail";
    item["count"] = c.count;
    item["failures"] = c.failures;
    if (!c.passed()) item["witness"] = c.witness;
    list.push_back(std::move(item));
  }
  out["checks"] = std::move(list);
  if (!statistics.is_null()) out["statistics"] = statistics;
  return out;
}

double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("distributions differ in support size");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return sum / 2.0;
}

namespace {

// Runs one instance of a check, turning library errors (a truncation or a
// failed preimage) into a recorded failure carrying the error text.
template <class Fn>
void attempt(Check& check, const Json& where, Fn&& fn) {
  Json detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const Error& e) {
    ok = false;
    detail["error"] = e.what();
  }
  check.record(ok, [&] {
    Json w = where;
    for (auto& [k, v] : detail.items()) w[k] = v;
    return w;
  });
}

Json describe_selection(const ConfigSelection& sel) {
  Json j;
  if (sel.exhaustive) {
    j["mode"] = "exhaustive";
  } else {
    j["mode"] = "sampled";
    j["count"] = sel.count;
    j["seed"] = sel.seed;
  }
  return j;
}

void for_each_selected(
    const SpacePtr& space, int depth, const ConfigSelection& sel,
    const std::function<void(const TruncatedConfig&, const Json&)>& visit) {
  if (sel.exhaustive) {
    for (ConfigEnumerator it(space, depth, sel.budget); !it.done(); it.next()) {
      visit(it.config(), Json{{"config_index", it.index()}});
    }
    return;
  }
  for (std::size_t i = 0; i < sel.count; ++i) {
    const std::uint64_t s = split_seed(sel.seed, i);
    visit(sample_config(space, depth, s),
          Json{{"seed", sel.seed}, {"sample", i}, {"config_seed", s}});
  }
}

Json with(Json base, const char* key, Json value) {
  base[key] = std::move(value);
  return base;
}

std::vector<Word> ball_words(const CoinducedSpace& space, int depth) {
  const FreeProduct& fp = space.gamma();
  const auto ball = space.ball(depth);
  std::vector<Word> words;
  words.reserve(ball->size() * fp.g().order());
  for (const Word& rep : ball->reps()) {
    for (Element g = 0; g < fp.g().order(); ++g) {
      words.push_back(fp.multiply(rep, fp.g_letter(g)));
    }
  }
  return words;
}

Json base_instance(const OeContext& ctx) {
  const CoinducedSpace& s1 = *ctx.space(Side::kFirst);
  const CoinducedSpace& s2 = *ctx.space(Side::kSecond);
  Json j;
  j["G1_order"] = s1.gamma().g().order();
  j["G2_order"] = s2.gamma().g().order();
  j["H"] = s1.gamma().h().describe(ctx.h_cap());
  j["points"] = ctx.pair().space().size();
  return j;
}

Json audit_witness(const std::vector<std::uint32_t>& w) {
  if (w.size() == 2) return Json{{"g", w[0]}, {"x", w[1]}};
  if (w.size() == 3) return Json{{"g1", w[0]}, {"g2", w[1]}, {"x", w[2]}};
  return Json(w);
}

}  // namespace

VerificationReport check_cocycle_suite(const OeContext& ctx) {
  VerificationReport report;
  report.suite = "cocycle";
  report.instance = base_instance(ctx);
  for (const IdentityAudit& audit : audit_cocycle(ctx.pair(), ctx.cocycles())) {
    Check c{audit.claim, audit.formula, audit.checked, audit.violations, nullptr};
    if (audit.violations > 0) c.witness = audit_witness(audit.witness);
    report.checks.push_back(std::move(c));
  }
  return report;
}

VerificationReport check_bijectivity_length(const OeContext& ctx, int depth,
                                            const ConfigSelection& configs) {
  VerificationReport report;
  report.suite = "bijectivity";
  report.instance = base_instance(ctx);
  report.instance["depth"] = depth;
  report.instance["configs"] = describe_selection(configs);

  struct Direction {
    Side from;
    Side to;
    const char* map;
    std::function<Word(const Word&, const TruncatedConfig&)> apply;
  };
  const Direction directions[] = {
      {Side::kFirst, Side::kSecond, "B",
       [&](const Word& w, const TruncatedConfig& f) { return b_map(ctx, w, f); }},
      {Side::kSecond, Side::kFirst, "A",
       [&](const Word& w, const TruncatedConfig& f) { return a_map(ctx, w, f); }},
  };

  for (const Direction& d : directions) {
    const std::string m = d.map;
    Check in_section{m + ".section", m + "_f(σ(C)) ∈ rng σ", 0, 0, nullptr};
    Check length{m + ".length", "length(" + m + "_f(γ)) = length(γ)", 0, 0,
                 nullptr};
    Check injective{m + ".injective", m + "_f is injective on rng σ ∩ L(n)", 0,
                    0, nullptr};
    Check surjective{m + ".surjective", m + "_f maps rng σ ∩ L(n) onto rng σ' ∩ L'(n)",
                     0, 0, nullptr};
    const CoinducedSpace& src = *ctx.space(d.from);
    const CoinducedSpace& dst = *ctx.space(d.to);
    const auto ball = src.ball(depth);
    const auto target = dst.ball(depth);
    for_each_selected(ctx.space(d.from), depth, configs,
                      [&](const TruncatedConfig& f, const Json& where) {
      std::set<std::size_t> hit;
      std::set<Word> distinct;
      std::size_t computed_count = 0;
      bool all_found = true;
      for (std::size_t i = 0; i < ball->size(); ++i) {
        const Json at = with(where, "word", format_word(ball->rep(i)));
        Word image;
        bool computed = false;
        attempt(in_section, at, [&](Json& detail) {
          image = d.apply(ball->rep(i), f);
          computed = true;
          detail["image"] = format_word(image);
          return dst.gamma().is_canonical_rep(image);
        });
        if (!computed) {
          all_found = false;
          continue;
        }
        length.record(dst.gamma().coset_length(image) == ball->length(i), [&] {
          return with(with(at, "image", format_word(image)), "lengths",
                      Json::array({ball->length(i),
                                   dst.gamma().coset_length(image)}));
        });
        ++computed_count;
        distinct.insert(image);
        if (const auto idx = target->find(image)) {
          hit.insert(*idx);
        } else {
          all_found = false;
        }
      }
      injective.record(distinct.size() == computed_count, [&] {
        return with(with(where, "distinct_images", distinct.size()), "images",
                    computed_count);
      });
      surjective.record(all_found && hit.size() == target->size(), [&] {
        return with(with(where, "images_in_target", hit.size()), "target_size",
                    target->size());
      });
    });
    report.checks.push_back(std::move(in_section));
    report.checks.push_back(std::move(length));
    report.checks.push_back(std::move(injective));
    report.checks.push_back(std::move(surjective));
  }
  return report;
}

VerificationReport check_inverse_suite(const OeContext& ctx, int depth,
                                       const ConfigSelection& configs,
                                       const OeMaps& maps) {
  VerificationReport report;
  report.suite = "inverse";
  report.instance = base_instance(ctx);
  report.instance["depth"] = depth;
  report.instance["configs"] = describe_selection(configs);

  const auto omega = [&](const TruncatedConfig& f) {
    return maps.omega ? maps.omega(f) : omega_map(ctx, f);
  };
  const auto theta = [&](const TruncatedConfig& f) {
    return maps.theta ? maps.theta(f) : theta_map(ctx, f);
  };
  const FreeProduct& fp1 = ctx.space(Side::kFirst)->gamma();
  const FreeProduct& fp2 = ctx.space(Side::kSecond)->gamma();
  const std::vector<Word> words1 = ball_words(*ctx.space(Side::kFirst), depth);
  const std::vector<Word> words2 = ball_words(*ctx.space(Side::kSecond), depth);

  Check theta_omega{"ΘΩ=id", "Θ Ω(f) = f", 0, 0, nullptr};
  Check alpha_beta{"α∘β", "α(β(γ,f), Ω f) = γ", 0, 0, nullptr};
  Check omega_eval{"Ω.evaluation", "Ω f(γ) = f(α(γ⁻¹, Ω f)⁻¹)", 0, 0, nullptr};
  for_each_selected(ctx.space(Side::kFirst), depth, configs,
                    [&](const TruncatedConfig& f, const Json& where) {
    std::optional<TruncatedConfig> image;
    attempt(theta_omega, where, [&](Json&) {
      image = omega(f);
      return theta(*image) == f;
    });
    if (!image) {
      alpha_beta.record(false, [&] {
        return with(where, "error", "Ω f could not be computed");
      });
      omega_eval.record(false, [&] {
        return with(where, "error", "Ω f could not be computed");
      });
      return;
    }
    const TruncatedConfig& g = *image;
    for (const Word& w : words1) {
      for (const Word& gamma : {w, fp1.invert(w)}) {
        attempt(alpha_beta, with(where, "word", format_word(gamma)),
                [&](Json& detail) {
          const Word back = alpha(ctx, beta(ctx, gamma, f), g);
          detail["result"] = format_word(back);
          return back == gamma;
        });
      }
    }
    for (const Word& w : words2) {
      attempt(omega_eval, with(where, "word", format_word(w)), [&](Json& detail) {
        const Word pre = fp1.invert(alpha(ctx, fp2.invert(w), g));
        const Point lhs = eval_config(g, w);
        const Point rhs = eval_config(f, pre);
        detail["values"] = Json::array({lhs, rhs});
        return lhs == rhs;
      });
    }
  });

  Check omega_theta{"ΩΘ=id", "Ω Θ(f) = f", 0, 0, nullptr};
  Check beta_alpha{"β∘α", "β(α(γ,f), Θ f) = γ", 0, 0, nullptr};
  for_each_selected(ctx.space(Side::kSecond), depth, configs,
                    [&](const TruncatedConfig& f, const Json& where) {
    std::optional<TruncatedConfig> image;
    attempt(omega_theta, where, [&](Json&) {
      image = theta(f);
      return omega(*image) == f;
    });
    if (!image) {
      beta_alpha.record(false, [&] {
        return with(where, "error", "Θ f could not be computed");
      });
      return;
    }
    for (const Word& w : words2) {
      for (const Word& gamma : {w, fp2.invert(w)}) {
        attempt(beta_alpha, with(where, "word", format_word(gamma)),
                [&](Json& detail) {
          const Word back = beta(ctx, alpha(ctx, gamma, f), *image);
          detail["result"] = format_word(back);
          return back == gamma;
        });
      }
    }
  });

  report.checks.push_back(std::move(theta_omega));
  report.checks.push_back(std::move(omega_theta));
  report.checks.push_back(std::move(alpha_beta));
  report.checks.push_back(std::move(beta_alpha));
  report.checks.push_back(std::move(omega_eval));
  return report;
}

namespace {

std::vector<Word> default_generators(const FreeProduct& fp) {
  std::vector<Word> gens;
  for (Element g = 0; g < fp.g().order(); ++g) gens.push_back(fp.g_letter(g));
  for (std::int64_t h : fp.h().generators()) gens.push_back(fp.h_letter(h));
  return gens;
}

bool agree_on_common_ball(const TruncatedConfig& a, const TruncatedConfig& b,
                          Json& detail) {
  const int m = std::min(a.depth(), b.depth());
  detail["compared_depth"] = m;
  return restrict_config(a, m) == restrict_config(b, m);
}

}  // namespace

VerificationReport check_orbit_mapping(
    const OeContext& ctx, int depth, const ConfigSelection& configs,
    const std::optional<std::vector<Word>>& generators) {
  VerificationReport report;
  report.suite = "orbit";
  report.instance = base_instance(ctx);
  report.instance["depth"] = depth;
  report.instance["configs"] = describe_selection(configs);

  const FreeProduct& fp1 = ctx.space(Side::kFirst)->gamma();
  const FreeProduct& fp2 = ctx.space(Side::kSecond)->gamma();
  const std::vector<Word> gens1 =
      generators ? *generators : default_generators(fp1);
  const std::vector<Word> gens2 = default_generators(fp2);
  Json listed = Json::array();
  for (const Word& w : gens1) listed.push_back(format_word(w));
  report.instance["generators"] = listed;

  Check equivariance{"β.equivariance", "β(γ,f)(Ω f) = Ω(γ f)", 0, 0, nullptr};
  Check beta_cocycle{"β.cocycle", "β(γ₁γ₂,f) = β(γ₁,γ₂ f) β(γ₂,f)", 0, 0,
                     nullptr};
  for_each_selected(ctx.space(Side::kFirst), depth, configs,
                    [&](const TruncatedConfig& f, const Json& where) {
    std::optional<TruncatedConfig> image;
    try {
      image = omega_map(ctx, f);
    } catch (const Error& e) {
      equivariance.record(false, [&] { return with(where, "error", e.what()); });
      return;
    }
    for (const Word& gamma : gens1) {
      attempt(equivariance, with(where, "generator", format_word(gamma)),
              [&](Json& detail) {
        const Word b = beta(ctx, gamma, f);
        detail["beta"] = format_word(b);
        const TruncatedConfig lhs = shift_config(b, *image);
        const TruncatedConfig rhs = omega_map(ctx, shift_config(gamma, f));
        return agree_on_common_ball(lhs, rhs, detail);
      });
      for (const Word& gamma2 : gens1) {
        attempt(beta_cocycle,
                with(with(where, "gamma1", format_word(gamma)), "gamma2",
                     format_word(gamma2)),
                [&](Json& detail) {
          const Word lhs = beta(ctx, fp1.multiply(gamma, gamma2), f);
          const Word rhs = fp2.multiply(
              beta(ctx, gamma, shift_config(gamma2, f)), beta(ctx, gamma2, f));
          detail["values"] = Json::array({format_word(lhs), format_word(rhs)});
          return lhs == rhs;
        });
      }
    }
  });

  Check mirror{"α.equivariance", "α(γ,f)(Θ f) = Θ(γ f)", 0, 0, nullptr};
  Check alpha_cocycle{"α.cocycle", "α(γ₁γ₂,f) = α(γ₁,γ₂ f) α(γ₂,f)", 0, 0,
                      nullptr};
  for_each_selected(ctx.space(Side::kSecond), depth, configs,
                    [&](const TruncatedConfig& f, const Json& where) {
    std::optional<TruncatedConfig> image;
    try {
      image = theta_map(ctx, f);
    } catch (const Error& e) {
      mirror.record(false, [&] { return with(where, "error", e.what()); });
      return;
    }
    for (const Word& gamma : gens2) {
      attempt(mirror, with(where, "generator", format_word(gamma)),
              [&](Json& detail) {
        const Word a = alpha(ctx, gamma, f);
        detail["alpha"] = format_word(a);
        const TruncatedConfig lhs = shift_config(a, *image);
        const TruncatedConfig rhs = theta_map(ctx, shift_config(gamma, f));
        return agree_on_common_ball(lhs, rhs, detail);
      });
      for (const Word& gamma2 : gens2) {
        attempt(alpha_cocycle,
                with(with(where, "gamma1", format_word(gamma)), "gamma2",
                     format_word(gamma2)),
                [&](Json& detail) {
          const Word lhs = alpha(ctx, fp2.multiply(gamma, gamma2), f);
          const Word rhs = fp1.multiply(
              alpha(ctx, gamma, shift_config(gamma2, f)), alpha(ctx, gamma2, f));
          detail["values"] = Json::array({format_word(lhs), format_word(rhs)});
          return lhs == rhs;
        });
      }
    }
  });

  report.checks.push_back(std::move(equivariance));
  report.checks.push_back(std::move(beta_cocycle));
  report.checks.push_back(std::move(mirror));
  report.checks.push_back(std::move(alpha_cocycle));
  return report;
}

VerificationReport check_locality(const OeContext& ctx, int n,
                                  std::size_t pairs, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "locality";
  report.instance = base_instance(ctx);
  report.instance["n"] = n;
  report.instance["pairs"] = pairs;
  report.instance["seed"] = seed;

  const SpacePtr& s1 = ctx.space(Side::kFirst);
  const FreeProduct& fp2 = ctx.space(Side::kSecond)->gamma();
  const auto ball1 = s1->ball(n + 1);
  const auto ball2 = ctx.space(Side::kSecond)->ball(n + 1);
  const std::size_t inner = ball1->prefix_size(n);
  const std::size_t points = s1->space().size();

  Check omega_agree{"Ω.locality", "f₁ = f₂ on L₁(n) ⇒ Ω f₁ = Ω f₂ on L₂(n)", 0,
                    0, nullptr};
  Check alpha_agree{"α.locality",
                    "f₁ = f₂ on L₁(n) ⇒ α(γ⁻¹,Ω f₁) = α(γ⁻¹,Ω f₂), γ ∈ L₂(n+1)",
                    0, 0, nullptr};
  std::size_t differing = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::uint64_t s_first = split_seed(seed, 2 * i);
    const std::uint64_t s_second = split_seed(seed, 2 * i + 1);
    const TruncatedConfig f1 = sample_config(s1, n + 1, s_first);
    std::vector<Point> values = f1.values();
    const TruncatedConfig other = sample_config(s1, n + 1, s_second);
    std::copy(other.values().begin() + static_cast<std::ptrdiff_t>(inner),
              other.values().end(),
              values.begin() + static_cast<std::ptrdiff_t>(inner));
    if (values == f1.values() && inner < values.size() && points > 1) {
      values[inner] = static_cast<Point>((values[inner] + 1) % points);
    }
    if (values != f1.values()) ++differing;
    const TruncatedConfig f2(s1, n + 1, std::move(values));
    const Json where{{"seed", seed}, {"pair", i}, {"config_seeds", {s_first, s_second}}};

    std::optional<TruncatedConfig> g1, g2;
    attempt(omega_agree, where, [&](Json&) {
      g1 = omega_map(ctx, f1);
      g2 = omega_map(ctx, f2);
      return restrict_config(*g1, n) == restrict_config(*g2, n);
    });
    if (!g1 || !g2) continue;
    for (const Word& gamma : ball2->reps()) {
      attempt(alpha_agree, with(where, "word", format_word(gamma)),
              [&](Json& detail) {
        const Word inv = fp2.invert(gamma);
        const Word a1 = alpha(ctx, inv, *g1);
        const Word a2 = alpha(ctx, inv, *g2);
        detail["values"] = Json::array({format_word(a1), format_word(a2)});
        return a1 == a2;
      });
    }
  }
  report.checks.push_back(std::move(omega_agree));
  report.checks.push_back(std::move(alpha_agree));
  report.statistics = Json{{"pairs", pairs}, {"pairs_differing_beyond_n", differing}};
  return report;
}

namespace {

VerificationReport pushforward_exact(const OeContext& ctx, int depth,
                                     const PushforwardParams& params) {
  VerificationReport report;
  report.suite = "pushforward";
  report.instance = base_instance(ctx);
  report.instance["depth"] = depth;
  report.instance["mode"] = "exact";

  const SpacePtr& s1 = ctx.space(Side::kFirst);
  const SpacePtr& s2 = ctx.space(Side::kSecond);
  if (!within_budget(*s2, depth, params.budget)) {
    throw BudgetExceeded(config_count(*s2, depth), params.budget);
  }
  const ProbSpace& mu = ctx.pair().space();
  const std::uint64_t points = mu.size();

  Check defined{"Ω.defined", "Ω f is computable on L₂(n)", 0, 0, nullptr};
  std::unordered_map<std::uint64_t, Rational> cells;
  Rational total = 0;
  for (ConfigEnumerator it(s1, depth, params.budget); !it.done(); it.next()) {
    attempt(defined, Json{{"config_index", it.index()}}, [&](Json&) {
      const TruncatedConfig g = omega_map(ctx, it.config());
      std::uint64_t key = 0;
      for (Point x : g.values()) key = key * points + x;
      cells[key] += it.mass();
      total += it.mass();
      return true;
    });
  }

  const std::size_t coords = s2->ball(depth)->size();
  std::uint64_t expected_cells = 1;
  for (std::size_t i = 0; i < coords; ++i) expected_cells *= points;

  Check conservation{"mass.conservation", "Σ Ω∗ν₁ = 1", 0, 0, nullptr};
  conservation.record(total == 1, [&] {
    return Json{{"total", format_rational(total)}};
  });
  Check support{"support.full", "every cell of X^{L₂(n)} has positive mass", 0,
                0, nullptr};
  support.record(cells.size() == expected_cells, [&] {
    return Json{{"cells_hit", cells.size()}, {"cells", expected_cells}};
  });
  Check product{"Ω∗ν₁=ν₂", "Ω∗ν₁ = ν₂", 0, 0, nullptr};
  std::vector<std::uint64_t> keys;
  keys.reserve(cells.size());
  for (const auto& [k, m] : cells) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (std::uint64_t key : keys) {
    std::vector<Point> values(coords);
    std::uint64_t rest = key;
    for (std::size_t i = coords; i-- > 0;) {
      values[i] = static_cast<Point>(rest % points);
      rest /= points;
    }
    Rational expected = 1;
    for (Point x : values) expected *= mu.mass(x);
    const Rational& got = cells[key];
    product.record(got == expected, [&] {
      return Json{{"cell", values},
                  {"mass", format_rational(got)},
                  {"expected", format_rational(expected)}};
    });
  }
  report.checks.push_back(std::move(defined));
  report.checks.push_back(std::move(conservation));
  report.checks.push_back(std::move(support));
  report.checks.push_back(std::move(product));
  report.statistics = Json{{"configs", config_count(*s1, depth)},
                           {"cells", std::to_string(expected_cells)},
                           {"cells_hit", cells.size()},
                           {"total_mass", format_rational(total)}};
  return report;
}

VerificationReport pushforward_sampled(const OeContext& ctx, int depth,
                                       const PushforwardParams& params) {
  VerificationReport report;
  report.suite = "pushforward";
  report.instance = base_instance(ctx);
  report.instance["depth"] = depth;
  report.instance["mode"] = "sampled";
  report.instance["samples"] = params.samples;
  report.instance["seed"] = params.seed;

  const SpacePtr& s1 = ctx.space(Side::kFirst);
  const ProbSpace& mu = ctx.pair().space();
  const std::size_t points = mu.size();
  const std::size_t coords = ctx.space(Side::kSecond)->ball(depth)->size();
  const std::size_t n_pairs = coords * (coords - 1) / 2;

  std::vector<std::uint64_t> marginal(coords * points, 0);
  std::vector<std::uint64_t> joint(n_pairs * points * points, 0);
  std::uint64_t accepted = 0;
  Check defined{"Ω.defined", "Ω f is computable on L₂(n)", 0, 0, nullptr};
  for (std::size_t i = 0; i < params.samples; ++i) {
    const std::uint64_t s = split_seed(params.seed, i);
    attempt(defined, Json{{"seed", params.seed}, {"sample", i}, {"config_seed", s}},
            [&](Json&) {
      const TruncatedConfig g = omega_map(ctx, sample_config(s1, depth, s));
      const auto& v = g.values();
      std::size_t pair = 0;
      for (std::size_t a = 0; a < coords; ++a) {
        ++marginal[a * points + v[a]];
        for (std::size_t b = a + 1; b < coords; ++b, ++pair) {
          ++joint[(pair * points + v[a]) * points + v[b]];
        }
      }
      ++accepted;
      return true;
    });
  }

  std::vector<double> mu_d(points);
  for (std::size_t x = 0; x < points; ++x) mu_d[x] = mu.mass(static_cast<Point>(x)).convert_to<double>();
  std::vector<double> mu2(points * points);
  for (std::size_t x = 0; x < points; ++x) {
    for (std::size_t y = 0; y < points; ++y) mu2[x * points + y] = mu_d[x] * mu_d[y];
  }

  const double n = accepted > 0 ? static_cast<double>(accepted) : 1.0;
  Check marg{"marginal.tv", "TV(law of Ω f(δ), μ) ≤ tv_marginal", 0, 0, nullptr};
  double max_marginal = 0.0;
  for (std::size_t a = 0; a < coords; ++a) {
    std::vector<double> emp(points);
    for (std::size_t x = 0; x < points; ++x) emp[x] = marginal[a * points + x] / n;
    const double tv = total_variation(emp, mu_d);
    max_marginal = std::max(max_marginal, tv);
    marg.record(tv <= params.tv_marginal, [&] {
      return Json{{"coordinate", format_word(ctx.space(Side::kSecond)->ball(depth)->rep(a))},
                  {"tv", tv}};
    });
  }
  Check pairs{"pair.tv", "TV(law of (Ω f(δ), Ω f(δ')), μ×μ) ≤ tv_pair", 0, 0,
              nullptr};
  double max_pair = 0.0;
  std::size_t pair = 0;
  const auto ball2 = ctx.space(Side::kSecond)->ball(depth);
  for (std::size_t a = 0; a < coords; ++a) {
    for (std::size_t b = a + 1; b < coords; ++b, ++pair) {
      std::vector<double> emp(points * points);
      for (std::size_t c = 0; c < points * points; ++c) {
        emp[c] = joint[pair * points * points + c] / n;
      }
      const double tv = total_variation(emp, mu2);
      max_pair = std::max(max_pair, tv);
      pairs.record(tv <= params.tv_pair, [&] {
        return Json{{"coordinates",
                     {format_word(ball2->rep(a)), format_word(ball2->rep(b))}},
                    {"tv", tv}};
      });
    }
  }
  report.checks.push_back(std::move(defined));
  report.checks.push_back(std::move(marg));
  report.checks.push_back(std::move(pairs));
  report.statistics = Json{{"samples", params.samples},
                           {"coordinates", coords},
                           {"tv_marginal_threshold", params.tv_marginal},
                           {"tv_pair_threshold", params.tv_pair},
                           {"max_tv_marginal", max_marginal},
                           {"max_tv_pair", max_pair}};
  return report;
}

}  // namespace

VerificationReport check_pushforward(const OeContext& ctx, int depth,
                                     const PushforwardParams& params) {
  return params.mode == PushforwardMode::kExact
             ? pushforward_exact(ctx, depth, params)
             : pushforward_sampled(ctx, depth, params);
}

}  // namespace coindoe
