#include "coindoe/coinduction.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "coindoe/errors.hpp"
#include "coindoe/random.hpp"

namespace coindoe {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// PointSampler

PointSampler::PointSampler(const ProbSpace& space) {
  mp::cpp_int lcm = 1;
  for (const Rational& m : space.masses()) {
    const mp::cpp_int d = mp::denominator(m);
    lcm = lcm / mp::gcd(lcm, d) * d;
  }
  if (lcm > mp::cpp_int(std::numeric_limits<std::uint64_t>::max() >> 1)) {
    throw InvalidSpace("mass denominators are too large for exact sampling");
  }
  denominator_ = lcm.convert_to<std::uint64_t>();
  std::uint64_t running = 0;
  for (const Rational& m : space.masses()) {
    running += (m * lcm).convert_to<std::uint64_t>();
    cumulative_.push_back(running);
  }
  // Raw draws below this threshold are rejected so r % denominator_ is exact.
  limit_ = (0 - denominator_) % denominator_;
}

Point PointSampler::draw(std::uint64_t key) const {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t r = mix64(split_seed(key, attempt));
    if (r < limit_) continue;
    const std::uint64_t u = r % denominator_;
    std::size_t lo = 0, hi = cumulative_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (u < cumulative_[mid]) hi = mid; else lo = mid + 1;
    }
    return static_cast<Point>(lo);
  }
}

// ---------------------------------------------------------------------------
// CoinducedSpace

CoinducedSpace::CoinducedSpace(PmpAction action, FreeFactor h,
                               std::optional<std::int64_t> h_cap)
    : action_(std::move(action)),
      gamma_(action_.group(), std::move(h)),
      h_cap_(h_cap),
      sampler_(action_.space()) {
  if (gamma_.h().is_integers() && !h_cap_) {
    throw std::invalid_argument(
        "a coinduced space over the integers needs an h_cap");
  }
}

SpacePtr CoinducedSpace::create(PmpAction action, FreeFactor h,
                                std::optional<std::int64_t> h_cap) {
  return std::make_shared<const CoinducedSpace>(std::move(action), std::move(h),
                                                h_cap);
}

std::shared_ptr<const Ball> CoinducedSpace::ball(int depth) const {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  std::lock_guard lock(mutex_);
  if (balls_.size() <= static_cast<std::size_t>(depth)) balls_.resize(depth + 1);
  auto& slot = balls_[depth];
  if (!slot) {
    slot = std::make_shared<const Ball>(gamma_.enumerate_reps(depth, h_cap_));
  }
  return slot;
}

// ---------------------------------------------------------------------------
// TruncatedConfig

TruncatedConfig::TruncatedConfig(SpacePtr space, int depth,
                                 std::vector<Point> values)
    : space_(std::move(space)),
      ball_(space_->ball(depth)),
      values_(std::move(values)) {
  if (values_.size() != ball_->size()) {
    throw std::invalid_argument("configuration of depth " +
                                std::to_string(depth) + " needs " +
                                std::to_string(ball_->size()) + " values, got " +
                                std::to_string(values_.size()));
  }
  for (Point x : values_) {
    if (x >= space_->space().size()) {
      throw std::invalid_argument("configuration value " + std::to_string(x) +
                                  " is not a point of the space");
    }
  }
}

Point eval_config(const TruncatedConfig& f, const Word& w) {
  const FreeProduct& gamma = f.space()->gamma();
  const CosetSection section = gamma.coset_section(w);
  const auto idx = f.ball().find(section.rep);
  if (!idx) {
    throw TruncationExceeded(format_word(w), gamma.coset_length(w), f.depth());
  }
  return f.space()->action().act(gamma.g().inv(section.g), f.value_at(*idx));
}

bool is_evaluable(const TruncatedConfig& f, const Word& w) {
  return f.ball().find(f.space()->gamma().coset_section(w).rep).has_value();
}

TruncatedConfig shift_config(const Word& gamma, const TruncatedConfig& f,
                             int depth) {
  const FreeProduct& fp = f.space()->gamma();
  const Word inv = fp.invert(gamma);
  const auto ball = f.space()->ball(depth);
  std::vector<Point> values(ball->size());
  for (std::size_t i = 0; i < ball->size(); ++i) {
    values[i] = eval_config(f, fp.multiply(inv, ball->rep(i)));
  }
  return TruncatedConfig(f.space(), depth, std::move(values));
}

TruncatedConfig shift_config(const Word& gamma, const TruncatedConfig& f) {
  const FreeProduct& fp = f.space()->gamma();
  const Word inv = fp.invert(gamma);
  int depth = f.depth();
  // Reps are sorted by length, so the first failure fixes the depth.
  for (std::size_t i = 0; i < f.ball().size(); ++i) {
    if (!is_evaluable(f, fp.multiply(inv, f.ball().rep(i)))) {
      depth = f.ball().length(i) - 1;
      break;
    }
  }
  if (depth < 0) {
    throw TruncationExceeded(format_word(inv), fp.coset_length(inv), f.depth());
  }
  return shift_config(gamma, f, depth);
}

TruncatedConfig restrict_config(const TruncatedConfig& f, int depth) {
  if (depth > f.depth()) {
    throw TruncationExceeded("e", depth, f.depth());
  }
  const std::size_t n = f.ball().prefix_size(depth);
  return TruncatedConfig(
      f.space(), depth,
      std::vector<Point>(f.values().begin(), f.values().begin() + n));
}

Rational config_mass(const TruncatedConfig& f) {
  Rational m = 1;
  for (Point x : f.values()) m *= f.space()->space().mass(x);
  return m;
}

std::string config_count(const CoinducedSpace& space, int depth) {
  mp::cpp_int count = 1;
  const auto reps = space.ball(depth)->size();
  for (std::size_t i = 0; i < reps; ++i) count *= space.space().size();
  return count.str();
}

bool within_budget(const CoinducedSpace& space, int depth,
                   std::uint64_t budget) {
  mp::cpp_int count = 1;
  const auto reps = space.ball(depth)->size();
  for (std::size_t i = 0; i < reps && count <= budget; ++i) {
    count *= space.space().size();
  }
  return count <= budget;
}

// ---------------------------------------------------------------------------
// Enumeration

ConfigEnumerator::ConfigEnumerator(SpacePtr space, int depth,
                                   std::uint64_t budget)
    : config_(space, depth,
              std::vector<Point>(space->ball(depth)->size(), 0)) {
  if (!within_budget(*space, depth, budget)) {
    throw BudgetExceeded(config_count(*space, depth), budget);
  }
  const ProbSpace& mu = space->space();
  prefix_.assign(config_.values_.size() + 1, Rational(1));
  for (std::size_t i = 0; i < config_.values_.size(); ++i) {
    prefix_[i + 1] = prefix_[i] * mu.mass(config_.values_[i]);
  }
}

void ConfigEnumerator::next() {
  if (done_) return;
  auto& v = config_.values_;
  const std::size_t n_points = config_.space_->space().size();
  // Last coordinate varies fastest, so consecutive index ranges share the
  // leading coordinates.
  std::size_t j = v.size();
  while (j > 0 && v[j - 1] + 1 == n_points) --j;
  if (j == 0) {
    done_ = true;
    return;
  }
  ++v[j - 1];
  for (std::size_t k = j; k < v.size(); ++k) v[k] = 0;
  const ProbSpace& mu = config_.space_->space();
  for (std::size_t k = j - 1; k < v.size(); ++k) {
    prefix_[k + 1] = prefix_[k] * mu.mass(v[k]);
  }
  ++index_;
}

void for_each_config(
    const SpacePtr& space, int depth, std::uint64_t budget,
    const std::function<void(const TruncatedConfig&, const Rational&)>& visit) {
  for (ConfigEnumerator it(space, depth, budget); !it.done(); it.next()) {
    visit(it.config(), it.mass());
  }
}

TruncatedConfig sample_config(const SpacePtr& space, int depth,
                              std::uint64_t seed) {
  const auto ball = space->ball(depth);
  std::vector<Point> values(ball->size());
  for (std::size_t i = 0; i < ball->size(); ++i) {
    values[i] = space->sampler().draw(split_seed(seed, WordHash{}(ball->rep(i))));
  }
  return TruncatedConfig(space, depth, std::move(values));
}

Rational CoinducedMeasure::mass(const TruncatedConfig& f) const {
  if (f.space() != space_ || f.depth() != depth_) {
    throw std::invalid_argument("configuration does not belong to this measure");
  }
  return config_mass(f);
}

Rational CoinducedMeasure::cylinder(const std::vector<Point>& values) const {
  if (values.size() > space_->ball(depth_)->size()) {
    throw std::invalid_argument("cylinder fixes more coordinates than exist");
  }
  Rational m = 1;
  for (Point x : values) m *= space_->space().mass(x);
  return m;
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize_config(const TruncatedConfig& f) {
  std::string out;
  for (std::size_t i = 0; i < f.ball().size(); ++i) {
    out += format_word(f.ball().rep(i));
    out += ' ';
    out += std::to_string(f.value_at(i));
    out += '\n';
  }
  return out;
}

TruncatedConfig parse_config(const SpacePtr& space, std::string_view text) {
  const FreeProduct& fp = space->gamma();
  std::vector<std::pair<Word, Point>> entries;
  int depth = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const auto split = line.find_last_of(" \t", last);
    if (split == std::string::npos || split < first) {
      throw ParseError("expected '<rep-word> <point>'", line_no);
    }
    const Word rep = fp.parse_word(line.substr(first, split - first));
    if (!fp.is_canonical_rep(rep)) {
      throw ParseError("'" + format_word(rep) + "' is not a coset representative",
                       line_no);
    }
    long long point = -1;
    try {
      point = std::stoll(line.substr(split + 1, last - split));
    } catch (const std::exception&) {
      throw ParseError("malformed point id", line_no);
    }
    if (point < 0 || static_cast<std::size_t>(point) >= space->space().size()) {
      throw ParseError("point id out of range", line_no);
    }
    depth = std::max(depth, fp.coset_length(rep));
    entries.emplace_back(rep, static_cast<Point>(point));
  }
  if (entries.empty()) throw ParseError("empty configuration");
  const auto ball = space->ball(depth);
  std::vector<Point> values(ball->size());
  std::vector<bool> seen(ball->size(), false);
  for (const auto& [rep, x] : entries) {
    const auto idx = ball->find(rep);
    if (!idx) {
      throw ParseError("'" + format_word(rep) + "' lies outside the ball");
    }
    if (seen[*idx]) throw ParseError("duplicate rep '" + format_word(rep) + "'");
    seen[*idx] = true;
    values[*idx] = x;
  }
  for (std::size_t i = 0; i < ball->size(); ++i) {
    if (!seen[i]) {
      throw ParseError("missing value for rep '" + format_word(ball->rep(i)) +
                       "'");
    }
  }
  return TruncatedConfig(space, depth, std::move(values));
}

// ---------------------------------------------------------------------------
// Bernoulli specialization

BernoulliImage::BernoulliImage(SpacePtr space, std::shared_ptr<const Ball> ball,
                               std::vector<std::uint32_t> symbols)
    : space_(std::move(space)), ball_(std::move(ball)), symbols_(std::move(symbols)) {}

std::optional<std::uint32_t> BernoulliImage::find(const Word& w) const {
  const CosetSection s = space_->gamma().coset_section(w);
  const auto idx = ball_->find(s.rep);
  if (!idx) return std::nullopt;
  return symbols_[*idx * space_->gamma().g().order() + s.g];
}

std::uint32_t BernoulliImage::at(const Word& w) const {
  const auto v = find(w);
  if (!v) {
    throw TruncationExceeded(format_word(w), space_->gamma().coset_length(w),
                             ball_->depth());
  }
  return *v;
}

BernoulliImage bernoulli_conjugacy(const TruncatedConfig& f) {
  const CoinducedSpace& space = *f.space();
  const FiniteGroup& g = space.gamma().g();
  const auto& layout = space.space().layout();
  if (!layout || layout->group_order != g.order()) {
    throw NotAProductSpace("base space is not presented as K^G");
  }
  const PmpAction shift =
      PmpAction::bernoulli_shift(g, ProbSpace(layout->base_masses));
  if (shift.tables() != space.action().tables()) {
    throw NotAProductSpace("base action is not the shift on K^G");
  }
  const FreeProduct& fp = space.gamma();
  std::vector<std::uint32_t> symbols;
  symbols.reserve(f.ball().size() * g.order());
  for (std::size_t i = 0; i < f.ball().size(); ++i) {
    for (Element h = 0; h < g.order(); ++h) {
      const Point x = eval_config(f, fp.multiply(f.ball().rep(i), fp.g_letter(h)));
      symbols.push_back(layout->coordinate(x, g.identity()));
    }
  }
  return BernoulliImage(f.space(), space.ball(f.depth()), std::move(symbols));
}

double entropy(const ProbSpace& space) {
  double h = 0.0;
  for (const Rational& m : space.masses()) {
    const double p = m.convert_to<double>();
    if (p > 0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace coindoe
