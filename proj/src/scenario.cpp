#include "coindoe/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "coindoe/errors.hpp"

namespace coindoe {

namespace {

struct Line {
  int number;
  std::string text;
};

using Sections = std::map<std::string, std::vector<Line>>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Sections split_sections(std::string_view text) {
  Sections sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::string current;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", number);
      current = trim(line.substr(1, line.size() - 2));
      if (sections.count(current)) {
        throw ParseError("duplicate section [" + current + "]", number);
      }
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError("content before the first section", number);
    sections[current].push_back({number, line});
  }
  return sections;
}

const std::vector<Line>& require(const Sections& s, const std::string& name) {
  auto it = s.find(name);
  if (it == s.end()) throw ParseError("missing section [" + name + "]");
  if (it->second.empty()) throw ParseError("empty section [" + name + "]");
  return it->second;
}

long long parse_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
}

double parse_double(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + token + "'", line);
  }
}

Rational parse_mass(const std::string& token, int line) {
  try {
    return parse_rational(token);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

// A named group form, or std::nullopt when the lines hold a raw table.
std::optional<FiniteGroup> named_group(const std::vector<Line>& lines) {
  const auto t = tokens(lines.front().text);
  const int ln = lines.front().number;
  if (t[0] == "cyclic") {
    if (t.size() != 2) throw ParseError("usage: cyclic <n>", ln);
    const long long n = parse_int(t[1], ln);
    if (n <= 0) throw ParseError("cyclic group order must be positive", ln);
    return FiniteGroup::cyclic(static_cast<std::size_t>(n));
  }
  if (t[0] == "elementary_abelian2") {
    if (t.size() != 2) throw ParseError("usage: elementary_abelian2 <k>", ln);
    const long long k = parse_int(t[1], ln);
    if (k < 0 || k > 16) throw ParseError("rank must be in 0..16", ln);
    return FiniteGroup::elementary_abelian2(static_cast<unsigned>(k));
  }
  return std::nullopt;
}

FiniteGroup parse_group_section(const std::vector<Line>& lines,
                                const std::string& name) {
  if (auto g = named_group(lines)) {
    if (lines.size() > 1) {
      throw ParseError("unexpected content in [" + name + "]", lines[1].number);
    }
    return *g;
  }
  std::string table;
  for (const Line& l : lines) table += l.text + "\n";
  try {
    return parse_group_table(table);
  } catch (const ParseError& e) {
    throw ParseError("[" + name + "]: " + e.what(), lines.front().number);
  }
}

ProbSpace parse_space(const std::vector<Line>& lines, const FiniteGroup& g1) {
  std::optional<long long> points;
  std::optional<std::vector<Rational>> masses;
  bool uniform = false;
  std::optional<ProbSpace> product;
  for (const Line& l : lines) {
    const auto t = tokens(l.text);
    if (t[0] == "points") {
      if (t.size() != 2) throw ParseError("usage: points <n>", l.number);
      points = parse_int(t[1], l.number);
      if (*points <= 0) throw ParseError("points must be positive", l.number);
    } else if (t[0] == "masses") {
      std::vector<Rational> m;
      for (std::size_t i = 1; i < t.size(); ++i) m.push_back(parse_mass(t[i], l.number));
      masses = std::move(m);
    } else if (t[0] == "uniform") {
      uniform = true;
    } else if (t[0] == "product") {
      std::vector<Rational> m;
      for (std::size_t i = 1; i < t.size(); ++i) m.push_back(parse_mass(t[i], l.number));
      product = ProbSpace::product(ProbSpace(std::move(m)), g1.order());
    } else {
      throw ParseError("unknown [space] key '" + t[0] + "'", l.number);
    }
  }
  if (product) {
    if (points || masses || uniform) {
      throw ParseError("[space]: 'product' excludes points/masses/uniform");
    }
    return *product;
  }
  if (!points) throw ParseError("[space]: missing 'points'");
  if (uniform == masses.has_value()) {
    throw ParseError("[space]: give exactly one of 'masses' or 'uniform'");
  }
  if (uniform) return ProbSpace::uniform(static_cast<std::size_t>(*points));
  if (masses->size() != static_cast<std::size_t>(*points)) {
    throw ParseError("[space]: " + std::to_string(masses->size()) +
                     " masses for " + std::to_string(*points) + " points");
  }
  return ProbSpace(std::move(*masses));
}

PmpAction parse_action(const std::vector<Line>& lines, const FiniteGroup& group,
                       const ProbSpace& space, const std::string& name) {
  if (lines.size() == 1 && trim(lines.front().text) == "shift") {
    const auto& layout = space.layout();
    if (!layout || layout->group_order != group.order()) {
      throw ParseError("[" + name + "]: 'shift' needs a product space over this group",
                       lines.front().number);
    }
    const PmpAction shift =
        PmpAction::bernoulli_shift(group, ProbSpace(layout->base_masses));
    return PmpAction::from_tables(group, space, shift.tables());
  }
  std::vector<std::pair<Element, std::vector<Point>>> gens;
  for (const Line& l : lines) {
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected '<element>: <images...>'", l.number);
    }
    const long long g = parse_int(trim(l.text.substr(0, colon)), l.number);
    if (!group.contains(g)) {
      throw ParseError("element " + std::to_string(g) + " is not in the group", l.number);
    }
    std::vector<Point> images;
    for (const auto& t : tokens(l.text.substr(colon + 1))) {
      const long long x = parse_int(t, l.number);
      if (x < 0) throw ParseError("negative point id", l.number);
      images.push_back(static_cast<Point>(x));
    }
    gens.emplace_back(static_cast<Element>(g), std::move(images));
  }
  try {
    return PmpAction::from_generators(group, space, gens);
  } catch (const std::invalid_argument& e) {
    throw ParseError("[" + name + "]: " + e.what(), lines.front().number);
  }
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  const Sections sections = split_sections(text);
  for (const auto& [name, lines] : sections) {
    static const char* known[] = {"G1", "G2", "H", "space", "action1", "action2", "run"};
    if (std::find(std::begin(known), std::end(known), name) == std::end(known)) {
      throw ParseError("unknown section [" + name + "]");
    }
  }

  FiniteGroup g1 = parse_group_section(require(sections, "G1"), "G1");
  FiniteGroup g2 = parse_group_section(require(sections, "G2"), "G2");

  std::optional<std::int64_t> h_cap;
  const auto& h_lines = require(sections, "H");
  std::optional<FreeFactor> h;
  if (tokens(h_lines.front().text)[0] == "integers") {
    for (std::size_t i = 1; i < h_lines.size(); ++i) {
      const auto t = tokens(h_lines[i].text);
      if (t[0] != "h_cap" || t.size() != 2) {
        throw ParseError("[H]: expected 'h_cap <n>'", h_lines[i].number);
      }
      h_cap = parse_int(t[1], h_lines[i].number);
    }
    h = FreeFactor::integers();
  } else {
    h = FreeFactor::finite(parse_group_section(h_lines, "H"));
  }

  ProbSpace space = parse_space(require(sections, "space"), g1);
  PmpAction a1 = parse_action(require(sections, "action1"), g1, space, "action1");
  PmpAction a2 = parse_action(require(sections, "action2"), g2, space, "action2");
  OrbitEqualPair pair = OrbitEqualPair::make(std::move(a1), std::move(a2));

  int depth = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 100'000;
  double tv_marginal = 0.02, tv_pair = 0.03;
  if (auto it = sections.find("run"); it != sections.end()) {
    for (const Line& l : it->second) {
      const auto t = tokens(l.text);
      if (t.size() != 2) throw ParseError("expected '<key> <value>'", l.number);
      if (t[0] == "depth") {
        const long long d = parse_int(t[1], l.number);
        if (d < 0) throw ParseError("depth must be >= 0", l.number);
        depth = static_cast<int>(d);
      } else if (t[0] == "seed") {
        const long long s = parse_int(t[1], l.number);
        if (s < 0) throw ParseError("seed must be >= 0", l.number);
        seed = static_cast<std::uint64_t>(s);
      } else if (t[0] == "samples") {
        const long long s = parse_int(t[1], l.number);
        if (s <= 0) throw ParseError("samples must be positive", l.number);
        samples = static_cast<std::size_t>(s);
      } else if (t[0] == "tv_marginal") {
        tv_marginal = parse_double(t[1], l.number);
      } else if (t[0] == "tv_pair") {
        tv_pair = parse_double(t[1], l.number);
      } else if (t[0] == "h_cap") {
        h_cap = parse_int(t[1], l.number);
      } else {
        throw ParseError("unknown [run] key '" + t[0] + "'", l.number);
      }
    }
  }
  if (h_cap && *h_cap <= 0) throw ParseError("h_cap must be positive");
  if (h->is_integers() && !h_cap) {
    throw ParseError("H = integers needs an h_cap");
  }

  return Scenario{std::move(g1), std::move(g2), std::move(*h), h_cap,
                  std::move(pair), depth, seed, samples, tv_marginal, tv_pair};
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

OeContext Scenario::context(std::optional<std::int64_t> h_cap_override) const {
  return OeContext::create(pair, h, h_cap_override ? h_cap_override : h_cap);
}

}  // namespace coindoe
