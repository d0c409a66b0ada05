#include "coindoe/diagram.hpp"

#include <sstream>

#include "coindoe/errors.hpp"

namespace coindoe {

namespace {

std::string vertex_id(std::size_t rep, Element g) {
  return "v" + std::to_string(rep) + "_" + std::to_string(g);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_diagram(const OeContext& ctx, const TruncatedConfig& f,
                           int depth) {
  const SpacePtr& space = ctx.space(Side::kFirst);
  if (f.space() != space) {
    throw std::invalid_argument("diagram needs a side-1 configuration");
  }
  if (depth > f.depth()) throw TruncationExceeded("L(" + std::to_string(depth) + ")", depth, f.depth());
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");

  const FreeProduct& fp = space->gamma();
  const FiniteGroup& g1 = fp.g();
  const FiniteGroup& g2 = ctx.pair().second().group();
  const CocycleTable& table = ctx.cocycles();
  const auto ball = space->ball(depth);

  std::ostringstream out;
  out << "digraph orbit_equivalence {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < ball->size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n";
    out << "    label=" << quoted(format_word(ball->rep(i)) + " G1") << ";\n";
    for (Element g = 0; g < g1.order(); ++g) {
      const Word w = fp.multiply(ball->rep(i), fp.g_letter(g));
      out << "    " << vertex_id(i, g) << " [label="
          << quoted(format_word(w) + "\\nx=" + std::to_string(eval_config(f, w)))
          << "];\n";
    }
    out << "  }\n";
  }

  for (std::size_t i = 0; i < ball->size(); ++i) {
    for (Element g = 0; g < g1.order(); ++g) {
      const Point y = eval_config(f, fp.multiply(ball->rep(i), fp.g_letter(g)));
      for (Element s : g1.generating_set()) {
        out << "  " << vertex_id(i, g) << " -> " << vertex_id(i, g1.mul(g, s))
            << " [style=solid, label=" << quoted("g:" + std::to_string(s))
            << "];\n";
      }
      for (Element b : g2.generating_set()) {
        const Element t = g1.inv(table.upsilon(g2.inv(b), y));
        out << "  " << vertex_id(i, g) << " -> " << vertex_id(i, g1.mul(g, t))
            << " [style=dashed, label=" << quoted("b:" + std::to_string(b))
            << "];\n";
      }
      for (std::int64_t h : fp.h().generators()) {
        const Word next =
            fp.multiply({ball->rep(i), fp.g_letter(g), fp.h_letter(h)});
        const CosetSection s = fp.coset_section(next);
        if (const auto j = ball->find(s.rep)) {
          out << "  " << vertex_id(i, g) << " -> " << vertex_id(*j, s.g)
              << " [color=blue, label=" << quoted("h:" + std::to_string(h))
              << "];\n";
        }
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace coindoe
