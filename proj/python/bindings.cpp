#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coindoe/coinduction.hpp"
#include "coindoe/diagram.hpp"
#include "coindoe/errors.hpp"
#include "coindoe/oe.hpp"
#include "coindoe/scenario.hpp"
#include "coindoe/verify.hpp"

namespace py = pybind11;
using namespace coindoe;

namespace {

Side side_of(int side) {
  if (side == 1) return Side::kFirst;
  if (side == 2) return Side::kSecond;
  throw std::invalid_argument("side must be 1 or 2");
}

ConfigSelection selection(std::optional<std::size_t> configs, std::uint64_t seed) {
  return configs ? ConfigSelection::sampled(*configs, seed) : ConfigSelection::all();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orbit equivalence of coinduced actions over free products";

  auto base = py::register_exception<Error>(m, "CoindoeError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<NotAGroup>(m, "NotAGroup", base);
  py::register_exception<InvalidSpace>(m, "InvalidSpace", base);
  py::register_exception<NotHomomorphism>(m, "NotHomomorphism", base);
  py::register_exception<NotMeasurePreserving>(m, "NotMeasurePreserving", base);
  py::register_exception<NotFree>(m, "NotFree", base);
  py::register_exception<OrbitMismatch>(m, "OrbitMismatch", base);
  py::register_exception<CocycleInconsistent>(m, "CocycleInconsistent", base);
  py::register_exception<TruncationExceeded>(m, "TruncationExceeded", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<NotAProductSpace>(m, "NotAProductSpace", base);
  py::register_exception<PreimageMismatch>(m, "PreimageMismatch", base);

  py::class_<TruncatedConfig>(m, "Config")
      .def_property_readonly("depth", &TruncatedConfig::depth)
      .def_property_readonly("values", &TruncatedConfig::values)
      .def("serialize", &serialize_config)
      .def("__eq__", [](const TruncatedConfig& a, const TruncatedConfig& b) { return a == b; })
      .def("__repr__", [](const TruncatedConfig& f) {
        return "<Config depth=" + std::to_string(f.depth()) + " coordinates=" +
               std::to_string(f.values().size()) + ">";
      });

  py::class_<OeContext>(m, "Context")
      .def_property_readonly("h_cap", &OeContext::h_cap)
      .def("reps",
           [](const OeContext& ctx, int side, int depth) {
             std::vector<std::string> out;
             for (const Word& w : ctx.space(side_of(side))->ball(depth)->reps()) {
               out.push_back(format_word(w));
             }
             return out;
           },
           py::arg("side"), py::arg("depth"))
      .def("sample",
           [](const OeContext& ctx, int side, int depth, std::uint64_t seed) {
             return sample_config(ctx.space(side_of(side)), depth, seed);
           },
           py::arg("side"), py::arg("depth"), py::arg("seed"))
      .def("config",
           [](const OeContext& ctx, int side, int depth, std::vector<Point> values) {
             return TruncatedConfig(ctx.space(side_of(side)), depth, std::move(values));
           },
           py::arg("side"), py::arg("depth"), py::arg("values"))
      .def("parse_config",
           [](const OeContext& ctx, int side, const std::string& text) {
             return parse_config(ctx.space(side_of(side)), text);
           },
           py::arg("side"), py::arg("text"))
      .def("omega", &omega_map, py::arg("f"))
      .def("theta", &theta_map, py::arg("f"))
      .def("beta",
           [](const OeContext& ctx, const std::string& word, const TruncatedConfig& f) {
             const Word w = ctx.space(Side::kFirst)->gamma().parse_word(word);
             return format_word(beta(ctx, w, f));
           },
           py::arg("word"), py::arg("f"))
      .def("alpha",
           [](const OeContext& ctx, const std::string& word, const TruncatedConfig& f) {
             const Word w = ctx.space(Side::kSecond)->gamma().parse_word(word);
             return format_word(alpha(ctx, w, f));
           },
           py::arg("word"), py::arg("f"))
      .def("diagram", &render_diagram, py::arg("f"), py::arg("depth"))
      .def("check_cocycle",
           [](const OeContext& ctx) { return check_cocycle_suite(ctx).to_json().dump(); })
      .def("check_bijectivity",
           [](const OeContext& ctx, int depth, std::optional<std::size_t> configs,
              std::uint64_t seed) {
             return check_bijectivity_length(ctx, depth, selection(configs, seed))
                 .to_json()
                 .dump();
           },
           py::arg("depth"), py::arg("configs") = py::none(), py::arg("seed") = 0)
      .def("check_inverse",
           [](const OeContext& ctx, int depth, std::optional<std::size_t> configs,
              std::uint64_t seed) {
             return check_inverse_suite(ctx, depth, selection(configs, seed)).to_json().dump();
           },
           py::arg("depth"), py::arg("configs") = py::none(), py::arg("seed") = 0)
      .def("check_orbit",
           [](const OeContext& ctx, int depth, std::optional<std::size_t> configs,
              std::uint64_t seed) {
             return check_orbit_mapping(ctx, depth, selection(configs, seed)).to_json().dump();
           },
           py::arg("depth"), py::arg("configs") = py::none(), py::arg("seed") = 0)
      .def("check_locality",
           [](const OeContext& ctx, int n, std::size_t pairs, std::uint64_t seed) {
             return check_locality(ctx, n, pairs, seed).to_json().dump();
           },
           py::arg("n"), py::arg("pairs"), py::arg("seed") = 0)
      .def("check_pushforward",
           [](const OeContext& ctx, int depth, const std::string& mode,
              std::size_t samples, std::uint64_t seed, double tv_marginal,
              double tv_pair) {
             PushforwardParams p;
             if (mode == "exact") {
               p.mode = PushforwardMode::kExact;
             } else if (mode == "sampled") {
               p.mode = PushforwardMode::kSampled;
             } else {
               throw std::invalid_argument("mode must be 'exact' or 'sampled'");
             }
             p.samples = samples;
             p.seed = seed;
             p.tv_marginal = tv_marginal;
             p.tv_pair = tv_pair;
             return check_pushforward(ctx, depth, p).to_json().dump();
           },
           py::arg("depth"), py::arg("mode") = "exact", py::arg("samples") = 100000,
           py::arg("seed") = 0, py::arg("tv_marginal") = 0.02, py::arg("tv_pair") = 0.03)
      .def("within_budget",
           [](const OeContext& ctx, int depth, std::uint64_t budget) {
             return within_budget(*ctx.space(Side::kFirst), depth, budget);
           },
           py::arg("depth"), py::arg("budget") = kDefaultBudget);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("depth", &Scenario::depth)
      .def_readonly("seed", &Scenario::seed)
      .def_readonly("samples", &Scenario::samples)
      .def_readonly("tv_marginal", &Scenario::tv_marginal)
      .def_readonly("tv_pair", &Scenario::tv_pair)
      .def_readonly("h_cap", &Scenario::h_cap)
      .def_property_readonly("points", [](const Scenario& s) { return s.pair.space().size(); })
      .def("context", &Scenario::context, py::arg("h_cap") = py::none());

  m.def("load_scenario", [](const std::string& path) { return load_scenario(path); },
        py::arg("path"));
  m.def("parse_scenario", [](const std::string& text) { return parse_scenario(text); },
        py::arg("text"));
  m.def("entropy",
        [](const std::vector<std::string>& masses) {
          std::vector<Rational> m;
          for (const auto& s : masses) m.push_back(parse_rational(s));
          return entropy(ProbSpace(std::move(m)));
        },
        py::arg("masses"), "Shannon entropy in nats of masses given as 'p/q' strings.");
}
