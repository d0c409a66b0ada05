// coindoe: run verification suites on a scenario, sample configurations and
// render orbit diagrams.
//
// Exit codes: 0 all selected suites pass, 1 a suite failed, 2 bad usage or
// input (parse/validation errors, truncation, exceeded budget).

#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coindoe/coinduction.hpp"
#include "coindoe/diagram.hpp"
#include "coindoe/errors.hpp"
#include "coindoe/oe.hpp"
#include "coindoe/scenario.hpp"
#include "coindoe/verify.hpp"

namespace fs = std::filesystem;
using namespace coindoe;

namespace {

constexpr std::array<const char*, 6> kSuites = {
    "cocycle", "bijectivity", "inverse", "orbit", "locality", "pushforward"};

struct RunOptions {
  std::string scenario;
  std::string suite;
  bool all = false;
  std::optional<int> depth;
  std::optional<std::uint64_t> seed;
  std::size_t configs = 100;
  std::optional<std::size_t> samples;
  std::string mode = "auto";
  std::string out = "oe_reports";
  std::optional<std::int64_t> h_cap;
};

struct DiagramOptions {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<int> depth;
  std::string config;
  std::string out;
  std::optional<std::int64_t> h_cap;
};

struct SampleOptions {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<int> depth;
  int side = 1;
  bool omega = false;
  std::string out;
  std::optional<std::int64_t> h_cap;
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

VerificationReport run_suite(const std::string& name, const OeContext& ctx,
                             const Scenario& scn, const RunOptions& opt) {
  const int depth = opt.depth.value_or(scn.depth);
  const std::uint64_t seed = opt.seed.value_or(scn.seed);
  const ConfigSelection sel = ConfigSelection::sampled(opt.configs, seed);
  if (name == "cocycle") return check_cocycle_suite(ctx);
  if (name == "bijectivity") return check_bijectivity_length(ctx, depth, sel);
  if (name == "inverse") return check_inverse_suite(ctx, depth, sel);
  if (name == "orbit") return check_orbit_mapping(ctx, depth, sel);
  if (name == "locality") return check_locality(ctx, depth, opt.configs, seed);
  PushforwardParams params;
  params.seed = seed;
  params.samples = opt.samples.value_or(scn.samples);
  params.tv_marginal = scn.tv_marginal;
  params.tv_pair = scn.tv_pair;
  if (opt.mode == "exact") {
    params.mode = PushforwardMode::kExact;
  } else if (opt.mode == "sampled") {
    params.mode = PushforwardMode::kSampled;
  } else {
    params.mode = within_budget(*ctx.space(Side::kFirst), depth, params.budget)
                      ? PushforwardMode::kExact
                      : PushforwardMode::kSampled;
  }
  return check_pushforward(ctx, depth, params);
}

int cmd_run(const RunOptions& opt) {
  const Scenario scn = load_scenario(opt.scenario);
  const OeContext ctx = scn.context(opt.h_cap);
  std::vector<std::string> selected;
  if (!opt.suite.empty() && !opt.all) {
    selected.push_back(opt.suite);
  } else {
    selected.assign(kSuites.begin(), kSuites.end());
  }

  std::vector<VerificationReport> reports;
  for (const std::string& name : selected) {
    reports.push_back(run_suite(name, ctx, scn, opt));
  }

  std::ostringstream summary;
  bool all_pass = true;
  for (const VerificationReport& r : reports) {
    std::uint64_t instances = 0, failures = 0;
    for (const Check& c : r.checks) {
      instances += c.count;
      failures += c.failures;
    }
    all_pass = all_pass && r.passed();
    summary << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
            << r.checks.size() << " checks, " << instances << " instances, "
            << failures << " failures)\n";
    write_file(fs::path(opt.out) / (r.suite + ".json"), r.to_json().dump(2) + "\n");
  }
  summary << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
  write_file(fs::path(opt.out) / "summary.txt", summary.str());
  std::cout << summary.str();
  return all_pass ? 0 : 1;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_diagram(const DiagramOptions& opt) {
  const Scenario scn = load_scenario(opt.scenario);
  const OeContext ctx = scn.context(opt.h_cap);
  const SpacePtr& space = ctx.space(Side::kFirst);
  const int depth = opt.depth.value_or(scn.depth);
  const TruncatedConfig f =
      opt.config.empty()
          ? sample_config(space, depth, opt.seed.value_or(scn.seed))
          : parse_config(space, read_text(opt.config));
  emit(opt.out, render_diagram(ctx, f, depth));
  return 0;
}

int cmd_sample(const SampleOptions& opt) {
  const Scenario scn = load_scenario(opt.scenario);
  const OeContext ctx = scn.context(opt.h_cap);
  const Side side = opt.side == 2 ? Side::kSecond : Side::kFirst;
  const int depth = opt.depth.value_or(scn.depth);
  TruncatedConfig f =
      sample_config(ctx.space(side), depth, opt.seed.value_or(scn.seed));
  if (opt.omega) f = side == Side::kFirst ? omega_map(ctx, f) : theta_map(ctx, f);
  emit(opt.out, serialize_config(f));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit equivalence of coinduced actions over free products"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run verification suites");
  run_cmd->add_option("scenario", run.scenario, "Scenario file")->required();
  auto* suite_opt = run_cmd->add_option("--suite", run.suite, "Single suite")
                        ->check(CLI::IsMember(std::vector<std::string>(
                            kSuites.begin(), kSuites.end())));
  run_cmd->add_flag("--all", run.all, "All suites (default)")->excludes(suite_opt);
  run_cmd->add_option("--depth", run.depth, "Ball depth")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--seed", run.seed, "Seed");
  run_cmd->add_option("--configs", run.configs, "Sampled configs or pairs per suite");
  run_cmd->add_option("--samples", run.samples, "Samples for sampled pushforward");
  run_cmd->add_option("--mode", run.mode, "Pushforward mode")
      ->check(CLI::IsMember({"exact", "sampled", "auto"}));
  run_cmd->add_option("--out", run.out, "Report directory");
  run_cmd->add_option("--h-cap", run.h_cap, "Bound on |h| when H is the integers")
      ->check(CLI::PositiveNumber);

  DiagramOptions diagram;
  auto* diagram_cmd = app.add_subcommand("diagram", "Render a DOT orbit diagram");
  diagram_cmd->add_option("scenario", diagram.scenario, "Scenario file")->required();
  diagram_cmd->add_option("--seed", diagram.seed, "Config seed");
  diagram_cmd->add_option("--depth", diagram.depth, "Ball depth")
      ->check(CLI::NonNegativeNumber);
  diagram_cmd->add_option("--config", diagram.config, "Config file instead of sampling");
  diagram_cmd->add_option("--out", diagram.out, "Output .dot file (stdout if absent)");
  diagram_cmd->add_option("--h-cap", diagram.h_cap, "Bound on |h|")
      ->check(CLI::PositiveNumber);

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Print a sampled configuration");
  sample_cmd->add_option("scenario", sample.scenario, "Scenario file")->required();
  sample_cmd->add_option("--seed", sample.seed, "Seed");
  sample_cmd->add_option("--depth", sample.depth, "Ball depth")
      ->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--side", sample.side, "1 or 2")->check(CLI::IsMember({1, 2}));
  sample_cmd->add_flag("--omega", sample.omega, "Print the image under the OE map");
  sample_cmd->add_option("--out", sample.out, "Output file (stdout if absent)");
  sample_cmd->add_option("--h-cap", sample.h_cap, "Bound on |h|")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*diagram_cmd) return cmd_diagram(diagram);
    return cmd_sample(sample);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
