// Command-line front end: generation, survey simulation, estimation and the
// experiment drivers, emitting plot-ready CSV/JSON.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcs/format.hpp"
#include "fcs/generators.hpp"
#include "fcs/harness.hpp"
#include "fcs/jackknife.hpp"
#include "fcs/sampler.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  // generate
  std::string model = "modified_ws";
  fcs::Count nodes = 4000;
  std::vector<double> strong_range{10, 20};
  std::vector<double> weak_range{100, 200};
  double shortcut_fraction = 0.2;
  int attachment_count = 5;
  double triad_probability = 0.5;
  fcs::Count min_weak_degree = 10;
  // sample / estimate
  std::string graph_path;
  std::string survey_path;
  double q = 0.1;
  int budget = 10;
  std::string weak_policy = "error";
  bool no_jackknife = false;
  bool second_moment_jackknife = false;
  std::string kw_denominator = "consistent";
  bool no_clamp = false;
  // harness
  std::string config_path;
  std::string input_path;
  std::vector<std::string> families{"sw", "hk", "ba", "rrt"};
  int count = 1000;
  fcs::Count size = 1000;
  // global
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
};

std::ostream& open_out(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) fcs::raise(fcs::Errc::io_error, "cannot open " + opt.out_path);
  return file;
}

fcs::GeneratorConfig generator_from_options(const Options& opt) {
  fcs::GeneratorConfig cfg;
  cfg.model = fcs::model_from_name(opt.model);
  cfg.node_count = opt.nodes;
  if (opt.strong_range.size() != 2 || opt.weak_range.size() != 2)
    fcs::raise(fcs::Errc::bad_config, "degree ranges need exactly two values");
  cfg.strong_mean_degree_range = {opt.strong_range[0], opt.strong_range[1]};
  cfg.weak_mean_degree_range = {opt.weak_range[0], opt.weak_range[1]};
  cfg.shortcut_fraction = opt.shortcut_fraction;
  cfg.attachment_count = opt.attachment_count;
  cfg.triad_probability = opt.triad_probability;
  cfg.min_weak_degree = opt.min_weak_degree;
  cfg.rng_seed = opt.seed;
  return cfg;
}

int cmd_generate(const Options& opt) {
  fcs::GeneratorConfig cfg = generator_from_options(opt);
  fcs::Rng rng(cfg.rng_seed);
  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  if (cfg.model == fcs::GeneratorModel::modified_ws) {
    fcs::TwoLayerGraph g = fcs::generate_two_layer(cfg, rng);
    fcs::save_edge_list(g, out);
  } else {
    // single-layer models: emit every link as a weak tie
    fcs::Graph g = fcs::generate_single_layer(cfg, rng);
    out << "# single-layer " << fcs::model_name(cfg.model) << " network\n";
    out << "nodes " << g.node_count() << "\n";
    for (fcs::Count u = 0; u < g.node_count(); ++u)
      for (fcs::NodeId v : g.neighbors(static_cast<fcs::NodeId>(u)))
        if (static_cast<fcs::NodeId>(u) < v)
          out << u << " " << v << " w\n";
  }
  return 0;
}

int cmd_sample(const Options& opt) {
  fcs::TwoLayerGraph g = fcs::load_edge_list_file(opt.graph_path);
  fcs::SamplingConfig sc;
  sc.q = opt.q;
  sc.budget = opt.budget;
  sc.rng_seed = opt.seed;
  if (opt.weak_policy == "error")
    sc.insufficient_weak_policy = fcs::InsufficientWeakPolicy::error;
  else if (opt.weak_policy == "report-all")
    sc.insufficient_weak_policy = fcs::InsufficientWeakPolicy::report_all;
  else
    fcs::raise(fcs::Errc::bad_config,
               "weak policy must be 'error' or 'report-all'");
  fcs::Rng rng(sc.rng_seed);
  fcs::ObservedNetwork obs = fcs::conduct_survey(g, sc, rng);
  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  out << fcs::survey_to_json(obs).dump(2) << "\n";
  return 0;
}

fcs::PipelineOptions pipeline_from_options(const Options& opt) {
  fcs::PipelineOptions p;
  if (opt.kw_denominator == "consistent")
    p.kw_denominator = fcs::KwDenominator::consistent;
  else if (opt.kw_denominator == "alternate")
    p.kw_denominator = fcs::KwDenominator::alternate;
  else
    fcs::raise(fcs::Errc::bad_config,
               "kw denominator must be 'consistent' or 'alternate'");
  p.clamp_negative_counts = !opt.no_clamp;
  return p;
}

int cmd_estimate(const Options& opt) {
  fcs::ObservedNetwork obs = [&] {
    if (!opt.survey_path.empty()) return fcs::load_survey_file(opt.survey_path);
    if (opt.graph_path.empty())
      fcs::raise(fcs::Errc::bad_config,
                 "estimate needs either --survey or --graph");
    fcs::TwoLayerGraph g = fcs::load_edge_list_file(opt.graph_path);
    fcs::SamplingConfig sc;
    sc.q = opt.q;
    sc.budget = opt.budget;
    sc.rng_seed = opt.seed;
    fcs::Rng rng(sc.rng_seed);
    return fcs::conduct_survey(g, sc, rng);
  }();

  fcs::PipelineOptions popts = pipeline_from_options(opt);
  fcs::EstimateReport report = fcs::full_pipeline(obs, obs.budget(), popts);

  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  if (opt.format == "csv") {
    std::string header;
    for (const auto& c : fcs::EstimateReport::csv_header()) {
      if (!header.empty()) header += ',';
      header += c;
    }
    out << header << "\n";
    std::string row;
    for (const auto& f : report.csv_fields()) {
      if (!row.empty()) row += ',';
      row += fcs::csv_quote(f);
    }
    out << row << "\n";
    return 0;
  }
  json doc = report.to_json();
  if (!opt.no_jackknife && obs.seeds().size() >= 2) {
    fcs::JackknifeOptions jopts;
    jopts.kw_denominator = popts.kw_denominator;
    jopts.second_moments = opt.second_moment_jackknife;
    fcs::JackknifeOutcome jk = fcs::jackknife(obs, obs.budget(), jopts);
    json block;
    for (const auto& r : jk.results)
      block[r.parameter] = {{"estimate", r.full_estimate},
                            {"mean", r.mean},
                            {"sd", r.sd()}};
    doc["jackknife"] = block;
    if (!jk.warnings.empty()) {
      for (const auto& w : jk.warnings) doc["warnings"].push_back(w);
    }
  }
  out << doc.dump(2) << "\n";
  return 0;
}

fcs::ExperimentConfig harness_config(const Options& opt, fcs::ExperimentKind kind,
                                     bool seed_set, bool out_set) {
  fcs::ExperimentConfig cfg;
  if (!opt.config_path.empty())
    cfg = fcs::ExperimentConfig::load_file(opt.config_path);
  cfg.kind = kind;
  if (seed_set) cfg.seed = opt.seed;
  if (out_set) cfg.out = opt.out_path;
  return cfg;
}

int run_to_output(const fcs::ExperimentConfig& cfg,
                  void (*runner)(const fcs::ExperimentConfig&, std::ostream&)) {
  if (cfg.out.empty()) {
    runner(cfg, std::cout);
    return 0;
  }
  std::ofstream file(cfg.out);
  if (!file) fcs::raise(fcs::Errc::io_error, "cannot open " + cfg.out);
  runner(cfg, file);
  return 0;
}

int cmd_approx(const Options& opt, bool seed_set, bool out_set) {
  fcs::ExperimentConfig cfg =
      harness_config(opt, fcs::ExperimentKind::approx_check, seed_set, out_set);
  if (!opt.families.empty()) {
    cfg.families.clear();
    for (const auto& f : opt.families)
      cfg.families.push_back(fcs::model_from_name(f));
  }
  cfg.family_count = opt.count;
  cfg.family_size = opt.size;
  return run_to_output(cfg, fcs::run_approx_check);
}

int cmd_report(const Options& opt) {
  std::ifstream in(opt.input_path);
  if (!in) fcs::raise(fcs::Errc::io_error, "cannot open " + opt.input_path);
  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  fcs::aggregate_report(in, out, opt.format == "json");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"two-layer fixed-choice survey simulation and inference"};
  app.require_subcommand(1);

  auto* seed_opt = app.add_option("--seed", opt.seed, "master RNG seed");
  auto* out_opt = app.add_option("--out", opt.out_path, "output path (default stdout)");
  app.add_option("--config", opt.config_path, "experiment config (JSON)");
  app.add_option("--format", opt.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* gen = app.add_subcommand("generate", "generate a synthetic network");
  gen->fallthrough();
  gen->add_option("--model", opt.model, "modified_ws|holme_kim|ba|rrt");
  gen->add_option("--nodes", opt.nodes, "number of nodes");
  gen->add_option("--strong-range", opt.strong_range, "strong mean degree range")
      ->expected(2);
  gen->add_option("--weak-range", opt.weak_range, "weak mean degree range")
      ->expected(2);
  gen->add_option("--shortcut-fraction", opt.shortcut_fraction,
                  "degree fraction from random shortcuts");
  gen->add_option("--attachment-count", opt.attachment_count,
                  "links per arriving node (ba/hk/rrt)");
  gen->add_option("--triad-probability", opt.triad_probability,
                  "holme_kim triad step probability");
  gen->add_option("--min-weak-degree", opt.min_weak_degree,
                  "weak degree floor (two-layer)");

  auto* sample = app.add_subcommand("sample", "simulate one fixed-choice survey");
  sample->fallthrough();
  sample->add_option("--graph", opt.graph_path, "edge-list file")->required();
  sample->add_option("--q", opt.q, "seed probability");
  sample->add_option("--b", opt.budget, "weak ties named per respondent");
  sample->add_option("--weak-policy", opt.weak_policy, "error|report-all");

  auto* estimate =
      app.add_subcommand("estimate", "run the inference pipeline on a survey");
  estimate->fallthrough();
  estimate->add_option("--survey", opt.survey_path, "survey JSON file");
  estimate->add_option("--graph", opt.graph_path,
                       "edge-list file (simulate a survey first)");
  estimate->add_option("--q", opt.q, "seed probability (with --graph)");
  estimate->add_option("--b", opt.budget, "budget (with --graph)");
  estimate->add_flag("--no-jackknife", opt.no_jackknife,
                     "skip the jackknife variance block");
  estimate->add_flag("--second-moment-jackknife", opt.second_moment_jackknife,
                     "also resample second moments (slow)");
  estimate->add_option("--kw-denominator", opt.kw_denominator,
                       "consistent|alternate");
  estimate->add_flag("--no-clamp", opt.no_clamp,
                     "keep negative inverted counts instead of clamping");

  auto* mc = app.add_subcommand("mc", "Monte Carlo sweep (config-driven)");
  mc->fallthrough();
  auto* jk = app.add_subcommand("jackknife", "jackknife sweep (config-driven)");
  jk->fallthrough();

  auto* approx =
      app.add_subcommand("approx-check", "mean-degree approximation study");
  approx->fallthrough();
  approx->add_option("--families", opt.families, "comma list of sw,hk,ba,rrt")
      ->delimiter(',');
  approx->add_option("--count", opt.count, "networks per family");
  approx->add_option("--size", opt.size, "nodes per network");

  auto* report = app.add_subcommand("report", "aggregate a trial CSV");
  report->fallthrough();
  report->add_option("--input", opt.input_path, "trial CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(opt);
    if (sample->parsed()) return cmd_sample(opt);
    if (estimate->parsed()) return cmd_estimate(opt);
    if (mc->parsed())
      return run_to_output(harness_config(opt, fcs::ExperimentKind::mc_sweep,
                                          seed_opt->count() > 0,
                                          out_opt->count() > 0),
                           fcs::run_mc_sweep);
    if (jk->parsed())
      return run_to_output(
          harness_config(opt, fcs::ExperimentKind::jackknife_sweep,
                         seed_opt->count() > 0, out_opt->count() > 0),
          fcs::run_jackknife_sweep);
    if (approx->parsed())
      return cmd_approx(opt, seed_opt->count() > 0, out_opt->count() > 0);
    if (report->parsed()) return cmd_report(opt);
  } catch (const fcs::Error& e) {
    nlohmann::json err = {
        {"error",
         {{"code", fcs::errc_name(e.code())}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err = {
        {"error", {{"code", "internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
