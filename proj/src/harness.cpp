#include "fcs/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "fcs/format.hpp"
#include "fcs/jackknife.hpp"
#include "fcs/rng.hpp"
#include "fcs/sampler.hpp"

namespace fcs {

namespace {

using nlohmann::json;

constexpr int kMaxSurveyRetries = 100;

void expect_keys(const json& obj, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok)
      raise(Errc::bad_config, "unknown key '" + it.key() + "' in " + where);
  }
}

template <typename T>
void read_field(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void read_range(const json& obj, const char* key, std::pair<double, double>& out) {
  if (!obj.contains(key)) return;
  auto v = obj.at(key).get<std::vector<double>>();
  if (v.size() != 2)
    raise(Errc::bad_config, std::string(key) + " must be a [lo, hi] pair");
  out = {v[0], v[1]};
}

void read_range(const json& obj, const char* key, std::pair<int, int>& out) {
  if (!obj.contains(key)) return;
  auto v = obj.at(key).get<std::vector<int>>();
  if (v.size() != 2)
    raise(Errc::bad_config, std::string(key) + " must be a [lo, hi] pair");
  out = {v[0], v[1]};
}

// survey with degenerate-sample retries on derived sub-seeds
ObservedNetwork survey_with_retries(const TwoLayerGraph& g, double q, int b,
                                    std::uint64_t trial_seed, int& retries) {
  SamplingConfig sc;
  sc.q = q;
  sc.budget = b;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxSurveyRetries)
      raise(Errc::degenerate_sample, "survey kept drawing zero seeds");
    Rng rng(derive_seed(trial_seed, static_cast<std::uint64_t>(attempt), 1));
    try {
      return conduct_survey(g, sc, rng);
    } catch (const Error& e) {
      if (e.code() != Errc::degenerate_sample) throw;
      ++retries;
    }
  }
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_quote(fields[i]);
  }
  return line;
}

}  // namespace

void ExperimentConfig::validate() const {
  generator.validate();
  if (trials < 1) raise(Errc::bad_config, "trials must be >= 1");
  if (repetitions < 1) raise(Errc::bad_config, "repetitions must be >= 1");
  if (sweep.node_counts.empty() || sweep.qs.empty() || sweep.budgets.empty())
    raise(Errc::bad_config, "sweep axes must be nonempty");
  for (double q : sweep.qs)
    if (!(q > 0.0) || q >= 1.0)
      raise(Errc::bad_config, "sweep q values must be in (0, 1)");
  for (int b : sweep.budgets)
    if (b < 1) raise(Errc::bad_config, "sweep budgets must be >= 1");
  for (Count n : sweep.node_counts)
    if (n < 1) raise(Errc::bad_config, "sweep node counts must be positive");
  if (family_count < 1 || family_size < 3)
    raise(Errc::bad_config, "approx check needs count >= 1 and size >= 3");
  if (families.empty()) raise(Errc::bad_config, "approx check needs >= 1 family");
}

ExperimentConfig ExperimentConfig::from_json(const json& doc) {
  if (!doc.is_object()) raise(Errc::bad_config, "config must be a JSON object");
  expect_keys(doc,
              {"experiment", "trials", "seed", "out", "timing", "generator",
               "sweep", "estimator", "jackknife", "approx"},
              "config");
  ExperimentConfig cfg;
  if (doc.contains("experiment")) {
    std::string kind = doc.at("experiment").get<std::string>();
    if (kind == "mc_sweep")
      cfg.kind = ExperimentKind::mc_sweep;
    else if (kind == "approx_check")
      cfg.kind = ExperimentKind::approx_check;
    else if (kind == "jackknife_sweep")
      cfg.kind = ExperimentKind::jackknife_sweep;
    else
      raise(Errc::bad_config, "unknown experiment kind '" + kind + "'");
  }
  read_field(doc, "trials", cfg.trials);
  read_field(doc, "seed", cfg.seed);
  read_field(doc, "out", cfg.out);
  read_field(doc, "timing", cfg.timing);

  if (doc.contains("generator")) {
    const json& g = doc.at("generator");
    expect_keys(g,
                {"model", "node_count", "strong_mean_degree_range",
                 "weak_mean_degree_range", "shortcut_fraction",
                 "attachment_count", "triad_probability", "min_weak_degree"},
                "generator");
    if (g.contains("model"))
      cfg.generator.model = model_from_name(g.at("model").get<std::string>());
    read_field(g, "node_count", cfg.generator.node_count);
    read_range(g, "strong_mean_degree_range", cfg.generator.strong_mean_degree_range);
    read_range(g, "weak_mean_degree_range", cfg.generator.weak_mean_degree_range);
    read_field(g, "shortcut_fraction", cfg.generator.shortcut_fraction);
    read_field(g, "attachment_count", cfg.generator.attachment_count);
    read_field(g, "triad_probability", cfg.generator.triad_probability);
    read_field(g, "min_weak_degree", cfg.generator.min_weak_degree);
  }
  if (doc.contains("sweep")) {
    const json& s = doc.at("sweep");
    expect_keys(s, {"node_count", "q", "b"}, "sweep");
    read_field(s, "node_count", cfg.sweep.node_counts);
    read_field(s, "q", cfg.sweep.qs);
    read_field(s, "b", cfg.sweep.budgets);
  }
  if (doc.contains("estimator")) {
    const json& e = doc.at("estimator");
    expect_keys(e, {"kw_denominator", "clamp_negative_counts"}, "estimator");
    if (e.contains("kw_denominator")) {
      std::string form = e.at("kw_denominator").get<std::string>();
      if (form == "consistent")
        cfg.estimator.kw_denominator = KwDenominator::consistent;
      else if (form == "alternate")
        cfg.estimator.kw_denominator = KwDenominator::alternate;
      else
        raise(Errc::bad_config,
              "kw_denominator must be 'consistent' or 'alternate'");
    }
    read_field(e, "clamp_negative_counts", cfg.estimator.clamp_negative_counts);
  }
  if (doc.contains("jackknife")) {
    const json& j = doc.at("jackknife");
    expect_keys(j, {"second_moments", "repetitions"}, "jackknife");
    read_field(j, "second_moments", cfg.jackknife_second_moments);
    read_field(j, "repetitions", cfg.repetitions);
  }
  if (doc.contains("approx")) {
    const json& a = doc.at("approx");
    expect_keys(a,
                {"families", "count", "size", "sw_mean_degree", "ba_attachment",
                 "hk_attachment", "hk_triad_probability", "rrt_attachment"},
                "approx");
    if (a.contains("families")) {
      cfg.families.clear();
      for (const auto& f : a.at("families"))
        cfg.families.push_back(model_from_name(f.get<std::string>()));
    }
    read_field(a, "count", cfg.family_count);
    read_field(a, "size", cfg.family_size);
    read_range(a, "sw_mean_degree", cfg.approx.sw_mean_degree);
    read_range(a, "ba_attachment", cfg.approx.ba_attachment);
    read_range(a, "hk_attachment", cfg.approx.hk_attachment);
    read_range(a, "hk_triad_probability", cfg.approx.hk_triad_probability);
    read_range(a, "rrt_attachment", cfg.approx.rrt_attachment);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    raise(Errc::parse_error, std::string("config json: ") + e.what());
  }
  return from_json(doc);
}

// --- Monte Carlo sweep -----------------------------------------------------

namespace {

struct TrialRow {
  GeneratorModel model;
  Count n_nodes = 0;
  double q = 0;
  int b = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  int retries = 0;
  bool timed = false;
  double elapsed_ms = 0;
  std::string error;
  bool has_truth = false;
  DegreeMoments truth;
  double true_cc = 0;
  MotifCensus true_census;
  TriadTotals true_tau;
  bool has_report = false;
  EstimateReport report;
};

const std::vector<std::string>& trial_header() {
  static std::vector<std::string> header = [] {
    std::vector<std::string> h = {
        "model",     "n_nodes",    "q",           "b",           "trial",
        "seed",      "retries",    "elapsed_ms",  "error",       "true_n",
        "true_ks",   "true_kw",    "true_kss",    "true_ksw",    "true_kww",
        "true_cc",   "true_t_s3",  "true_t_s2w",  "true_t_sw2",  "true_t_w3",
        "true_lam_ss", "true_lam_sw", "true_lam_ww", "true_tau_ss",
        "true_tau_sw", "true_tau_ww"};
    for (const auto& c : EstimateReport::csv_header()) h.push_back(c);
    return h;
  }();
  return header;
}

std::vector<std::string> trial_fields(const TrialRow& r) {
  std::vector<std::string> f = {model_name(r.model),
                                std::to_string(r.n_nodes),
                                format_double(r.q),
                                std::to_string(r.b),
                                std::to_string(r.trial),
                                std::to_string(r.seed),
                                std::to_string(r.retries),
                                r.timed ? format_double(r.elapsed_ms)
                                        : std::string(),
                                r.error};
  if (r.has_truth) {
    f.push_back(std::to_string(r.n_nodes));
    for (double x : {r.truth.k_s, r.truth.k_w, r.truth.k_ss, r.truth.k_sw,
                     r.truth.k_ww})
      f.push_back(format_double(x));
    f.push_back(format_double(r.true_cc));
    for (Count x : {r.true_census.t_s3, r.true_census.t_s2w, r.true_census.t_sw2,
                    r.true_census.t_w3, r.true_census.l_ss, r.true_census.l_sw,
                    r.true_census.l_ww, r.true_tau.tau_ss, r.true_tau.tau_sw,
                    r.true_tau.tau_ww})
      f.push_back(std::to_string(x));
  } else {
    for (int i = 0; i < 17; ++i) f.emplace_back();
  }
  if (r.has_report) {
    for (auto& x : r.report.csv_fields()) f.push_back(x);
  } else {
    for (std::size_t i = 0; i < EstimateReport::csv_header().size(); ++i)
      f.emplace_back();
  }
  return f;
}

}  // namespace

void run_mc_sweep(const ExperimentConfig& config, std::ostream& out) {
  config.validate();
  struct Cell {
    Count n;
    double q;
    int b;
  };
  std::vector<Cell> cells;
  for (Count n : config.sweep.node_counts)
    for (double q : config.sweep.qs)
      for (int b : config.sweep.budgets) cells.push_back({n, q, b});

  std::int64_t total = static_cast<std::int64_t>(cells.size()) * config.trials;
  std::vector<TrialRow> rows(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::size_t cell_idx = static_cast<std::size_t>(idx) / config.trials;
    int trial = static_cast<int>(idx % config.trials);
    const Cell& cell = cells[cell_idx];
    TrialRow& row = rows[static_cast<std::size_t>(idx)];
    row.model = config.generator.model;
    row.n_nodes = cell.n;
    row.q = cell.q;
    row.b = cell.b;
    row.trial = trial;
    row.seed = derive_seed(config.seed, cell_idx,
                           static_cast<std::uint64_t>(trial));
    try {
      GeneratorConfig gen = config.generator;
      gen.node_count = cell.n;
      gen.min_weak_degree = std::max(gen.min_weak_degree, static_cast<Count>(cell.b));
      Rng rng(row.seed);
      TwoLayerGraph graph = generate_two_layer(gen, rng);

      row.truth = graph.degree_moments();
      row.true_census = motif_census(graph);
      row.true_tau = triad_totals_from_degrees(graph);
      row.true_cc = global_clustering(collapse(graph));
      row.has_truth = true;

      ObservedNetwork obs =
          survey_with_retries(graph, cell.q, cell.b, row.seed, row.retries);

      auto t0 = std::chrono::steady_clock::now();
      row.report = full_pipeline(obs, cell.b, config.estimator);
      auto t1 = std::chrono::steady_clock::now();
      row.timed = config.timing;
      row.elapsed_ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      row.has_report = true;
    } catch (const Error& e) {
      row.error = std::string(errc_name(e.code())) + ": " + e.what();
    }
  }

  out << join_csv(trial_header()) << "\n";
  for (const auto& row : rows) out << join_csv(trial_fields(row)) << "\n";
}

// --- approximation-error study ---------------------------------------------

double inverse_degree_sum(const Graph& g) {
  double y = 0;
  for (Count i = 0; i < g.node_count(); ++i) {
    NodeId u = static_cast<NodeId>(i);
    Count du = g.degree(u);
    if (du == 0) continue;
    double inner = 0;
    for (NodeId v : g.neighbors(u))
      inner += 1.0 / static_cast<double>(g.degree(v));
    y += inner / static_cast<double>(du);
  }
  return y;
}

void run_approx_check(const ExperimentConfig& config, std::ostream& out) {
  config.validate();
  struct ApproxRow {
    GeneratorModel family;
    int index;
    std::uint64_t seed;
    Count n = 0;
    double mean_degree = 0;
    int attachment = 0;       // 0 = not applicable
    double triad_p = -1;      // < 0 = not applicable
    double degree_target = -1;
    double y_exact = 0, y_approx = 0, ratio = 0;
    std::string error;
  };

  std::int64_t total =
      static_cast<std::int64_t>(config.families.size()) * config.family_count;
  std::vector<ApproxRow> rows(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::size_t fam_idx = static_cast<std::size_t>(idx) / config.family_count;
    int index = static_cast<int>(idx % config.family_count);
    ApproxRow& row = rows[static_cast<std::size_t>(idx)];
    row.family = config.families[fam_idx];
    row.index = index;
    row.seed = derive_seed(config.seed, fam_idx, static_cast<std::uint64_t>(index));
    Rng rng(row.seed);
    try {
      GeneratorConfig gen;
      gen.model = row.family;
      gen.node_count = config.family_size;
      switch (row.family) {
        case GeneratorModel::modified_ws:
          row.degree_target = rng.uniform(config.approx.sw_mean_degree.first,
                                          config.approx.sw_mean_degree.second);
          gen.weak_mean_degree_range = {row.degree_target, row.degree_target};
          break;
        case GeneratorModel::ba:
          row.attachment = static_cast<int>(
              config.approx.ba_attachment.first +
              static_cast<int>(rng.below(static_cast<std::uint64_t>(
                  config.approx.ba_attachment.second -
                  config.approx.ba_attachment.first + 1))));
          gen.attachment_count = row.attachment;
          break;
        case GeneratorModel::holme_kim:
          row.attachment = static_cast<int>(
              config.approx.hk_attachment.first +
              static_cast<int>(rng.below(static_cast<std::uint64_t>(
                  config.approx.hk_attachment.second -
                  config.approx.hk_attachment.first + 1))));
          row.triad_p = rng.uniform(config.approx.hk_triad_probability.first,
                                    config.approx.hk_triad_probability.second);
          gen.attachment_count = row.attachment;
          gen.triad_probability = row.triad_p;
          break;
        case GeneratorModel::rrt:
          row.attachment = static_cast<int>(
              config.approx.rrt_attachment.first +
              static_cast<int>(rng.below(static_cast<std::uint64_t>(
                  config.approx.rrt_attachment.second -
                  config.approx.rrt_attachment.first + 1))));
          gen.attachment_count = row.attachment;
          break;
      }
      Graph g = generate_single_layer(gen, rng);
      row.n = g.node_count();
      Count edges = g.edge_count();
      if (edges == 0) raise(Errc::empty_graph, "generated graph has no edges");
      row.mean_degree =
          2.0 * static_cast<double>(edges) / static_cast<double>(row.n);
      row.y_exact = inverse_degree_sum(g);
      row.y_approx = static_cast<double>(row.n) / row.mean_degree;
      row.ratio = row.y_approx / row.y_exact;
    } catch (const Error& e) {
      row.error = std::string(errc_name(e.code())) + ": " + e.what();
    }
  }

  out << "family,index,seed,n,mean_degree,attachment,triad_probability,"
         "degree_target,y_exact,y_approx,ratio,error\n";
  for (const auto& r : rows) {
    std::vector<std::string> f = {
        model_name(r.family),
        std::to_string(r.index),
        std::to_string(r.seed),
        std::to_string(r.n),
        format_double(r.mean_degree),
        r.attachment > 0 ? std::to_string(r.attachment) : std::string(),
        r.triad_p >= 0 ? format_double(r.triad_p) : std::string(),
        r.degree_target >= 0 ? format_double(r.degree_target) : std::string(),
        format_double(r.y_exact),
        format_double(r.y_approx),
        format_double(r.ratio),
        r.error};
    out << join_csv(f) << "\n";
  }
}

// --- jackknife sweep ---------------------------------------------------------

void run_jackknife_sweep(const ExperimentConfig& config, std::ostream& out) {
  config.validate();
  int b = config.sweep.budgets.front();
  struct JkRow {
    double q = 0;
    int rep = 0;
    std::uint64_t seed = 0;
    int retries = 0;
    std::string error;
    bool ok = false;
    double true_n = 0, true_ks = 0, true_kw = 0;
    double true_kss = 0, true_ksw = 0, true_kww = 0;
    JackknifeOutcome outcome;
  };
  std::int64_t total =
      static_cast<std::int64_t>(config.sweep.qs.size()) * config.repetitions;
  std::vector<JkRow> rows(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::size_t q_idx = static_cast<std::size_t>(idx) / config.repetitions;
    int rep = static_cast<int>(idx % config.repetitions);
    JkRow& row = rows[static_cast<std::size_t>(idx)];
    row.q = config.sweep.qs[q_idx];
    row.rep = rep;
    row.seed = derive_seed(config.seed, q_idx, static_cast<std::uint64_t>(rep));
    try {
      GeneratorConfig gen = config.generator;
      gen.min_weak_degree = std::max(gen.min_weak_degree, static_cast<Count>(b));
      Rng rng(row.seed);
      TwoLayerGraph graph = generate_two_layer(gen, rng);
      DegreeMoments m = graph.degree_moments();
      row.true_n = static_cast<double>(graph.node_count());
      row.true_ks = m.k_s;
      row.true_kw = m.k_w;
      row.true_kss = m.k_ss;
      row.true_ksw = m.k_sw;
      row.true_kww = m.k_ww;
      ObservedNetwork obs =
          survey_with_retries(graph, row.q, b, row.seed, row.retries);
      JackknifeOptions opts;
      opts.kw_denominator = config.estimator.kw_denominator;
      opts.second_moments = config.jackknife_second_moments;
      row.outcome = jackknife(obs, b, opts);
      row.ok = true;
    } catch (const Error& e) {
      row.error = std::string(errc_name(e.code())) + ": " + e.what();
    }
  }

  out << "q,rep,seed,retries,error,true_n,true_ks,true_kw,true_kss,true_ksw,"
         "true_kww,n_full,n_mean,n_sd,q_full,q_mean,q_sd,ks_full,ks_mean,"
         "ks_sd,kw_full,kw_mean,kw_sd,kss_full,kss_mean,kss_sd,ksw_full,"
         "ksw_mean,ksw_sd,kww_full,kww_mean,kww_sd,excluded\n";
  for (const auto& r : rows) {
    std::vector<std::string> f = {format_double(r.q), std::to_string(r.rep),
                                  std::to_string(r.seed),
                                  std::to_string(r.retries), r.error};
    if (r.ok) {
      for (double x : {r.true_n, r.true_ks, r.true_kw, r.true_kss, r.true_ksw,
                       r.true_kww})
        f.push_back(format_double(x));
      auto push_param = [&](const char* name) {
        for (const auto& res : r.outcome.results) {
          if (res.parameter == name) {
            f.push_back(format_double(res.full_estimate));
            f.push_back(format_double(res.mean));
            f.push_back(format_double(res.sd()));
            return;
          }
        }
        f.emplace_back();
        f.emplace_back();
        f.emplace_back();
      };
      push_param("N");
      push_param("q");
      push_param("K_s");
      push_param("K_w");
      push_param("K_ss");
      push_param("K_sw");
      push_param("K_ww");
      f.push_back(std::to_string(r.outcome.failed_respondents.size()));
    } else {
      for (int i = 0; i < 28; ++i) f.emplace_back();
    }
    out << join_csv(f) << "\n";
  }
}

// --- report aggregation -------------------------------------------------------

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  double pos = p * static_cast<double>(values.size() - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
  double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[hi] * frac;
}

void aggregate_report(std::istream& trials_csv, std::ostream& out,
                      bool as_json) {
  std::string line;
  if (!std::getline(trials_csv, line))
    raise(Errc::parse_error, "trial csv: empty input");
  std::vector<std::string> header = parse_csv_line(line);
  auto col = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    raise(Errc::parse_error, "trial csv: missing column '" + name + "'");
  };

  struct RatioSpec {
    const char* parameter;
    std::size_t est, truth;
  };
  std::vector<RatioSpec> specs = {
      {"N", col("N_hat"), col("true_n")},
      {"q", col("q_hat"), col("q")},
      {"K_s", col("Ks_hat"), col("true_ks")},
      {"K_w", col("Kw_hat"), col("true_kw")},
      {"K_ss", col("Kss_hat"), col("true_kss")},
      {"K_sw", col("Ksw_hat"), col("true_ksw")},
      {"K_ww", col("Kww_hat"), col("true_kww")},
      {"cc", col("cc_hat"), col("true_cc")},
      {"cc_crude", col("cc_crude"), col("true_cc")},
  };
  std::size_t c_model = col("model"), c_n = col("n_nodes"), c_q = col("q"),
              c_b = col("b");

  struct CellKey {
    std::string model, n, q, b;
    bool operator<(const CellKey& o) const {
      return std::tie(model, n, q, b) < std::tie(o.model, o.n, o.q, o.b);
    }
  };
  std::map<CellKey, std::vector<std::vector<double>>> cells;

  while (std::getline(trials_csv, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f = parse_csv_line(line);
    if (f.size() < header.size()) continue;
    CellKey key{f[c_model], f[c_n], f[c_q], f[c_b]};
    auto& ratios = cells.try_emplace(key, specs.size()).first->second;
    for (std::size_t s = 0; s < specs.size(); ++s) {
      const std::string& est = f[specs[s].est];
      const std::string& truth = f[specs[s].truth];
      if (est.empty() || truth.empty()) continue;
      try {
        double e = std::stod(est);
        double t = std::stod(truth);
        if (t != 0 && std::isfinite(e) && std::isfinite(t))
          ratios[s].push_back(e / t);
      } catch (const std::exception&) {
      }
    }
  }

  nlohmann::json jrows = nlohmann::json::array();
  if (!as_json) out << "model,n_nodes,q,b,parameter,count,median,q25,q75\n";
  for (const auto& [key, ratios] : cells) {
    for (std::size_t s = 0; s < specs.size(); ++s) {
      if (ratios[s].empty()) continue;
      double med = quantile(ratios[s], 0.5);
      double q25 = quantile(ratios[s], 0.25);
      double q75 = quantile(ratios[s], 0.75);
      if (as_json) {
        jrows.push_back({{"model", key.model},
                         {"n_nodes", key.n},
                         {"q", key.q},
                         {"b", key.b},
                         {"parameter", specs[s].parameter},
                         {"count", ratios[s].size()},
                         {"median", med},
                         {"q25", q25},
                         {"q75", q75}});
      } else {
        out << key.model << ',' << key.n << ',' << key.q << ',' << key.b << ','
            << specs[s].parameter << ',' << ratios[s].size() << ','
            << format_double(med) << ',' << format_double(q25) << ','
            << format_double(q75) << "\n";
      }
    }
  }
  if (as_json) out << jrows.dump(2) << "\n";
}

}  // namespace fcs
