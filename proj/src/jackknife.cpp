#include "fcs/jackknife.hpp"

#include <cmath>
#include <limits>

namespace fcs {

double JackknifeResult::sd() const { return std::sqrt(variance); }

const JackknifeResult& JackknifeOutcome::find(const std::string& parameter) const {
  for (const auto& r : results)
    if (r.parameter == parameter) return r;
  raise(Errc::bad_config, "no jackknife result for '" + parameter + "'");
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ParamValues {
  double n = kNaN, q = kNaN, ks = kNaN, kw = kNaN;
  double kss = kNaN, ksw = kNaN, kww = kNaN;
};

ParamValues evaluate(const ObservedNetwork& obs, int budget,
                     const JackknifeOptions& options) {
  ParamValues v;
  Observables o = obs.observables();
  FirstMomentEstimates fm;
  try {
    fm = first_moment_estimates(o, budget, options.kw_denominator);
  } catch (const Error& e) {
    if (e.code() != Errc::singular_denominator) throw;
    // the weak-degree denominator collapsed; size and rate stay defined
    double bn0 = static_cast<double>(budget) * static_cast<double>(o.n0);
    double named_out = bn0 - static_cast<double>(o.m1w);
    fm.q_hat = named_out / bn0;
    fm.n_hat = bn0 * static_cast<double>(o.n0) / named_out;
    fm.kw_hat = kNaN;
  }
  v.n = fm.n_hat;
  v.q = fm.q_hat;
  v.kw = fm.kw_hat;
  v.ks = estimate_strong_degree(o, fm.n_hat, fm.q_hat);
  if (options.second_moments && !std::isnan(fm.kw_hat)) {
    try {
      CoefficientTables tables = coefficient_tables(fm.kw_hat, fm.q_hat, budget);
      MotifCensus observed = motif_census(obs.as_two_layer_graph());
      TriangleEstimates tri = estimate_triangles(observed, tables);
      OpenTriadEstimates lam =
          estimate_open_triads(observed, tri, tables, true, nullptr);
      SecondMomentEstimates sm =
          second_moments(total_triads(lam, tri), fm.n_hat, v.ks, fm.kw_hat);
      v.kss = sm.kss_hat;
      v.ksw = sm.ksw_hat;
      v.kww = sm.kww_hat;
    } catch (const Error& e) {
      if (e.code() != Errc::invalid_regime && e.code() != Errc::unidentifiable)
        throw;
      // census-based moments unavailable at this subsample, leave them out
    }
  }
  return v;
}

JackknifeResult aggregate(const std::string& name, double full,
                          const std::vector<double>& values) {
  JackknifeResult r;
  r.parameter = name;
  r.full_estimate = full;
  for (double x : values)
    if (!std::isnan(x)) r.leave_one_out.push_back(x);
  std::size_t m = r.leave_one_out.size();
  if (m == 0) {
    r.mean = kNaN;
    r.variance = kNaN;
    return r;
  }
  double sum = 0;
  for (double x : r.leave_one_out) sum += x;
  r.mean = sum / static_cast<double>(m);
  double ssq = 0;
  for (double x : r.leave_one_out) ssq += (x - r.mean) * (x - r.mean);
  r.variance = (static_cast<double>(m) - 1.0) / static_cast<double>(m) * ssq;
  return r;
}

}  // namespace

JackknifeOutcome jackknife(const ObservedNetwork& obs, int budget,
                           const JackknifeOptions& options) {
  const auto& seeds = obs.seeds();
  auto n0 = static_cast<std::int64_t>(seeds.size());
  if (n0 < 2)
    raise(Errc::too_few_seeds, "jackknife needs at least two respondents");

  ParamValues full = evaluate(obs, budget, options);

  std::vector<ParamValues> values(static_cast<std::size_t>(n0));
  std::vector<std::string> failures(static_cast<std::size_t>(n0));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n0; ++i) {
    try {
      ObservedNetwork reduced =
          obs.remove_respondent(seeds[static_cast<std::size_t>(i)]);
      values[static_cast<std::size_t>(i)] = evaluate(reduced, budget, options);
    } catch (const Error& e) {
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  }

  JackknifeOutcome out;
  for (std::int64_t i = 0; i < n0; ++i) {
    if (!failures[static_cast<std::size_t>(i)].empty()) {
      NodeId r = seeds[static_cast<std::size_t>(i)];
      out.failed_respondents.push_back(r);
      out.warnings.push_back("respondent " + std::to_string(r) +
                             " excluded: " + failures[static_cast<std::size_t>(i)]);
    }
  }

  std::int64_t whole_failures =
      static_cast<std::int64_t>(out.failed_respondents.size());
  auto collect = [&](const std::string& name, double ParamValues::*field) {
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(n0));
    for (std::int64_t i = 0; i < n0; ++i) {
      if (failures[static_cast<std::size_t>(i)].empty())
        vals.push_back(values[static_cast<std::size_t>(i)].*field);
      else
        vals.push_back(kNaN);
    }
    out.results.push_back(aggregate(name, full.*field, vals));
    std::int64_t retained =
        static_cast<std::int64_t>(out.results.back().leave_one_out.size());
    if (retained < n0 - whole_failures)
      out.warnings.push_back(
          name + ": " + std::to_string(n0 - whole_failures - retained) +
          " additional subsample(s) had no defined estimate");
  };
  collect("N", &ParamValues::n);
  collect("q", &ParamValues::q);
  collect("K_s", &ParamValues::ks);
  collect("K_w", &ParamValues::kw);
  if (options.second_moments) {
    collect("K_ss", &ParamValues::kss);
    collect("K_sw", &ParamValues::ksw);
    collect("K_ww", &ParamValues::kww);
  }
  return out;
}

}  // namespace fcs
