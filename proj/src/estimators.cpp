#include "fcs/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "fcs/format.hpp"

namespace fcs {

namespace {

// Brent's bounded scalar minimizer (golden section with parabolic steps).
double brent_minimize(double lo, double hi, double tol,
                      const std::function<double(double)>& f) {
  constexpr double golden = 0.3819660112501051;
  double a = lo, b = hi;
  double x = a + golden * (b - a);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0, e = 0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (a + b);
    double t1 = tol * std::abs(x) + tol * 1e-3;
    double t2 = 2 * t1;
    if (std::abs(x - mid) <= t2 - 0.5 * (b - a)) break;
    bool parabolic = false;
    if (std::abs(e) > t1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2 * (q - r);
      if (q > 0) p = -p;
      q = std::abs(q);
      double e_old = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        double u = x + d;
        if (u - a < t2 || b - u < t2) d = mid > x ? t1 : -t1;
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < mid ? b : a) - x;
      d = golden * e;
    }
    double u = std::abs(d) >= t1 ? x + d : x + (d > 0 ? t1 : -t1);
    double fu = f(u);
    if (fu <= fx) {
      if (u < x)
        b = x;
      else
        a = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return x;
}

constexpr double kIdentifiabilityFloor = 1e-12;

}  // namespace

FirstMomentEstimates first_moment_estimates(const Observables& obs, int budget,
                                            KwDenominator form) {
  if (budget < 1) raise(Errc::bad_config, "budget must be >= 1");
  if (obs.n0 < 1) raise(Errc::degenerate_sample, "no seeds in the sample");
  double b = budget;
  double bn0 = b * static_cast<double>(obs.n0);
  double named_out = bn0 - static_cast<double>(obs.m1w);
  if (named_out <= 0)
    raise(Errc::degenerate_sample,
          "every weak naming left the seed set (B n0 == m1w)");
  FirstMomentEstimates est;
  est.q_hat = named_out / bn0;
  est.n_hat = bn0 * static_cast<double>(obs.n0) / named_out;
  double denom = form == KwDenominator::consistent
                     ? 2.0 * (named_out - static_cast<double>(obs.m0w))
                     : 2.0 * named_out - static_cast<double>(obs.m0w);
  if (denom <= 0)
    raise(Errc::singular_denominator,
          "weak-degree denominator is not positive");
  est.kw_hat = b * named_out / denom;
  return est;
}

double estimate_strong_degree(const Observables& obs, double n_hat,
                              double q_hat) {
  if (!(q_hat > 0) || q_hat > 1)
    raise(Errc::bad_config, "q_hat must be in (0, 1]");
  if (!(n_hat > 0)) raise(Errc::bad_config, "n_hat must be positive");
  if (q_hat >= 1.0)
    return 2.0 * static_cast<double>(obs.m0s) / static_cast<double>(obs.n0);

  double m0s = static_cast<double>(obs.m0s);
  double m1s = static_cast<double>(obs.m1s);
  double n1s = static_cast<double>(obs.n1s);
  double a = 0.5 * q_hat * q_hat * n_hat;
  double c = q_hat * (1 - q_hat) * n_hat;
  double d = n_hat * (1 - q_hat);
  double log_keep = std::log1p(-q_hat);
  auto objective = [&](double ks) {
    double e0 = m0s - a * ks;
    double e1 = m1s - c * ks;
    double e2 = n1s - d * (1.0 - std::exp(ks * log_keep));
    return e0 * e0 + e1 * e1 + e2 * e2;
  };
  double hi = n_hat;
  double best = brent_minimize(0.0, hi, 1e-6, objective);
  // guard against a secondary basin: compare with the linear-term seed value
  double init = std::clamp(m1s / c, 0.0, hi);
  if (objective(init) < objective(best)) {
    double lo = std::max(0.0, 0.5 * init);
    double up = std::min(hi, 2.0 * init + 1.0);
    double refined = brent_minimize(lo, up, 1e-6, objective);
    if (objective(refined) < objective(best)) best = refined;
  }
  return best;
}

double CoefficientTables::rho_sum(int first, int last) const {
  double s = 0;
  for (int i = first; i <= last; ++i) s += rho[static_cast<std::size_t>(i - 1)];
  return s;
}

double CoefficientTables::pi_sum(int first, int last) const {
  double s = 0;
  for (int i = first; i <= last; ++i) s += pi[static_cast<std::size_t>(i - 1)];
  return s;
}

double CoefficientTables::phi_sum(int first, int last) const {
  double s = 0;
  for (int i = first; i <= last; ++i) s += phi[static_cast<std::size_t>(i - 1)];
  return s;
}

CoefficientTables coefficient_tables(double kw_hat, double q_hat, int budget) {
  if (budget < 1) raise(Errc::bad_config, "budget must be >= 1");
  if (!(q_hat >= 0) || q_hat > 1)
    raise(Errc::bad_config, "q_hat must be in [0, 1]");
  if (static_cast<double>(budget) > kw_hat)
    raise(Errc::invalid_regime,
          "budget " + std::to_string(budget) +
              " exceeds the weak-degree estimate " + format_double(kw_hat));
  if (kw_hat <= 1.0)
    raise(Errc::invalid_regime, "weak-degree estimate must exceed 1");

  CoefficientTables t;
  double kw = kw_hat;
  double b = budget;
  double pairs = kw * (kw - 1);
  t.b00 = (kw - b) * (kw - b - 1) / pairs;
  t.b01 = b * (kw - b) / pairs;
  t.b02 = b * (b - 1) / pairs;
  t.b11 = b / kw;
  t.b10 = 1.0 - t.b11;
  t.b20 = 1.0;
  t.a00 = 1.0 - b / kw;
  t.a01 = b / kw;
  t.a10 = 1.0;

  double q = q_hat;
  double o = 1.0 - q;
  double q2o = q * q * o;
  double q3 = q * q * q;
  double qo2 = q * o * o;
  auto R = [&](int i) -> double& { return t.rho[static_cast<std::size_t>(i - 1)]; };
  auto P = [&](int i) -> double& { return t.pi[static_cast<std::size_t>(i - 1)]; };
  auto F = [&](int i) -> double& { return t.phi[static_cast<std::size_t>(i - 1)]; };

  // triangle -> triangle
  R(1) = q3 * t.b20 * t.b20 * t.b20;
  R(2) = 3 * q2o * t.b20 * t.b20;
  R(3) = 2 * q3 * t.b20 * t.b11 * t.b10;
  R(4) = q3 * t.b20 * t.b11 * t.b11;
  R(5) = 2 * q2o * t.b20 * t.b11;
  R(6) = 2 * q2o * t.b11 * t.b10;
  R(7) = q2o * t.b11 * t.b11;
  R(8) = 2 * q3 * t.b02 * t.b10 * t.b11;
  R(9) = 2 * q3 * t.b01 * t.b11 * t.b11;
  R(10) = q3 * t.b02 * t.b11 * t.b11;
  R(11) = q3 * t.b00 * t.b11 * t.b11;
  R(12) = 2 * q3 * t.b01 * t.b11 * t.b10;
  R(13) = q3 * t.b02 * t.b10 * t.b10;
  R(14) = q2o * t.b11 * t.b11;
  R(15) = 2 * q2o * t.b01 * t.b11;
  R(16) = 2 * q2o * t.b02 * t.b10;
  R(17) = 2 * q2o * t.b02 * t.b11;
  R(18) = 6 * q2o * t.b02 * t.b01;
  R(19) = 3 * q2o * t.b02 * t.b02;
  R(20) = 6 * q3 * t.b00 * t.b01 * t.b02;
  R(21) = 3 * q3 * t.b00 * t.b02 * t.b02;
  R(22) = 2 * q3 * t.b01 * t.b01 * t.b01;
  R(23) = 6 * q3 * t.b01 * t.b01 * t.b02;
  R(24) = 3 * q3 * t.b01 * t.b01 * t.b02;
  R(25) = 3 * q3 * t.b01 * t.b02 * t.b02;
  R(26) = q3 * t.b02 * t.b02 * t.b02;

  // triangle -> open triad
  P(1) = q3 * t.b20 * t.b10 * t.b10;
  P(2) = q2o * t.b10 * t.b10;
  P(3) = qo2 * t.b20;
  P(4) = 2 * q2o * t.b20 * t.b10;
  P(5) = q2o * t.b10 * t.b01;
  P(6) = qo2 * t.b11;
  P(7) = q2o * t.b11 * t.b10;
  P(8) = q2o * t.b11 * t.b00;
  P(9) = q2o * t.b10 * t.b01;
  P(10) = q2o * t.b11 * t.b01;
  P(11) = q3 * t.b10 * t.b11 * t.b00;
  P(12) = q3 * t.b10 * t.b10 * t.b01;
  P(13) = q3 * t.b10 * t.b11 * t.b01;
  P(14) = qo2 * t.b02;
  P(15) = q2o * t.b01 * t.b01;
  P(16) = 2 * q2o * t.b01 * t.b01;
  P(17) = 2 * q2o * t.b00 * t.b02;
  P(18) = 2 * q2o * t.b02 * t.b01;
  P(19) = 2 * q3 * t.b01 * t.b01 * t.b00;
  P(20) = q3 * t.b00 * t.b01 * t.b01;
  P(21) = 2 * q3 * t.b01 * t.b01 * t.b01;
  P(22) = q3 * t.b02 * t.b00 * t.b00;
  P(23) = 2 * q3 * t.b02 * t.b00 * t.b01;
  P(24) = q3 * t.b02 * t.b01 * t.b01;

  // open triad -> open triad
  F(1) = q3 * t.b20 * t.a10 * t.a10;
  F(2) = q2o * t.a10 * t.a10;
  F(3) = qo2 * t.b20;
  F(4) = 2 * q2o * t.b20 * t.a10;
  F(5) = q2o * t.a10 * t.a01;
  F(6) = qo2 * t.b11;
  F(7) = q2o * t.b11 * t.a10;
  F(8) = q2o * t.b11 * t.a00;
  F(9) = q2o * t.b10 * t.a01;
  F(10) = q2o * t.b11 * t.a01;
  F(11) = q3 * t.b11 * t.a10 * t.a00;
  F(12) = q3 * t.b10 * t.a10 * t.a01;
  F(13) = q3 * t.b11 * t.a10 * t.a01;
  F(14) = qo2 * t.b02;
  F(15) = q2o * t.a01 * t.a01;
  F(16) = 2 * q2o * t.b01 * t.a01;
  F(17) = 2 * q2o * t.b02 * t.a00;
  F(18) = 2 * q2o * t.b02 * t.a01;
  F(19) = 2 * q3 * t.b01 * t.a01 * t.a00;
  F(20) = q3 * t.b00 * t.a01 * t.a01;
  F(21) = 2 * q3 * t.b01 * t.a01 * t.a01;
  F(22) = q3 * t.b02 * t.a00 * t.a00;
  F(23) = 2 * q3 * t.b02 * t.a00 * t.a01;
  F(24) = q3 * t.b02 * t.a01 * t.a01;

  return t;
}

TriangleEstimates estimate_triangles(const MotifCensus& observed,
                                     const CoefficientTables& tables) {
  struct Range {
    const char* name;
    int first, last;
    Count observed_count;
  };
  const Range ranges[] = {
      {"t_s3", 1, 2, observed.t_s3},
      {"t_s2w", 3, 7, observed.t_s2w},
      {"t_sw2", 8, 17, observed.t_sw2},
      {"t_w3", 18, 26, observed.t_w3},
  };
  double out[4];
  for (int i = 0; i < 4; ++i) {
    double p = tables.rho_sum(ranges[i].first, ranges[i].last);
    if (p <= kIdentifiabilityFloor)
      raise(Errc::unidentifiable,
            std::string(ranges[i].name) +
                ": observation probability vanishes at this q_hat");
    out[i] = static_cast<double>(ranges[i].observed_count) / p;
  }
  return {out[0], out[1], out[2], out[3]};
}

OpenTriadEstimates estimate_open_triads(const MotifCensus& observed,
                                        const TriangleEstimates& triangles,
                                        const CoefficientTables& tables,
                                        bool clamp_negative,
                                        std::vector<std::string>* warnings) {
  double phi_ss = tables.phi_sum(1, 4);
  double phi_sw = tables.phi_sum(5, 13);
  double phi_ww = tables.phi_sum(14, 24);
  for (auto [name, p] : {std::pair{"lam_ss", phi_ss}, std::pair{"lam_sw", phi_sw},
                         std::pair{"lam_ww", phi_ww}}) {
    if (p <= kIdentifiabilityFloor)
      raise(Errc::unidentifiable,
            std::string(name) + ": preservation probability vanishes");
  }
  double pi3 = tables.pi[2];
  double pi6 = tables.pi[5];
  double pi14 = tables.pi[13];

  OpenTriadEstimates est;
  est.l_ss = (static_cast<double>(observed.l_ss) - 3.0 * triangles.t_s3 * pi3 -
              triangles.t_s2w * tables.pi_sum(1, 4)) /
             phi_ss;
  est.l_sw = (static_cast<double>(observed.l_sw) - 2.0 * triangles.t_s2w * pi6 -
              2.0 * triangles.t_sw2 * tables.pi_sum(5, 13)) /
             phi_sw;
  est.l_ww = (static_cast<double>(observed.l_ww) - triangles.t_sw2 * pi14 -
              3.0 * triangles.t_w3 * tables.pi_sum(14, 24)) /
             phi_ww;

  for (auto [name, value] : {std::pair{"lam_ss", &est.l_ss},
                             std::pair{"lam_sw", &est.l_sw},
                             std::pair{"lam_ww", &est.l_ww}}) {
    if (*value < 0) {
      if (warnings)
        warnings->push_back(std::string(name) + " clamped to 0 (was " +
                            format_double(*value) + ")");
      if (clamp_negative) *value = 0;
    }
  }
  return est;
}

TriadTotalEstimates total_triads(const OpenTriadEstimates& lambda,
                                 const TriangleEstimates& triangles) {
  TriadTotalEstimates tau;
  tau.tau_ss = lambda.l_ss + 3.0 * triangles.t_s3 + triangles.t_s2w;
  tau.tau_sw = lambda.l_sw + 2.0 * triangles.t_s2w + 2.0 * triangles.t_sw2;
  tau.tau_ww = lambda.l_ww + 3.0 * triangles.t_w3 + triangles.t_sw2;
  return tau;
}

SecondMomentEstimates second_moments(const TriadTotalEstimates& tau,
                                     double n_hat, double ks_hat,
                                     double kw_hat) {
  if (!(n_hat > 0)) raise(Errc::bad_config, "n_hat must be positive");
  SecondMomentEstimates est;
  est.kss_hat = 2.0 * tau.tau_ss / n_hat + ks_hat;
  est.ksw_hat = tau.tau_sw / n_hat;
  est.kww_hat = 2.0 * tau.tau_ww / n_hat + kw_hat;
  return est;
}

double estimated_clustering(const TriangleEstimates& triangles,
                            const TriadTotalEstimates& tau,
                            std::vector<std::string>* warnings) {
  double denom = tau.total();
  if (!(denom > 0)) raise(Errc::no_triads, "estimated triad total is not positive");
  double cc = 3.0 * triangles.total() / denom;
  if (cc < 0 || cc > 1) {
    double clamped = std::clamp(cc, 0.0, 1.0);
    if (warnings)
      warnings->push_back("cc_hat clamped to " + format_double(clamped) +
                          " (was " + format_double(cc) + ")");
    cc = clamped;
  }
  return cc;
}

CrudeEstimates crude_estimates(const ObservedNetwork& obs) {
  // degrees over the observed node set, taken at face value
  std::unordered_map<NodeId, std::pair<Count, Count>> degree;  // strong, weak
  for (NodeId s : obs.seeds()) degree.try_emplace(s, 0, 0);
  for (const auto& l : obs.links()) {
    auto& du = degree.try_emplace(l.u, 0, 0).first->second;
    auto& dv = degree.try_emplace(l.v, 0, 0).first->second;
    if (l.layer == Layer::strong) {
      ++du.first;
      ++dv.first;
    } else {
      ++du.second;
      ++dv.second;
    }
  }
  CrudeEstimates crude;
  double n = static_cast<double>(degree.size());
  if (n == 0) raise(Errc::empty_graph, "observed network has no nodes");
  for (const auto& [node, d] : degree) {
    double ks = static_cast<double>(d.first);
    double kw = static_cast<double>(d.second);
    crude.moments.k_s += ks;
    crude.moments.k_w += kw;
    crude.moments.k_ss += ks * ks;
    crude.moments.k_ww += kw * kw;
    crude.moments.k_sw += ks * kw;
  }
  crude.moments.k_s /= n;
  crude.moments.k_w /= n;
  crude.moments.k_ss /= n;
  crude.moments.k_ww /= n;
  crude.moments.k_sw /= n;
  crude.cc = global_clustering(collapse(obs.as_two_layer_graph()));
  return crude;
}

const std::vector<std::string>& EstimateReport::csv_header() {
  static const std::vector<std::string> header = {
      "N_hat",  "q_hat",  "Ks_hat", "Kw_hat", "Kss_hat", "Ksw_hat", "Kww_hat",
      "T_s3",   "T_s2w",  "T_sw2",  "T_w3",   "lam_ss",  "lam_sw",  "lam_ww",
      "tau_ss", "tau_sw", "tau_ww", "cc_hat", "cc_crude", "warnings"};
  return header;
}

std::vector<std::string> EstimateReport::csv_fields() const {
  std::vector<std::string> f;
  for (double x : {n_hat, q_hat, ks_hat, kw_hat, kss_hat, ksw_hat, kww_hat,
                   t_s3, t_s2w, t_sw2, t_w3, lam_ss, lam_sw, lam_ww, tau_ss,
                   tau_sw, tau_ww, cc_hat, cc_crude})
    f.push_back(format_double(x));
  std::string joined;
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    if (i) joined += ";";
    joined += warnings[i];
  }
  f.push_back(joined);
  return f;
}

nlohmann::json EstimateReport::to_json() const {
  nlohmann::json j;
  const auto& header = csv_header();
  const double values[] = {n_hat, q_hat, ks_hat, kw_hat, kss_hat, ksw_hat,
                           kww_hat, t_s3, t_s2w, t_sw2, t_w3, lam_ss, lam_sw,
                           lam_ww, tau_ss, tau_sw, tau_ww, cc_hat, cc_crude};
  for (std::size_t i = 0; i < std::size(values); ++i) j[header[i]] = values[i];
  j["warnings"] = warnings;
  return j;
}

EstimateReport full_pipeline(const ObservedNetwork& obs, int budget,
                             const PipelineOptions& options) {
  auto staged = [](const char* stage, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      raise(e.code(), std::string(stage) + ": " + e.what());
    }
  };

  EstimateReport report;
  Observables o = obs.observables();
  FirstMomentEstimates fm = staged("first_moments", [&] {
    return first_moment_estimates(o, budget, options.kw_denominator);
  });
  report.n_hat = fm.n_hat;
  report.q_hat = fm.q_hat;
  report.kw_hat = fm.kw_hat;
  report.ks_hat = staged("strong_degree", [&] {
    return estimate_strong_degree(o, fm.n_hat, fm.q_hat);
  });
  CoefficientTables tables = staged("coefficient_tables", [&] {
    return coefficient_tables(fm.kw_hat, fm.q_hat, budget);
  });
  MotifCensus observed = staged("observed_census", [&] {
    return motif_census(obs.as_two_layer_graph());
  });
  TriangleEstimates tri = staged("triangle_estimates", [&] {
    return estimate_triangles(observed, tables);
  });
  OpenTriadEstimates lam = staged("open_triad_estimates", [&] {
    return estimate_open_triads(observed, tri, tables,
                                options.clamp_negative_counts,
                                &report.warnings);
  });
  report.t_s3 = tri.t_s3;
  report.t_s2w = tri.t_s2w;
  report.t_sw2 = tri.t_sw2;
  report.t_w3 = tri.t_w3;
  report.lam_ss = lam.l_ss;
  report.lam_sw = lam.l_sw;
  report.lam_ww = lam.l_ww;
  TriadTotalEstimates tau = total_triads(lam, tri);
  report.tau_ss = tau.tau_ss;
  report.tau_sw = tau.tau_sw;
  report.tau_ww = tau.tau_ww;
  SecondMomentEstimates sm = staged("second_moments", [&] {
    return second_moments(tau, fm.n_hat, report.ks_hat, fm.kw_hat);
  });
  report.kss_hat = sm.kss_hat;
  report.ksw_hat = sm.ksw_hat;
  report.kww_hat = sm.kww_hat;
  report.cc_hat = staged("clustering", [&] {
    return estimated_clustering(tri, tau, &report.warnings);
  });
  report.cc_crude =
      staged("crude", [&] { return crude_estimates(obs).cc; });
  return report;
}

}  // namespace fcs
