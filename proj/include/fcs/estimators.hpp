#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcs/census.hpp"
#include "fcs/sampler.hpp"

namespace fcs {

/// Which denominator the closed-form weak-degree estimator uses.
/// `consistent` (the default) inverts the model expectation of the
/// seed-to-seed weak link count exactly:
///     Kw_hat = B(B n0 - m1w) / (2 (B n0 - m1w - m0w)).
/// `alternate` keeps the m0w term unhalved:
///     Kw_hat = B(B n0 - m1w) / (2 B n0 - 2 m1w - m0w).
enum class KwDenominator { consistent, alternate };

struct FirstMomentEstimates {
  double n_hat = 0;   // network size
  double q_hat = 0;   // sampling probability
  double kw_hat = 0;  // mean weak degree
};

/// Closed-form inversion of the seed count and the weak link counts.
/// Throws degenerate_sample when B n0 == m1w (q_hat would be zero) and
/// singular_denominator when the weak-degree denominator is not positive.
FirstMomentEstimates first_moment_estimates(
    const Observables& obs, int budget,
    KwDenominator form = KwDenominator::consistent);

/// Mean strong degree by least squares over the three strong-tie
/// observables, solved with bounded scalar minimization on [0, n_hat]
/// (argument tolerance 1e-6). At q_hat == 1 the closed form 2 m0s / n0 is
/// exact and used directly.
double estimate_strong_degree(const Observables& obs, double n_hat,
                              double q_hat);

/// Per-seed naming outcome probabilities and the derived motif observation
/// probabilities, all functions of (q, K_w, B) with individual weak degrees
/// approximated by the mean.
///
/// b_ij: a seed incident to two motif links names i of its strong and j of
/// its weak incident links. a_ij: the same for a seed incident to one motif
/// link. rho: a triangle survives as a triangle in the sample. pi: a
/// triangle degrades to an open triad. phi: an open triad is preserved.
/// Index ranges by motif composition: rho 1-2 / 3-7 / 8-17 / 18-26 for
/// s3 / s2w / sw2 / w3 triangles; pi and phi 1-4 / 5-13 / 14-24 for
/// ss / sw / ww triads.
struct CoefficientTables {
  double b00 = 0, b01 = 0, b02 = 0, b10 = 0, b11 = 0, b20 = 1;
  double a00 = 0, a01 = 0, a10 = 1;
  std::array<double, 26> rho{};
  std::array<double, 24> pi{};
  std::array<double, 24> phi{};

  double rho_sum(int first, int last) const;  // 1-based inclusive
  double pi_sum(int first, int last) const;
  double phi_sum(int first, int last) const;
};

/// Evaluates the tables at (kw_hat, q_hat, budget). Requires
/// budget <= kw_hat and kw_hat > 1 (invalid_regime otherwise) and
/// q_hat in [0, 1].
CoefficientTables coefficient_tables(double kw_hat, double q_hat, int budget);

struct TriangleEstimates {
  double t_s3 = 0, t_s2w = 0, t_sw2 = 0, t_w3 = 0;
  double total() const { return t_s3 + t_s2w + t_sw2 + t_w3; }
};

struct OpenTriadEstimates {
  double l_ss = 0, l_sw = 0, l_ww = 0;
};

struct TriadTotalEstimates {
  double tau_ss = 0, tau_sw = 0, tau_ww = 0;
  double total() const { return tau_ss + tau_sw + tau_ww; }
};

struct SecondMomentEstimates {
  double kss_hat = 0, ksw_hat = 0, kww_hat = 0;
};

/// Inverts the observed triangle counts. Throws unidentifiable when a
/// composition's observation probability sums below 1e-12.
TriangleEstimates estimate_triangles(const MotifCensus& observed,
                                     const CoefficientTables& tables);

/// Inverts the observed open-triad counts given triangle estimates.
/// Negative results are clamped to zero with a warning when clamp_negative
/// is set (they stay negative otherwise; the warning is recorded either
/// way).
OpenTriadEstimates estimate_open_triads(const MotifCensus& observed,
                                        const TriangleEstimates& triangles,
                                        const CoefficientTables& tables,
                                        bool clamp_negative,
                                        std::vector<std::string>* warnings);

/// tau = lambda + the closed-triad contributions of each triangle type.
TriadTotalEstimates total_triads(const OpenTriadEstimates& lambda,
                                 const TriangleEstimates& triangles);

/// Second moments from triad totals: Kss = 2 tau_ss / N + Ks,
/// Ksw = tau_sw / N, Kww = 2 tau_ww / N + Kw.
SecondMomentEstimates second_moments(const TriadTotalEstimates& tau,
                                     double n_hat, double ks_hat,
                                     double kw_hat);

/// Clustering coefficient of the collapsed network from estimated counts:
/// 3 * (total triangles) / (total triads), clamped to [0, 1] with a
/// warning. Throws no_triads when the denominator is not positive.
double estimated_clustering(const TriangleEstimates& triangles,
                            const TriadTotalEstimates& tau,
                            std::vector<std::string>* warnings);

/// Statistics of the observed network taken at face value, with no
/// correction for the sampling design.
struct CrudeEstimates {
  double cc = 0;
  DegreeMoments moments;
};

CrudeEstimates crude_estimates(const ObservedNetwork& obs);

struct PipelineOptions {
  KwDenominator kw_denominator = KwDenominator::consistent;
  bool clamp_negative_counts = true;
};

/// Everything the pipeline produces, serializable as a flat JSON object or
/// one CSV row (fixed column order, see csv_header()).
struct EstimateReport {
  double n_hat = 0, q_hat = 0;
  double ks_hat = 0, kw_hat = 0;
  double kss_hat = 0, ksw_hat = 0, kww_hat = 0;
  double t_s3 = 0, t_s2w = 0, t_sw2 = 0, t_w3 = 0;
  double lam_ss = 0, lam_sw = 0, lam_ww = 0;
  double tau_ss = 0, tau_sw = 0, tau_ww = 0;
  double cc_hat = 0;
  double cc_crude = 0;
  std::vector<std::string> warnings;

  static const std::vector<std::string>& csv_header();
  std::vector<std::string> csv_fields() const;
  nlohmann::json to_json() const;
};

/// Runs the whole inference pipeline on one observed network: first moments,
/// strong degree, coefficient tables, observed census, triangle and triad
/// inversion, triad totals, second moments, clustering, crude baselines.
/// Stage failures are rethrown with the stage name prefixed.
EstimateReport full_pipeline(const ObservedNetwork& obs, int budget,
                             const PipelineOptions& options = {});

}  // namespace fcs
