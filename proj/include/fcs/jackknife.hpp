#pragma once

#include <string>
#include <vector>

#include "fcs/estimators.hpp"
#include "fcs/sampler.hpp"

namespace fcs {

/// Leave-one-respondent-out summary for one estimated parameter.
/// variance = ((m - 1) / m) * sum_i (h_i - h_bar)^2 over the m retained
/// leave-one-out estimates h_i.
struct JackknifeResult {
  std::string parameter;
  double full_estimate = 0;  // estimate on the complete sample
  double mean = 0;           // mean of the leave-one-out estimates
  double variance = 0;
  std::vector<double> leave_one_out;

  double sd() const;
};

struct JackknifeOptions {
  KwDenominator kw_denominator = KwDenominator::consistent;
  /// Also resample the second moments (runs the census-based stages for
  /// every leave-one-out subsample; considerably more expensive).
  bool second_moments = false;
};

struct JackknifeOutcome {
  std::vector<JackknifeResult> results;
  /// Respondents whose leave-one-out estimate failed a stage; they are
  /// excluded from the aggregation (with the divisor reduced accordingly).
  std::vector<NodeId> failed_respondents;
  std::vector<std::string> warnings;

  const JackknifeResult& find(const std::string& parameter) const;
};

/// Recomputes the selected estimators on every physically reduced sample
/// (remove_respondent per seed). Default parameter set {N, q, K_s, K_w};
/// with second_moments also {K_ss, K_sw, K_ww}. Throws too_few_seeds when
/// the sample has fewer than two respondents. The leave-one-out loop runs
/// in parallel; the aggregation is order-free.
JackknifeOutcome jackknife(const ObservedNetwork& obs, int budget,
                           const JackknifeOptions& options = {});

}  // namespace fcs
