#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fcs/generators.hpp"
#include "fcs/jackknife.hpp"

using namespace fcs;

namespace {

ObservedNetwork sample_network(Count n, double q, int b, std::uint64_t seed) {
  Rng grng(seed);
  GeneratorConfig cfg;
  cfg.node_count = n;
  cfg.strong_mean_degree_range = {6, 9};
  cfg.weak_mean_degree_range = {20, 28};
  cfg.min_weak_degree = b;
  TwoLayerGraph g = generate_two_layer(cfg, grng);
  SamplingConfig sc;
  sc.q = q;
  sc.budget = b;
  Rng srng(derive_seed(seed, 1));
  return conduct_survey(g, sc, srng);
}

}  // namespace

TEST_CASE("variance formula on hand values") {
  // two leave-one-out estimates {1, 3}: mean 2, variance (1/2)*(1+1) = 1
  JackknifeResult r;
  r.leave_one_out = {1.0, 3.0};
  double mean = 2.0;
  double ssq = 0;
  for (double x : r.leave_one_out) ssq += (x - mean) * (x - mean);
  double variance = (2.0 - 1.0) / 2.0 * ssq;
  CHECK(variance == doctest::Approx(1.0));
}

TEST_CASE("identical leave-one-out estimates give zero variance") {
  // fully symmetric sample: every reduced sample looks the same
  ObservedNetwork obs = ObservedNetwork::from_parts(4, 1, {0, 1, 2, 3}, {});
  JackknifeOutcome out = jackknife(obs, 1);
  const JackknifeResult& n = out.find("N");
  CHECK(n.leave_one_out.size() == 4);
  CHECK(n.variance == 0.0);
  CHECK(out.find("K_w").variance == 0.0);
}

TEST_CASE("aggregation matches the formula exactly") {
  ObservedNetwork obs = sample_network(150, 0.35, 4, 99);
  JackknifeOutcome out = jackknife(obs, 4);
  for (const auto& r : out.results) {
    std::size_t m = r.leave_one_out.size();
    REQUIRE(m >= 2);
    double mean = 0;
    for (double x : r.leave_one_out) mean += x;
    mean /= static_cast<double>(m);
    double ssq = 0;
    for (double x : r.leave_one_out) ssq += (x - mean) * (x - mean);
    double variance = (static_cast<double>(m) - 1.0) / static_cast<double>(m) * ssq;
    CHECK(r.mean == doctest::Approx(mean).epsilon(1e-12));
    CHECK(r.variance == doctest::Approx(variance).epsilon(1e-10));
    CHECK(r.variance >= 0.0);
  }
}

TEST_CASE("leave-one-out values equal direct recomputation") {
  // parameters chosen so the weak-degree denominator has a wide margin and
  // no subsample gets excluded
  ObservedNetwork obs = sample_network(300, 0.4, 6, 123);
  JackknifeOutcome out = jackknife(obs, 6);
  const JackknifeResult& n = out.find("N");
  REQUIRE(n.leave_one_out.size() == obs.seeds().size());
  // spot-check a few respondents against a from-scratch recomputation
  for (std::size_t idx : {std::size_t{0}, obs.seeds().size() / 2,
                          obs.seeds().size() - 1}) {
    ObservedNetwork reduced = obs.remove_respondent(obs.seeds()[idx]);
    FirstMomentEstimates fm =
        first_moment_estimates(reduced.observables(), 6);
    CHECK(n.leave_one_out[idx] == doctest::Approx(fm.n_hat).epsilon(1e-12));
  }
}

TEST_CASE("too few seeds") {
  ObservedNetwork obs = ObservedNetwork::from_parts(3, 1, {0}, {});
  try {
    jackknife(obs, 1);
    FAIL("expected too_few_seeds");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_few_seeds);
  }
}

TEST_CASE("second-moment resampling produces the extra parameters") {
  ObservedNetwork obs = sample_network(150, 0.45, 4, 7);
  JackknifeOptions opts;
  opts.second_moments = true;
  JackknifeOutcome out = jackknife(obs, 4, opts);
  CHECK(out.results.size() == 7);
  const JackknifeResult& kss = out.find("K_ss");
  // second-moment estimates can drop out of individual subsamples, but the
  // bulk of them must be retained
  CHECK(kss.leave_one_out.size() >= 4 * obs.seeds().size() / 5);
  CHECK(std::isfinite(kss.variance));
}

TEST_CASE("failed subsamples are excluded, not fatal") {
  // two seeds: removing either leaves a single-seed sample whose weak naming
  // all stays inside the seed set, which degenerates the closed form
  std::vector<NamedLink> links = {{0, 1, Layer::weak, true, true}};
  ObservedNetwork obs = ObservedNetwork::from_parts(2, 1, {0, 1}, links);
  JackknifeOutcome out = jackknife(obs, 1);
  CHECK(out.failed_respondents.size() == 2);
  CHECK(!out.warnings.empty());
  CHECK(out.find("N").leave_one_out.empty());
}
