#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcs/graph.hpp"
#include "fcs/rng.hpp"

namespace fcs {

enum class InsufficientWeakPolicy { error, report_all };

struct SamplingConfig {
  double q = 0.1;   // per-node Bernoulli seed probability
  int budget = 10;  // weak ties named per respondent (B)
  std::uint64_t rng_seed = 0;
  InsufficientWeakPolicy insufficient_weak_policy = InsufficientWeakPolicy::error;

  void validate() const;
};

/// The seven scalar survey statistics.
struct Observables {
  Count n0 = 0;   // seeds
  Count n1s = 0;  // distinct non-seed strong alters
  Count n1w = 0;  // distinct non-seed weak alters
  Count m0s = 0;  // strong links between seeds
  Count m1s = 0;  // strong links between a seed and a non-seed
  Count m0w = 0;  // weak links between seeds (counted once even if named twice)
  Count m1w = 0;  // weak links between a seed and a non-seed
};

/// One observed link with its naming directions. Canonical order u < v.
/// named_by_u means u reported v in its interview.
struct NamedLink {
  NodeId u = 0;
  NodeId v = 0;
  Layer layer = Layer::strong;
  bool named_by_u = false;
  bool named_by_v = false;
};

/// The sampled network: seeds plus every link some seed reported, with the
/// naming directions kept so that respondents can be removed exactly.
/// Immutable after construction.
class ObservedNetwork {
 public:
  /// Validates, canonicalizes and derives the alter sets. Every link must
  /// have a nonempty naming set and at least one seed endpoint.
  static ObservedNetwork from_parts(Count source_node_count, int budget,
                                    std::vector<NodeId> seeds,
                                    std::vector<NamedLink> links);

  Count source_node_count() const { return source_node_count_; }
  int budget() const { return budget_; }
  const std::vector<NodeId>& seeds() const { return seeds_; }
  const std::vector<NamedLink>& links() const { return links_; }
  const std::vector<NodeId>& strong_alters() const { return strong_alters_; }
  const std::vector<NodeId>& weak_alters() const { return weak_alters_; }
  bool is_seed(NodeId x) const;

  Observables observables() const;

  /// Leaves one respondent out: removes r from the seeds and deletes every
  /// naming event r made. Links still named from the other side survive with
  /// r reclassified as a non-seed alter. Throws not_a_seed.
  ObservedNetwork remove_respondent(NodeId r) const;

  /// The observed network as an undirected typed graph (naming directions
  /// dropped), e.g. for motif censuses.
  TwoLayerGraph as_two_layer_graph() const;

 private:
  ObservedNetwork() = default;

  Count source_node_count_ = 0;
  int budget_ = 0;
  std::vector<NodeId> seeds_;       // sorted
  std::vector<NamedLink> links_;    // sorted by (u, v, layer)
  std::vector<NodeId> strong_alters_;
  std::vector<NodeId> weak_alters_;
};

/// Simulates one fixed-choice survey: each node becomes a seed independently
/// with probability q; seeds report all strong neighbors and a uniformly
/// random subset of `budget` weak neighbors. Throws degenerate_sample when no
/// seed is drawn and insufficient_weak_ties under the error policy when some
/// node has fewer than `budget` weak ties.
ObservedNetwork conduct_survey(const TwoLayerGraph& g,
                               const SamplingConfig& config, Rng& rng);

// --- survey interchange format -------------------------------------------
//
// {"B": 10, "respondents": [{"id": 3, "strong": [1, 5], "weak": [2, 9]}]}
//
// Each respondent lists the ids it named. Strong namings between two
// respondents are recorded in both directions even when only one side
// declares them.

nlohmann::json survey_to_json(const ObservedNetwork& obs);
ObservedNetwork survey_from_json(const nlohmann::json& doc);
ObservedNetwork load_survey_file(const std::string& path);
void save_survey_file(const ObservedNetwork& obs, const std::string& path);

}  // namespace fcs
