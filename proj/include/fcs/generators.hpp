#pragma once

#include <cstdint>
#include <utility>

#include "fcs/graph.hpp"
#include "fcs/rng.hpp"

namespace fcs {

enum class GeneratorModel { modified_ws, holme_kim, ba, rrt };

const char* model_name(GeneratorModel m);
GeneratorModel model_from_name(const std::string& name);

/// Parameters for the synthetic network generators. Mean-degree targets are
/// drawn uniformly from the configured ranges at generation time.
struct GeneratorConfig {
  GeneratorModel model = GeneratorModel::modified_ws;
  Count node_count = 4000;
  std::pair<double, double> strong_mean_degree_range{10.0, 20.0};
  std::pair<double, double> weak_mean_degree_range{100.0, 200.0};
  /// Fraction of the target mean degree supplied by random shortcut edges
  /// instead of the ring lattice (small-world models).
  double shortcut_fraction = 0.2;
  /// Links added per arriving node (ba, holme_kim, rrt). rrt with 1 gives a
  /// random recursive tree; larger values give uniform attachment graphs.
  int attachment_count = 5;
  /// Probability of the triad-formation step in holme_kim.
  double triad_probability = 0.5;
  /// Post-generation weak degree floor; nodes below it receive extra random
  /// weak links so that a fixed-choice budget up to this value is feasible.
  Count min_weak_degree = 10;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// Two-layer small-world network: each layer is a ring lattice plus random
/// shortcut edges. Weak candidates that collide with an existing strong link
/// are discarded and resampled, keeping the layers exclusive. Requires
/// model == modified_ws.
TwoLayerGraph generate_two_layer(const GeneratorConfig& config, Rng& rng);

/// Single-layer generator for any of the four models. The small-world model
/// draws its mean-degree target from weak_mean_degree_range.
Graph generate_single_layer(const GeneratorConfig& config, Rng& rng);

}  // namespace fcs
