#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcs {

enum class Errc {
  self_loop,
  layer_conflict,
  empty_graph,
  no_triads,
  infeasible_target,
  insufficient_weak_ties,
  degenerate_sample,
  not_a_seed,
  too_few_seeds,
  singular_denominator,
  invalid_regime,
  unidentifiable,
  parse_error,
  io_error,
  bad_config,
};

std::string_view errc_name(Errc code);

/// Exception carrying a machine-readable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::self_loop: return "self_loop";
    case Errc::layer_conflict: return "layer_conflict";
    case Errc::empty_graph: return "empty_graph";
    case Errc::no_triads: return "no_triads";
    case Errc::infeasible_target: return "infeasible_target";
    case Errc::insufficient_weak_ties: return "insufficient_weak_ties";
    case Errc::degenerate_sample: return "degenerate_sample";
    case Errc::not_a_seed: return "not_a_seed";
    case Errc::too_few_seeds: return "too_few_seeds";
    case Errc::singular_denominator: return "singular_denominator";
    case Errc::invalid_regime: return "invalid_regime";
    case Errc::unidentifiable: return "unidentifiable";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
    case Errc::bad_config: return "bad_config";
  }
  return "unknown";
}

}  // namespace fcs
