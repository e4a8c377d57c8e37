#pragma once

#include "fcs/graph.hpp"

namespace fcs {

/// Triangle counts keyed by link-type composition (number of weak links in
/// the triple) and open-triad counts keyed by the two ego-incident link
/// types. An open triad is an ego with two neighbors that have no link of
/// either type between them.
struct MotifCensus {
  Count t_s3 = 0;   // triangles with three strong links
  Count t_s2w = 0;  // two strong, one weak
  Count t_sw2 = 0;  // one strong, two weak
  Count t_w3 = 0;   // three weak
  Count l_ss = 0;   // open triads: both ego links strong
  Count l_sw = 0;   // one strong, one weak
  Count l_ww = 0;   // both weak

  Count triangle_total() const { return t_s3 + t_s2w + t_sw2 + t_w3; }
};

/// Exact triad totals from the degree sequences:
///   tau_ss = sum_i C(k_i^s, 2), tau_sw = sum_i k_i^s k_i^w,
///   tau_ww = sum_i C(k_i^w, 2).
struct TriadTotals {
  Count tau_ss = 0;
  Count tau_sw = 0;
  Count tau_ww = 0;
};

struct TriangleCounts {
  Count t_s3 = 0, t_s2w = 0, t_sw2 = 0, t_w3 = 0;
};

struct OpenTriadCounts {
  Count l_ss = 0, l_sw = 0, l_ww = 0;
};

// Parallel kernels (OpenMP over ego/source nodes; integer reductions, so the
// result is independent of the partitioning).
TriangleCounts triangle_census(const TwoLayerGraph& g);
OpenTriadCounts open_triad_census(const TwoLayerGraph& g);

// Serial reference implementations using hash-set membership instead of
// sorted intersection; kept for testing and benchmarking the kernels.
TriangleCounts triangle_census_serial(const TwoLayerGraph& g);
OpenTriadCounts open_triad_census_serial(const TwoLayerGraph& g);

TriadTotals triad_totals_from_degrees(const TwoLayerGraph& g);

/// Runs both parallel kernels over one shared collapsed view.
MotifCensus motif_census(const TwoLayerGraph& g);

}  // namespace fcs
