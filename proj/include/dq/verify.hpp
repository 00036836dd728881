#pragma once

#include <string>
#include <vector>

#include "dq/report.hpp"

namespace dq {

// Ranges for the verification sweeps.  The defaults are the supported
// envelope; clamped(B) scales every enumeration bound down to B for quick
// runs.  All randomness is seeded, so sweeps are deterministic.
struct SweepBounds {
  int split_rs = 8;          // r, s range for the split identity
  int split_k = 8;           // support cut for the split identity
  int rearrange_K = 5;       // threshold offsets for the rearrangement bounds
  int count_rs = 12;         // r, s range for the cardinality cross-check
  int pairing_draws = 20;    // random weights per type for root pairings
  long long pairing_coeff = 5;
  int qsystem_rank = 3;      // type A ranks for the closed-form check
  long long qsystem_mmax = 5;
  int dim_rank = 3;          // type A ranks for the mass identity
  long long dim_mmax = 4;
  long long sl2_dem_mmax = 10;  // rank-1 doubling check range
  int mult_rank = 3;         // type A ranks for multiplicativity
  long long mult_level = 3;
  long long mult_coord_sum = 6;
  long long sl2_size = 12;   // partition size bound for the rank-1 suite
  int xi_draws = 200;        // random draws for the canonical-tuple shapes
  long long xi_level = 3;
  long long xi_coeff = 6;
  unsigned seed = 20260817;

  SweepBounds clamped(long long max_size) const;
};

// The Lie types exercised by the random sweeps.
const std::vector<std::string>& sweep_types();

Report sweep_composition_calculus(const SweepBounds& bounds);
Report sweep_root_pairings(const SweepBounds& bounds);
Report sweep_type_a_qsystem(const SweepBounds& bounds);
Report sweep_dimension_identity(const SweepBounds& bounds);
Report sweep_sl2_demazure(const SweepBounds& bounds);
Report sweep_multiplicativity(const SweepBounds& bounds);
Report sweep_sl2_suite(const SweepBounds& bounds);
Report sweep_xi_shapes(const SweepBounds& bounds);

// Every sweep above, in a fixed order.
std::vector<Report> run_all_sweeps(const SweepBounds& bounds);

// All partitions with size at most max_size, in a fixed order; the empty
// partition included.
std::vector<std::vector<long long>> partitions_up_to(long long max_size);

}  // namespace dq
