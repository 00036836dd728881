#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dq/numeric.hpp"
#include "dq/root_system.hpp"

namespace dq {

// A pair (level, lambda) with lambda = level * sum_i d_i s_i omega_i for
// nonnegative integers s_i.
struct GammaPoint {
  long long level = 1;
  Weight lambda;
  std::vector<long long> s;
};

// Returns the s-vector when every coordinate of lambda is divisible by
// level * d_i; otherwise nullopt, with the offending node named in *why when
// given.  Requires level >= 1 and lambda dominant.
std::optional<GammaPoint> gamma_membership(const RootSystem& rs, long long level,
                                           const Weight& lambda,
                                           std::string* why = nullptr);

// Dimension of KR(m * omega_i), supplied by the caller.  The argument m is
// the literal label, not a level; see kr_dims_from_table and sl2_kr_dims.
using KrDim = std::function<Int(int node, long long m)>;

// prod_i kr_dim(i, d_i * level)^{s_i} for (level, lambda) with s-vector s.
// Throws when (level, lambda) fails gamma_membership.
Int demazure_dim(const RootSystem& rs, long long level, const Weight& lambda,
                 const KrDim& kr_dim);

// dim D(level, lambda + mu) against dim D(level, lambda) * dim D(level, mu).
struct ProductCheck {
  long long level = 1;
  Weight lambda, mu;
  Int combined, left, right;
  bool ok = false;
};

ProductCheck verify_multiplicativity(const RootSystem& rs, long long level,
                                     const Weight& lambda, const Weight& mu,
                                     const KrDim& kr_dim);

// One factor D(level, mu) of a fusion decomposition.
struct FusionFactor {
  long long level = 1;
  Weight mu;
};

// For lambda = sum mu_j with every pair in Gamma: checks the per-node
// hypothesis lambda(h_i)/level >= sum_j mu_j(h_i)/level_j, then compares
// dimensions (equality when all levels agree, >= otherwise).
struct SurjectionCheck {
  long long level = 1;
  Weight lambda;
  std::vector<FusionFactor> factors;
  bool hypothesis_ok = false;
  int bad_node = -1;
  bool equal_levels = false;
  Int target_dim, factor_dim;
  bool dims_ok = false;
  bool ok = false;
  std::string detail;
};

SurjectionCheck fusion_surjection_check(const RootSystem& rs, long long level,
                                        const Weight& lambda,
                                        const std::vector<FusionFactor>& factors,
                                        const KrDim& kr_dim);

class QSystemTable;

// KR dimensions read off a filled table: (i, m) -> mass of Q_m^{(i)}.  The
// table reference must outlive the callable.
KrDim kr_dims_from_table(QSystemTable& table);

// Rank-1 closed form: dim KR(m * omega) = m + 1.
KrDim sl2_kr_dims();

}  // namespace dq
