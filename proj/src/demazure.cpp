#include "dq/demazure.hpp"

#include <sstream>
#include <stdexcept>

#include "dq/qsystem.hpp"

namespace dq {

std::optional<GammaPoint> gamma_membership(const RootSystem& rs, long long level,
                                           const Weight& lambda, std::string* why) {
  if (level < 1) throw std::invalid_argument("the level must be positive");
  if (lambda.rank() != rs.rank())
    throw std::invalid_argument("weight rank does not match the root system");
  if (!lambda.dominant()) throw std::invalid_argument("the weight must be dominant");
  GammaPoint point;
  point.level = level;
  point.lambda = lambda;
  point.s.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    long long unit = level * rs.symmetrizers()[i];
    if (lambda.coords[i] % unit != 0) {
      if (why) {
        std::ostringstream out;
        out << "coordinate " << lambda.coords[i] << " at node " << i + 1
            << " is not divisible by level*d = " << unit;
        *why = out.str();
      }
      return std::nullopt;
    }
    point.s[i] = lambda.coords[i] / unit;
  }
  return point;
}

Int demazure_dim(const RootSystem& rs, long long level, const Weight& lambda,
                 const KrDim& kr_dim) {
  std::string why;
  auto point = gamma_membership(rs, level, lambda, &why);
  if (!point) throw std::invalid_argument("(level, weight) is not factorizable: " + why);
  Int dim = 1;
  for (int i = 0; i < rs.rank(); ++i) {
    if (point->s[i] == 0) continue;
    Int factor = kr_dim(i, rs.symmetrizers()[i] * level);
    for (long long c = 0; c < point->s[i]; ++c) dim *= factor;
  }
  return dim;
}

ProductCheck verify_multiplicativity(const RootSystem& rs, long long level,
                                     const Weight& lambda, const Weight& mu,
                                     const KrDim& kr_dim) {
  ProductCheck check;
  check.level = level;
  check.lambda = lambda;
  check.mu = mu;
  check.left = demazure_dim(rs, level, lambda, kr_dim);
  check.right = demazure_dim(rs, level, mu, kr_dim);
  check.combined = demazure_dim(rs, level, lambda + mu, kr_dim);
  check.ok = check.combined == check.left * check.right;
  return check;
}

SurjectionCheck fusion_surjection_check(const RootSystem& rs, long long level,
                                        const Weight& lambda,
                                        const std::vector<FusionFactor>& factors,
                                        const KrDim& kr_dim) {
  SurjectionCheck check;
  check.level = level;
  check.lambda = lambda;
  check.factors = factors;
  if (factors.empty()) throw std::invalid_argument("at least one factor is required");

  std::string why;
  if (!gamma_membership(rs, level, lambda, &why))
    throw std::invalid_argument("(level, weight) is not factorizable: " + why);
  Weight sum = Weight::zero(rs.rank());
  for (const auto& factor : factors) {
    if (!gamma_membership(rs, factor.level, factor.mu, &why))
      throw std::invalid_argument("a factor is not factorizable: " + why);
    sum += factor.mu;
  }
  if (sum != lambda) throw std::invalid_argument("the factor weights do not sum to the target");

  check.hypothesis_ok = true;
  for (int i = 0; i < rs.rank() && check.hypothesis_ok; ++i) {
    Rat left = rat_frac(lambda.coords[i], level);
    Rat right = 0;
    for (const auto& factor : factors) right += rat_frac(factor.mu.coords[i], factor.level);
    if (left < right) {
      check.hypothesis_ok = false;
      check.bad_node = i;
      std::ostringstream out;
      out << "hypothesis fails at node " << i + 1 << ": " << left << " < " << right;
      check.detail = out.str();
    }
  }

  check.equal_levels = true;
  for (const auto& factor : factors)
    if (factor.level != level) check.equal_levels = false;

  check.target_dim = demazure_dim(rs, level, lambda, kr_dim);
  check.factor_dim = 1;
  for (const auto& factor : factors)
    check.factor_dim *= demazure_dim(rs, factor.level, factor.mu, kr_dim);
  check.dims_ok = check.equal_levels ? check.target_dim == check.factor_dim
                                     : check.target_dim >= check.factor_dim;
  if (!check.dims_ok && check.detail.empty())
    check.detail = check.equal_levels ? "equal-level dimensions differ"
                                      : "target dimension is below the factor product";
  check.ok = check.hypothesis_ok && check.dims_ok;
  return check;
}

KrDim kr_dims_from_table(QSystemTable& table) {
  return [&table](int node, long long m) { return table.get(node, m).mass(); };
}

KrDim sl2_kr_dims() {
  return [](int, long long m) { return Int(m + 1); };
}

}  // namespace dq
