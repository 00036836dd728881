#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dq/root_system.hpp"

namespace dq {

// Weakly decreasing list of positive integers.  The empty partition is legal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);

  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;

  // 1-based part access; indices past the length read as 0.
  long long part(int i) const;
  // Sum of the parts with 1-based index >= k.
  long long tail_sum(int k) const;

  const std::vector<long long>& parts() const { return parts_; }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<long long> parts_;
};

enum class ShapeKind { Empty, Rectangular, SpecialFatHook, Other };

// Rectangular: parts = (k1^s1).  SpecialFatHook: parts = (k1^s1, k2) with
// k1 > k2 >= 1, the shorter row occurring exactly once.
struct Shape {
  ShapeKind kind = ShapeKind::Empty;
  long long k1 = 0;
  long long s1 = 0;
  long long k2 = 0;
};

Shape classify_shape(const Partition& xi);
std::string shape_name(const Shape& shape);

// One partition per positive root, indexed like RootSystem::positive_roots(),
// with |assignment[a]| = lambda(h_alpha) for the root alpha at index a.
struct CompatibleTuple {
  Weight lambda;
  std::vector<Partition> by_root;
};

// Checks the size condition for every positive root and returns the tuple;
// throws std::invalid_argument naming the first violating root otherwise.
CompatibleTuple validate_tuple(const RootSystem& rs, const Weight& lambda,
                               std::vector<Partition> assignment);

// The canonical tuple at a given level: writing lambda(h_alpha) =
// (s-1)*d_alpha*level + m with 0 < m <= d_alpha*level, the component at alpha
// is ((d_alpha*level)^(s-1), m).  Every component is Empty, Rectangular, or a
// SpecialFatHook.
CompatibleTuple xi_of_level(const RootSystem& rs, long long level, const Weight& lambda);

}  // namespace dq
