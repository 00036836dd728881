#include "dq/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dq {

namespace {

// Renders a positive root as a sum of simple roots, e.g. "alpha_1 + 2 alpha_3".
std::string root_label(const RootSystem& rs, int a) {
  const Root& alpha = rs.root(a);
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < static_cast<int>(alpha.coords.size()); ++i) {
    int m = alpha.coords[i];
    if (m == 0) continue;
    if (!first) out << " + ";
    if (m != 1) out << m << " ";
    out << "alpha_" << (i + 1);
    first = false;
  }
  return out.str();
}

}  // namespace

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

long long Partition::size() const {
  long long total = 0;
  for (long long p : parts_) total += p;
  return total;
}

long long Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

long long Partition::tail_sum(int k) const {
  long long total = 0;
  for (int i = std::max(k, 1); i <= length(); ++i) total += parts_[i - 1];
  return total;
}

Shape classify_shape(const Partition& xi) {
  Shape shape;
  if (xi.empty()) return shape;
  long long k1 = xi.part(1);
  int s1 = 0;
  while (s1 < xi.length() && xi.parts()[s1] == k1) ++s1;
  if (s1 == xi.length()) {
    shape.kind = ShapeKind::Rectangular;
    shape.k1 = k1;
    shape.s1 = s1;
    return shape;
  }
  long long k2 = xi.parts()[s1];
  if (s1 == xi.length() - 1) {
    shape.kind = ShapeKind::SpecialFatHook;
    shape.k1 = k1;
    shape.s1 = s1;
    shape.k2 = k2;
    return shape;
  }
  shape.kind = ShapeKind::Other;
  return shape;
}

std::string shape_name(const Shape& shape) {
  std::ostringstream out;
  switch (shape.kind) {
    case ShapeKind::Empty:
      return "empty";
    case ShapeKind::Rectangular:
      out << "rectangular(" << shape.k1 << "^" << shape.s1 << ")";
      return out.str();
    case ShapeKind::SpecialFatHook:
      out << "special fat hook(" << shape.k1 << "^" << shape.s1 << "," << shape.k2 << ")";
      return out.str();
    case ShapeKind::Other:
      return "other";
  }
  return "other";
}

CompatibleTuple validate_tuple(const RootSystem& rs, const Weight& lambda,
                               std::vector<Partition> assignment) {
  if (lambda.rank() != rs.rank())
    throw std::invalid_argument("weight rank does not match the root system");
  if (!lambda.dominant())
    throw std::invalid_argument("the weight must be dominant");
  if (lambda.is_zero())
    throw std::invalid_argument("the weight must be nonzero");
  if (static_cast<int>(assignment.size()) != rs.num_positive_roots()) {
    std::ostringstream out;
    out << "expected one partition per positive root (" << rs.num_positive_roots()
        << "), got " << assignment.size();
    throw std::invalid_argument(out.str());
  }
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    long long expected = rs.eval_coroot(lambda, a);
    long long got = assignment[a].size();
    if (expected != got) {
      std::ostringstream out;
      out << "size mismatch at root " << root_label(rs, a) << ": expected "
          << expected << ", got " << got;
      throw std::invalid_argument(out.str());
    }
  }
  return CompatibleTuple{lambda, std::move(assignment)};
}

CompatibleTuple xi_of_level(const RootSystem& rs, long long level, const Weight& lambda) {
  if (level <= 0) throw std::invalid_argument("the level must be positive");
  std::vector<Partition> assignment;
  assignment.reserve(rs.num_positive_roots());
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    long long n = rs.eval_coroot(lambda, a);
    if (n == 0) {
      assignment.emplace_back();
      continue;
    }
    long long box = rs.root(a).d * level;
    long long rows = (n + box - 1) / box;
    long long last = n - (rows - 1) * box;
    std::vector<long long> parts(rows - 1, box);
    parts.push_back(last);
    assignment.emplace_back(std::move(parts));
  }
  return validate_tuple(rs, lambda, std::move(assignment));
}

}  // namespace dq
