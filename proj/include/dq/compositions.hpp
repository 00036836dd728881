#pragma once

#include <string>
#include <vector>

#include "dq/numeric.hpp"

namespace dq {

// The sets S(r,s): vectors b = (b_0, ..., b_s) of nonnegative integers with
// sum b_p = r and sum p*b_p = s.  Elements are dense vectors of length s+1
// listed in ascending lexicographic order.
struct CompositionSet {
  int r = 0, s = 0;
  std::vector<std::vector<int>> elements;

  bool contains(const std::vector<int>& b) const;
};

CompositionSet enumerate_S(int r, int s);
// Subset with b_p = 0 for all p >= k.
CompositionSet enumerate_S_below(int r, int s, int k);
// Subset with b_p = 0 for all p < k.
CompositionSet enumerate_S_above(int r, int s, int k);

// Checks that S(r,s) is the disjoint union of the suffix-supported part
// _kS(r,s) and the glued products S(r-r',s-s')_k x _kS(r',s') over all
// r' < r, s' <= s with both factors nonempty.
struct SplitCheck {
  int r = 0, s = 0, k = 0;
  bool ok = false;
  std::size_t total = 0;      // |S(r,s)|
  std::size_t assembled = 0;  // elements produced by the right-hand side
  std::vector<int> counterexample;  // first element missed or duplicated
  std::string detail;
};
SplitCheck verify_split_identity(int r, int s, int k);

// Checks, for every glued piece with nonempty prefix in the split above,
// the bounds s-s' <= (k-1)(r-r') and s'+r' >= k*r'+K.  Requires k >= 1 and
// the threshold hypothesis s+r >= k*r+K.
struct RearrangeCheck {
  int r = 0, s = 0, k = 0, K = 0;
  bool ok = false;
  long long cases = 0;  // admissible (r', s') pairs inspected
  int bad_r = -1, bad_s = -1;
  std::string detail;
};
RearrangeCheck verify_rearrange_constraint(int r, int s, int k, int K);

// Number of partitions of s into at most max_parts parts, by the bounded
// partition recurrence.  Independent of the enumerations above.
Int count_partitions_bounded(int s, int max_parts);

}  // namespace dq
