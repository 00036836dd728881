#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dq/numeric.hpp"
#include "dq/partitions.hpp"

namespace dq::sl2 {

// Rank-1 weights are plain integers here; a partition xi = (xi_1 >= ... >=
// xi_l) stands for the fusion product of the irreducibles V(xi_s).

// Number of leading parts strictly greater than xi_{l-1} (0 when l <= 1).
int plateau_start(const Partition& xi);

// Removes the last column pair: (xi_1, ..., xi_{l-2}, xi_{l-1} - xi_l) with
// zero parts dropped; the empty partition when l <= 1.  |result| = |xi| - 2 xi_l.
Partition xi_minus(const Partition& xi);

// The partition sorted from (xi_1, ..., xi_{l-2}, xi_{l-1} + 1, xi_l - 1)
// with zero parts dropped; xi itself when l <= 1.  |result| = |xi|.
Partition xi_plus(const Partition& xi);

// Exponent vectors (i_1, ..., i_l) with, for all 2 <= k <= l+1 and
// 1 <= j <= k-1 (reading i_{l+1} = 0):
//
//   j*i_{k-1} + (j+1)*i_k + 2*sum_{p=k+1}^{l} i_p  <=  sum_{p=k-j}^{l} xi_p.
//
// Listed in ascending lexicographic order; the count is prod(xi_s + 1).
std::vector<std::vector<long long>> index_set(const Partition& xi);

bool index_set_member(const Partition& xi, const std::vector<long long>& i);

// The two halves of the index set of xi, assembled from the transforms:
// first the vectors of index_set(xi_minus) zero-padded to length l-1 with
// xi_l appended, then index_set(xi_plus) zero-padded to length l.  Requires
// l >= 2.  Their disjoint union recovers index_set(xi), split by whether
// i_l = xi_l or i_l < xi_l.
struct IndexSplit {
  std::vector<std::vector<long long>> at_max;
  std::vector<std::vector<long long>> below_max;
};

IndexSplit split_index_set(const Partition& xi);

// Finitely supported function of (weight, grade) with integer values.
class BigradedCharacter {
 public:
  void add(long long weight, long long grade, const Int& c);
  Int mass() const;
  const std::map<std::pair<long long, long long>, Int>& terms() const { return terms_; }

  // Translates every grade by r.
  BigradedCharacter shifted(long long r) const;
  // Sums out the grade, leaving weight -> multiplicity.
  std::map<long long, Int> specialize() const;

  BigradedCharacter& operator+=(const BigradedCharacter& o);
  bool operator==(const BigradedCharacter& o) const = default;

 private:
  std::map<std::pair<long long, long long>, Int> terms_;
};

// Sum over index_set(xi) of unit masses at weight |xi| - 2*sum_p i_p and
// grade sum_p (p-1)*i_p.
BigradedCharacter graded_character_basis(const Partition& xi);

// The same character by the recursion
//
//   ch(xi) = ch(xi_plus) + q^{(l-1) xi_l} ch(xi_minus),
//
// with base cases: empty -> unit mass at (0, 0); a single part (r) -> masses
// at (r - 2i, 0) for 0 <= i <= r.
BigradedCharacter graded_character_ses(const Partition& xi);

// prod_s (xi_s + 1).
Int fusion_dim(const Partition& xi);

// Coefficientwise product of the classical characters of the V(xi_s):
// weight -> multiplicity.
std::map<long long, Int> tensor_character(const Partition& xi);

}  // namespace dq::sl2
