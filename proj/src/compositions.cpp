#include "dq/compositions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dq {

namespace {

void check_args(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("r and s must be nonnegative");
}

// Fills elements with every vector b of length s+1 whose support lies in
// [lo, hi), with sum b_p = r and sum p*b_p = s, in lexicographic order.
void descend(std::vector<int>& b, int pos, int r_left, int s_left, int lo, int hi,
             std::vector<std::vector<int>>& out) {
  int s = static_cast<int>(b.size()) - 1;
  if (pos > s) {
    if (r_left == 0 && s_left == 0) out.push_back(b);
    return;
  }
  if (pos < lo || pos >= hi) {
    descend(b, pos + 1, r_left, s_left, lo, hi, out);
    return;
  }
  int max_b = r_left;
  if (pos > 0) max_b = std::min(max_b, s_left / pos);
  for (int v = 0; v <= max_b; ++v) {
    b[pos] = v;
    int r2 = r_left - v;
    int s2 = s_left - pos * v;
    // Remaining positions are pos+1..min(hi,s+1)-1; they can absorb at most
    // r2 * (end-1) and at least r2 * (pos+1) of the index-weighted sum.
    int end = std::min(hi, s + 1);
    bool feasible;
    if (r2 == 0) {
      feasible = (s2 == 0);
    } else if (pos + 1 >= end) {
      feasible = false;
    } else {
      feasible = s2 >= static_cast<long long>(r2) * (pos + 1) &&
                 s2 <= static_cast<long long>(r2) * (end - 1);
    }
    if (feasible || (r2 == 0 && s2 == 0)) descend(b, pos + 1, r2, s2, lo, hi, out);
    b[pos] = 0;
  }
}

CompositionSet enumerate_range(int r, int s, int lo, int hi) {
  check_args(r, s);
  CompositionSet set;
  set.r = r;
  set.s = s;
  std::vector<int> b(s + 1, 0);
  // Position 0 carries no index weight, so when it is in range it absorbs
  // whatever count is left; handle it inside the same descent.
  descend(b, 0, r, s, lo, hi, set.elements);
  return set;
}

}  // namespace

bool CompositionSet::contains(const std::vector<int>& b) const {
  return std::binary_search(elements.begin(), elements.end(), b);
}

CompositionSet enumerate_S(int r, int s) { return enumerate_range(r, s, 0, s + 1); }

CompositionSet enumerate_S_below(int r, int s, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  return enumerate_range(r, s, 0, std::min(k, s + 1));
}

CompositionSet enumerate_S_above(int r, int s, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  return enumerate_range(r, s, std::min(k, s + 1), s + 1);
}

SplitCheck verify_split_identity(int r, int s, int k) {
  check_args(r, s);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  SplitCheck check;
  check.r = r;
  check.s = s;
  check.k = k;

  CompositionSet whole = enumerate_S(r, s);
  check.total = whole.elements.size();

  std::map<std::vector<int>, int> seen;
  auto put = [&](const std::vector<int>& b) {
    if (++seen[b] > 1 && check.counterexample.empty()) {
      check.counterexample = b;
      check.detail = "element assembled twice";
    }
    ++check.assembled;
  };

  for (const auto& b : enumerate_S_above(r, s, k).elements) put(b);

  for (int r2 = 0; r2 < r; ++r2) {      // r2 plays r', strictly below r
    for (int s2 = 0; s2 <= s; ++s2) {
      CompositionSet prefix = enumerate_S_below(r - r2, s - s2, k);
      if (prefix.elements.empty()) continue;
      CompositionSet suffix = enumerate_S_above(r2, s2, k);
      if (suffix.elements.empty()) continue;
      for (const auto& a : prefix.elements) {
        for (const auto& c : suffix.elements) {
          std::vector<int> glue(s + 1, 0);
          for (int p = 0; p < std::min<int>(k, static_cast<int>(a.size())); ++p) glue[p] = a[p];
          for (int p = k; p < static_cast<int>(c.size()); ++p) glue[p] = c[p];
          put(glue);
        }
      }
    }
  }

  if (check.counterexample.empty()) {
    for (const auto& b : whole.elements) {
      if (seen.find(b) == seen.end()) {
        check.counterexample = b;
        check.detail = "element never assembled";
        break;
      }
    }
  }
  check.ok = check.counterexample.empty() && check.assembled == check.total;
  if (!check.ok && check.detail.empty()) check.detail = "assembled count differs";
  return check;
}

RearrangeCheck verify_rearrange_constraint(int r, int s, int k, int K) {
  check_args(r, s);
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (K < 0) throw std::invalid_argument("K must be nonnegative");
  RearrangeCheck check;
  check.r = r;
  check.s = s;
  check.k = k;
  check.K = K;
  if (static_cast<long long>(s) + r < static_cast<long long>(k) * r + K)
    throw std::invalid_argument("threshold hypothesis s+r >= k*r+K does not hold");

  check.ok = true;
  for (int r2 = 0; r2 < r && check.ok; ++r2) {
    for (int s2 = 0; s2 <= s && check.ok; ++s2) {
      if (enumerate_S_below(r - r2, s - s2, k).elements.empty()) continue;
      if (enumerate_S_above(r2, s2, k).elements.empty()) continue;
      ++check.cases;
      if (s - s2 > static_cast<long long>(k - 1) * (r - r2)) {
        check.ok = false;
        check.bad_r = r2;
        check.bad_s = s2;
        check.detail = "prefix weight exceeds (k-1)(r-r')";
      } else if (static_cast<long long>(s2) + r2 < static_cast<long long>(k) * r2 + K) {
        check.ok = false;
        check.bad_r = r2;
        check.bad_s = s2;
        check.detail = "suffix fails the threshold s'+r' >= k*r'+K";
      }
    }
  }
  return check;
}

Int count_partitions_bounded(int s, int max_parts) {
  if (s < 0 || max_parts < 0) throw std::invalid_argument("arguments must be nonnegative");
  // Partitions of s into at most m parts equal partitions of s into parts
  // of size at most m.
  std::vector<Int> table(s + 1, 0);
  table[0] = 1;
  for (int part = 1; part <= max_parts; ++part)
    for (int total = part; total <= s; ++total) table[total] += table[total - part];
  return table[s];
}

}  // namespace dq
