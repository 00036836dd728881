#include "dq/sl2_fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace dq::sl2 {

namespace {

Partition from_parts(std::vector<long long> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

// All constraints have nonnegative coefficients on the i_p, so a partial
// vector (unset entries still 0) that violates one cannot be completed.
bool satisfies_constraints(const Partition& xi, const std::vector<long long>& i) {
  int l = xi.length();
  std::vector<long long> isuffix(l + 2, 0);
  for (int p = l; p >= 1; --p) isuffix[p] = isuffix[p + 1] + i[p - 1];
  for (int k = 2; k <= l + 1; ++k) {
    long long ik1 = i[k - 2];
    long long ik = k <= l ? i[k - 1] : 0;
    long long rest = k + 1 <= l ? isuffix[k + 1] : 0;
    for (int j = 1; j <= k - 1; ++j) {
      if (j * ik1 + (j + 1) * ik + 2 * rest > xi.tail_sum(k - j)) return false;
    }
  }
  return true;
}

void descend(const Partition& xi, std::vector<long long>& i, int pos,
             std::vector<std::vector<long long>>& out) {
  int l = xi.length();
  if (pos == l) {
    out.push_back(i);
    return;
  }
  for (long long v = 0;; ++v) {
    i[pos] = v;
    if (!satisfies_constraints(xi, i)) break;
    descend(xi, i, pos + 1, out);
  }
  i[pos] = 0;
}

}  // namespace

int plateau_start(const Partition& xi) {
  int l = xi.length();
  if (l <= 1) return 0;
  long long pivot = xi.part(l - 1);
  int t = 0;
  while (t < l - 1 && xi.part(t + 1) > pivot) ++t;
  return t;
}

Partition xi_minus(const Partition& xi) {
  int l = xi.length();
  if (l <= 1) return Partition{};
  std::vector<long long> parts(xi.parts().begin(), xi.parts().end() - 2);
  parts.push_back(xi.part(l - 1) - xi.part(l));
  return from_parts(std::move(parts));
}

Partition xi_plus(const Partition& xi) {
  int l = xi.length();
  if (l <= 1) return xi;
  int t = plateau_start(xi);
  std::vector<long long> parts(xi.parts().begin(), xi.parts().begin() + t);
  parts.push_back(xi.part(l - 1) + 1);
  for (int c = 0; c < l - 2 - t; ++c) parts.push_back(xi.part(l - 1));
  parts.push_back(xi.part(l) - 1);
  return from_parts(std::move(parts));
}

bool index_set_member(const Partition& xi, const std::vector<long long>& i) {
  if (static_cast<int>(i.size()) != xi.length()) return false;
  for (long long v : i)
    if (v < 0) return false;
  return satisfies_constraints(xi, i);
}

std::vector<std::vector<long long>> index_set(const Partition& xi) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> i(xi.length(), 0);
  descend(xi, i, 0, out);
  return out;
}

IndexSplit split_index_set(const Partition& xi) {
  int l = xi.length();
  if (l < 2) throw std::invalid_argument("the split needs at least two parts");
  IndexSplit split;
  for (const auto& v : index_set(xi_minus(xi))) {
    std::vector<long long> padded(v);
    padded.resize(l - 1, 0);
    padded.push_back(xi.part(l));
    split.at_max.push_back(std::move(padded));
  }
  for (const auto& v : index_set(xi_plus(xi))) {
    std::vector<long long> padded(v);
    padded.resize(l, 0);
    split.below_max.push_back(std::move(padded));
  }
  return split;
}

void BigradedCharacter::add(long long weight, long long grade, const Int& c) {
  auto key = std::make_pair(weight, grade);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Int BigradedCharacter::mass() const {
  Int total = 0;
  for (const auto& [key, c] : terms_) total += c;
  return total;
}

BigradedCharacter BigradedCharacter::shifted(long long r) const {
  BigradedCharacter out;
  for (const auto& [key, c] : terms_) out.add(key.first, key.second + r, c);
  return out;
}

std::map<long long, Int> BigradedCharacter::specialize() const {
  std::map<long long, Int> out;
  for (const auto& [key, c] : terms_) {
    out[key.first] += c;
    if (out[key.first] == 0) out.erase(key.first);
  }
  return out;
}

BigradedCharacter& BigradedCharacter::operator+=(const BigradedCharacter& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

BigradedCharacter graded_character_basis(const Partition& xi) {
  BigradedCharacter out;
  long long size = xi.size();
  for (const auto& i : index_set(xi)) {
    long long weight = size;
    long long grade = 0;
    for (std::size_t p = 0; p < i.size(); ++p) {
      weight -= 2 * i[p];
      grade += static_cast<long long>(p) * i[p];
    }
    out.add(weight, grade, 1);
  }
  return out;
}

BigradedCharacter graded_character_ses(const Partition& xi) {
  std::map<Partition, BigradedCharacter> memo;
  // Local recursion; the cache lives per call so the function stays pure.
  auto rec = [&memo](auto&& self, const Partition& p) -> const BigradedCharacter& {
    auto hit = memo.find(p);
    if (hit != memo.end()) return hit->second;
    BigradedCharacter out;
    int l = p.length();
    if (l == 0) {
      out.add(0, 0, 1);
    } else if (l == 1) {
      for (long long i = 0; i <= p.part(1); ++i) out.add(p.part(1) - 2 * i, 0, 1);
    } else {
      out = self(self, xi_plus(p));
      out += self(self, xi_minus(p)).shifted((l - 1) * p.part(l));
    }
    return memo.emplace(p, std::move(out)).first->second;
  };
  return rec(rec, xi);
}

Int fusion_dim(const Partition& xi) {
  Int dim = 1;
  for (long long p : xi.parts()) dim *= p + 1;
  return dim;
}

std::map<long long, Int> tensor_character(const Partition& xi) {
  std::map<long long, Int> out{{0, 1}};
  for (long long part : xi.parts()) {
    std::map<long long, Int> next;
    for (const auto& [w, c] : out)
      for (long long i = 0; i <= part; ++i) next[w + part - 2 * i] += c;
    out = std::move(next);
  }
  return out;
}

}  // namespace dq::sl2
