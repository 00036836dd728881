#include "dq/laurent.hpp"

#include <algorithm>

namespace dq {

LaurentCharacter LaurentCharacter::unit(int rank) {
  LaurentCharacter p(rank);
  p.terms_[Weight::zero(rank)] = 1;
  return p;
}

LaurentCharacter LaurentCharacter::monomial(const Weight& w, Int coeff) {
  LaurentCharacter p(w.rank());
  if (coeff != 0) p.terms_[w] = std::move(coeff);
  return p;
}

Int LaurentCharacter::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentCharacter::mass() const {
  Int m = 0;
  for (const auto& [w, c] : terms_) m += c;
  return m;
}

void LaurentCharacter::add_term(const Weight& w, const Int& c) {
  if (w.rank() != rank_) throw std::invalid_argument("term rank does not match character rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentCharacter::check_rank(const LaurentCharacter& o) const {
  if (rank_ != o.rank_)
    throw std::invalid_argument("characters of different rank cannot be combined");
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& o) {
  check_rank(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

LaurentCharacter& LaurentCharacter::operator-=(const LaurentCharacter& o) {
  check_rank(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

LaurentCharacter LaurentCharacter::operator*(const LaurentCharacter& o) const {
  check_rank(o);
  LaurentCharacter out(rank_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) out.add_term(w1 + w2, c1 * c2);
  return out;
}

LaurentCharacter& LaurentCharacter::operator*=(const Int& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& [w, c] : terms_) c *= k;
  }
  return *this;
}

std::optional<LaurentCharacter> LaurentCharacter::divide_exact(const LaurentCharacter& divisor) const {
  check_rank(divisor);
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero character");
  if (is_zero()) return LaurentCharacter(rank_);

  // Shift both operands into nonnegative exponents and divide by leading
  // terms in lexicographic order.  When the quotient exists its exponents
  // stay nonnegative after the shift, so a leading monomial of the remainder
  // that is not componentwise divisible proves inexactness.
  auto mins = [&](const std::map<Weight, Int>& t) {
    std::vector<long long> m = t.begin()->first.coords;
    for (const auto& [w, c] : t)
      for (int i = 0; i < rank_; ++i) m[i] = std::min(m[i], w.coords[i]);
    return m;
  };
  std::vector<long long> a = mins(terms_), b = mins(divisor.terms_);

  std::map<std::vector<long long>, Int> rem, div;
  for (const auto& [w, c] : terms_) {
    auto e = w.coords;
    for (int i = 0; i < rank_; ++i) e[i] -= a[i];
    rem[std::move(e)] = c;
  }
  for (const auto& [w, c] : divisor.terms_) {
    auto e = w.coords;
    for (int i = 0; i < rank_; ++i) e[i] -= b[i];
    div[std::move(e)] = c;
  }
  const auto& lead_div = *div.rbegin();

  std::map<std::vector<long long>, Int> quot;
  while (!rem.empty()) {
    const auto& lead_rem = *rem.rbegin();
    std::vector<long long> e(rank_);
    for (int i = 0; i < rank_; ++i) {
      e[i] = lead_rem.first[i] - lead_div.first[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (lead_rem.second % lead_div.second != 0) return std::nullopt;
    Int c = lead_rem.second / lead_div.second;
    quot[e] += c;
    for (const auto& [de, dc] : div) {
      std::vector<long long> t(rank_);
      for (int i = 0; i < rank_; ++i) t[i] = e[i] + de[i];
      auto it = rem.emplace(std::move(t), 0).first;
      it->second -= c * dc;
      if (it->second == 0) rem.erase(it);
    }
  }

  LaurentCharacter out(rank_);
  for (auto& [e, c] : quot) {
    std::vector<long long> w(rank_);
    for (int i = 0; i < rank_; ++i) w[i] = e[i] + a[i] - b[i];
    out.terms_[Weight(std::move(w))] = std::move(c);
  }
  // The shift heuristic cannot misreport success, but verify regardless:
  // an accepted quotient must reproduce the dividend.
  if (out * divisor != *this) return std::nullopt;
  return out;
}

}  // namespace dq
