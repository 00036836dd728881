#pragma once

#include <map>
#include <optional>

#include "dq/root_system.hpp"

namespace dq {

// Element of the group ring Z[P]: a finite sum of integer multiples of
// formal exponentials of weights.  Terms with coefficient zero are never
// stored.  Every operand of a binary operation must carry the same rank.
class LaurentCharacter {
 public:
  LaurentCharacter() = default;
  explicit LaurentCharacter(int rank) : rank_(rank) {}
  static LaurentCharacter unit(int rank);
  static LaurentCharacter monomial(const Weight& w, Int coeff = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Weight, Int>& terms() const { return terms_; }
  Int coeff(const Weight& w) const;
  // Sum of all coefficients: the dimension when this is a character.
  Int mass() const;

  void add_term(const Weight& w, const Int& c);

  LaurentCharacter& operator+=(const LaurentCharacter& o);
  LaurentCharacter& operator-=(const LaurentCharacter& o);
  friend LaurentCharacter operator+(LaurentCharacter a, const LaurentCharacter& b) { return a += b; }
  friend LaurentCharacter operator-(LaurentCharacter a, const LaurentCharacter& b) { return a -= b; }
  LaurentCharacter operator*(const LaurentCharacter& o) const;
  LaurentCharacter& operator*=(const Int& k);
  friend LaurentCharacter operator*(const Int& k, LaurentCharacter p) { return p *= k; }
  bool operator==(const LaurentCharacter& o) const = default;

  // Exact quotient in the Laurent ring, nullopt when this is not an integer
  // polynomial multiple of the divisor.  Division by zero is rejected.
  std::optional<LaurentCharacter> divide_exact(const LaurentCharacter& divisor) const;

 private:
  void check_rank(const LaurentCharacter& o) const;
  int rank_ = 0;
  std::map<Weight, Int> terms_;
};

}  // namespace dq
