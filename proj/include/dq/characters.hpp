#pragma once

#include <utility>
#include <vector>

#include "dq/laurent.hpp"
#include "dq/root_system.hpp"

namespace dq {

// Product over the positive roots of (lambda+rho, alpha)/(rho, alpha),
// evaluated exactly.  lambda must be dominant.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Character of the irreducible highest-weight module, computed by the
// multiplicity recursion on dominant weights and expanded over Weyl orbits.
LaurentCharacter irreducible_character(const RootSystem& rs, const Weight& lambda);

// The dominant Weyl-chamber representative of w.
Weight dominant_conjugate(const RootSystem& rs, Weight w);

// Full Weyl orbit of a dominant weight.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant);

// Memoized supplier of irreducible characters for one root system.  Plain
// value type: no global state, safe to discard at any point.
class CharacterContext {
 public:
  explicit CharacterContext(const RootSystem& rs) : rs_(&rs) {}
  const RootSystem& rs() const { return *rs_; }
  const LaurentCharacter& irreducible(const Weight& lambda);

 private:
  const RootSystem* rs_;
  std::map<Weight, LaurentCharacter> cache_;
};

// Multiplicities of irreducibles in chi, peeled from the leading dominant
// weight downward: at every step the surviving weight with the largest
// (weight, rho) pairing (lexicographically largest on ties) must be
// dominant, otherwise chi is not an integer combination of irreducible
// characters and std::domain_error is thrown.  Entries keep peel order and
// may carry negative multiplicities.
std::vector<std::pair<Weight, Int>> decompose_character(CharacterContext& ctx,
                                                        const LaurentCharacter& chi);
std::vector<std::pair<Weight, Int>> decompose_character(const RootSystem& rs,
                                                        const LaurentCharacter& chi);

}  // namespace dq
