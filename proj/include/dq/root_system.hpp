#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dq/numeric.hpp"

namespace dq {

enum class LieFamily : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

struct LieType {
  LieFamily family = LieFamily::A;
  int rank = 1;

  // Accepts "A1".."G2" (family letter followed by the rank).
  static LieType parse(std::string_view s);
  std::string name() const;
  friend bool operator==(const LieType&, const LieType&) = default;
};

// Integral weight written against the fundamental weights.  coords[i] is
// lambda(h_i), the value on the i-th simple coroot.
struct Weight {
  std::vector<long long> coords;

  Weight() = default;
  explicit Weight(std::vector<long long> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<long long>(rank, 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool dominant() const;
  long long coord_sum() const;

  auto operator<=>(const Weight&) const = default;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(long long k, Weight a);
};

// Positive root.  coords is the expansion against the simple roots; the two
// derived rows cache the pairings needed everywhere else:
//   fund_coords[i] = alpha(h_i)           (alpha written against the omega_i)
//   h_row[i]       = omega_i(h_alpha)     so lambda(h_alpha) = sum c_i h_row[i]
// d is 2/(alpha,alpha) with long roots normalized to squared length 2.
struct Root {
  std::vector<int> coords;
  std::vector<long long> fund_coords;
  std::vector<long long> h_row;
  int d = 1;
  int height = 1;
};

// Irreducible finite-type root system with the Cartan matrix convention
// C[i][j] = d_i (alpha_i, alpha_j) = alpha_j(h_i), Bourbaki node numbering.
class RootSystem {
 public:
  static RootSystem build(LieType t);
  static RootSystem build(std::string_view name) { return build(LieType::parse(name)); }

  const LieType& type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizers() const { return d_; }
  int lcm_symmetrizer() const { return lcm_d_; }

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(int a) const { return roots_.at(a); }
  int highest_root() const { return static_cast<int>(roots_.size()) - 1; }

  // Index of the positive root with the given simple-root coordinates, -1 if
  // there is none.
  int find_root(const std::vector<int>& simple_coords) const;

  Weight fundamental(int i) const;
  Weight zero_weight() const { return Weight::zero(rank_); }
  // alpha_j in the fundamental weight basis (column j of the Cartan matrix).
  Weight simple_root(int j) const;

  // lambda(h_alpha), always an integer for integral weights.
  long long eval_coroot(const Weight& w, const Root& alpha) const;
  long long eval_coroot(const Weight& w, int a) const { return eval_coroot(w, root(a)); }

  // (lambda, alpha) = lambda(h_alpha)/d_alpha.  Integral whenever each
  // coordinate c_i is a multiple of d_i; that is required of the caller.
  long long form_pairing(const Weight& w, const Root& alpha) const;
  long long form_pairing(const Weight& w, int a) const { return form_pairing(w, root(a)); }

  // All unordered pairs (b, c), b <= c, of positive-root indices with
  // alpha_b + alpha_c equal to the root at index a.
  std::vector<std::pair<int, int>> root_decompositions(int a) const;

  // Dynkin neighbors of node i: the j with C[i][j] < 0.
  std::vector<int> adjacent(int i) const;

  // Positive integer key ordering weights by the pairing (w, rho): the key is
  // sum_i c_i * rho_key()[i], a fixed positive rescaling of (w, rho).
  const std::vector<Int>& rho_key() const { return rho_key_; }
  Int rho_pairing_key(const Weight& w) const;

  // Coordinates of w against the simple roots: C^{-1} applied to w.
  std::vector<Rat> root_coords(const Weight& w) const;

 private:
  RootSystem() = default;
  void compute_symmetrizers();
  void generate_roots();
  void finish_roots();
  void compute_rho_key();
  void validate() const;

  LieType type_;
  int rank_ = 0;
  int lcm_d_ = 1;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<Root> roots_;
  std::vector<Int> rho_key_;
  std::vector<std::vector<Rat>> cinv_;     // inverse Cartan matrix
  std::map<std::vector<int>, int> index_;  // root coords -> index
};

void require_same_rank(const Weight& a, const Weight& b);

}  // namespace dq
