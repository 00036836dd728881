#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dq/laurent.hpp"
#include "dq/root_system.hpp"

namespace dq {

// Raised when the recursion cannot be carried out over the given initial
// data; node and m locate the entry being computed (node is 0-based here,
// 1-based in the message text).
class QSystemError : public std::runtime_error {
 public:
  QSystemError(const std::string& what, int node, long long m);
  int node() const { return node_; }
  long long m() const { return m_; }

 private:
  int node_;
  long long m_;
};

// The family Q_m^{(i)} of Laurent characters with Q_0^{(i)} = 1 and
//
//   Q_m^2 = Q_{m+1} Q_{m-1} + prod_{j~i} prod_{k=0}^{-C_ij-1}
//           Q^{(j)} at index ceil((m C_ji - k) / C_ij),
//
// where j~i means C_ij < 0 and the ceiling rounds toward +infinity.  Q_1 is
// initial data; entries are produced on demand by exact division and cached.
class QSystemTable {
 public:
  QSystemTable(const RootSystem& rs, std::vector<LaurentCharacter> q1);

  const RootSystem& root_system() const { return *rs_; }

  // Q_m^{(i)} for 0-based node i.  Throws QSystemError when a division is
  // inexact or the mutual recursion between nodes fails to close.
  const LaurentCharacter& get(int node, long long m);

  // The product term of the recursion at (node, m).
  LaurentCharacter neighbor_product(int node, long long m);

  // Q_m^2 - Q_{m+1} Q_{m-1} - neighbor_product == 0, computing entries as
  // needed.
  bool recursion_holds(int node, long long m);

  // Computes every Q_m^{(i)} with m <= m_max.
  void fill(long long m_max);

 private:
  const LaurentCharacter& compute(int node, long long m);

  const RootSystem* rs_;
  std::vector<std::map<long long, LaurentCharacter>> entries_;
  std::set<std::pair<int, long long>> in_progress_;
  long long work_ = 0;
};

// Q_1^{(i)} = ch V(omega_i) for every node.  Only type A has this built in;
// other types take initial data from a file.
std::vector<LaurentCharacter> type_a_initial(const RootSystem& rs);

// Initial data as JSON: {"1": [[[c_1,...,c_n], mult], ...], "2": ...} with
// one entry per node (keys are 1-based), defining Q_1^{(i)} as the sum of
// mult * ch V(weight) over the listed pairs.
std::vector<LaurentCharacter> parse_initial_data(const RootSystem& rs,
                                                 const std::string& json_text);
std::vector<LaurentCharacter> load_initial_data(const RootSystem& rs,
                                                const std::string& path);

// The tensor factors pairing off against Q at index d_i*m: each (j, level)
// entry stands for one KR(level * omega_j) factor, listed with multiplicity.
// lambda is the sum of level * omega_j over the factors.
struct KernelSpec {
  int node = 0;
  long long m = 0;
  std::vector<std::pair<int, long long>> factors;
  Weight lambda;
};

KernelSpec kernel_spec(const RootSystem& rs, int node, long long m);

// Mass bookkeeping for the short exact sequence at (node, m): checks
//
//   mass(Q_{d_i m})^2 = prod of factor masses + mass(Q_{d_i m + 1}) * mass(Q_{d_i m - 1})
//
// over the table's entries.  For families E, F, G the identity is not
// established and the result is flagged experimental instead of pass/fail.
struct DimIdentityCheck {
  int node = 0;
  long long m = 0;
  bool ok = false;
  bool experimental = false;
  Int square;
  Int kernel_mass;
  Int shifted_mass;
  std::vector<std::pair<int, long long>> factors;
};

DimIdentityCheck verify_dimension_identity(QSystemTable& table, int node, long long m);

}  // namespace dq
