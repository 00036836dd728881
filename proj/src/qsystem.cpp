#include "dq/qsystem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dq/characters.hpp"
#include "dq/numeric.hpp"

namespace dq {

namespace {

// Mutual recursion between nodes should resolve within a few thousand
// entries at the supported table sizes; beyond that the initial data is
// driving the indices apart rather than closing them.
constexpr long long kWorkCap = 20000;

std::string locate(int node, long long m) {
  std::ostringstream out;
  out << " at Q_" << m << "^(" << node + 1 << ")";
  return out.str();
}

struct ProgressGuard {
  std::set<std::pair<int, long long>>* set;
  std::pair<int, long long> key;
  ~ProgressGuard() { set->erase(key); }
};

}  // namespace

QSystemError::QSystemError(const std::string& what, int node, long long m)
    : std::runtime_error(what + locate(node, m)), node_(node), m_(m) {}

QSystemTable::QSystemTable(const RootSystem& rs, std::vector<LaurentCharacter> q1)
    : rs_(&rs), entries_(rs.rank()) {
  if (static_cast<int>(q1.size()) != rs.rank())
    throw std::invalid_argument("expected one initial character per node");
  for (int i = 0; i < rs.rank(); ++i) {
    if (q1[i].is_zero() || q1[i].rank() != rs.rank())
      throw std::invalid_argument("initial characters must be nonzero and match the rank");
    entries_[i].emplace(0, LaurentCharacter::unit(rs.rank()));
    entries_[i].emplace(1, std::move(q1[i]));
  }
}

const LaurentCharacter& QSystemTable::get(int node, long long m) {
  if (node < 0 || node >= rs_->rank()) throw std::invalid_argument("node out of range");
  if (m < 0) throw std::invalid_argument("the index m must be nonnegative");
  return compute(node, m);
}

const LaurentCharacter& QSystemTable::compute(int node, long long m) {
  auto hit = entries_[node].find(m);
  if (hit != entries_[node].end()) return hit->second;

  std::pair<int, long long> key{node, m};
  if (!in_progress_.insert(key).second)
    throw QSystemError("the recursion between nodes does not close", node, m);
  ProgressGuard guard{&in_progress_, key};

  if (++work_ > kWorkCap)
    throw QSystemError("recursion budget exceeded; the initial data drives the indices apart",
                       node, m);

  // Rearranged step from index m-1:  Q_m = (Q_{m-1}^2 - product) / Q_{m-2}.
  LaurentCharacter prev = compute(node, m - 1);
  LaurentCharacter numerator = prev * prev - neighbor_product(node, m - 1);
  const LaurentCharacter& below = compute(node, m - 2);
  if (below.is_zero())
    throw QSystemError("division by a zero entry", node, m);
  auto quotient = numerator.divide_exact(below);
  if (!quotient)
    throw QSystemError("initial data does not solve the recursion polynomially", node, m);
  return entries_[node].emplace(m, std::move(*quotient)).first->second;
}

LaurentCharacter QSystemTable::neighbor_product(int node, long long m) {
  if (m < 1) throw std::invalid_argument("the product term is defined for m >= 1");
  const auto& cartan = rs_->cartan();
  LaurentCharacter product = LaurentCharacter::unit(rs_->rank());
  for (int j : rs_->adjacent(node)) {
    long long cij = cartan[node][j];
    long long cji = cartan[j][node];
    // Rounding toward -infinity is forced: rounding up would make the short
    // node at index m demand the long node past m and back again, a cycle
    // (visible already for the triple bond), and it would contradict the
    // degenerate m = 0 product where every index must vanish.
    for (long long k = 0; k <= -cij - 1; ++k)
      product = product * compute(j, floor_div(m * cji - k, cij));
  }
  return product;
}

bool QSystemTable::recursion_holds(int node, long long m) {
  if (m < 1) throw std::invalid_argument("the recursion is checked for m >= 1");
  const LaurentCharacter& mid = get(node, m);
  LaurentCharacter lhs = mid * mid;
  LaurentCharacter rhs = get(node, m + 1) * get(node, m - 1) + neighbor_product(node, m);
  return lhs == rhs;
}

void QSystemTable::fill(long long m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  for (int i = 0; i < rs_->rank(); ++i)
    for (long long m = 2; m <= m_max; ++m) get(i, m);
}

std::vector<LaurentCharacter> type_a_initial(const RootSystem& rs) {
  if (rs.type().family != LieFamily::A)
    throw std::invalid_argument(
        "built-in initial data exists only for type A; other types need an initial-data file");
  std::vector<LaurentCharacter> q1;
  q1.reserve(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    q1.push_back(irreducible_character(rs, rs.fundamental(i)));
  return q1;
}

std::vector<LaurentCharacter> parse_initial_data(const RootSystem& rs,
                                                 const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("initial data is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("initial data must be a JSON object keyed by node index");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (int i = 1; i <= rs.rank(); ++i)
      if (it.key() == std::to_string(i)) known = true;
    if (!known)
      throw std::invalid_argument("initial data has an unexpected key \"" + it.key() + "\"");
  }

  CharacterContext ctx(rs);
  std::vector<LaurentCharacter> q1;
  q1.reserve(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) {
    std::string key = std::to_string(i);
    if (!doc.contains(key))
      throw std::invalid_argument("initial data is missing node " + key);
    const auto& list = doc[key];
    if (!list.is_array() || list.empty())
      throw std::invalid_argument("initial data for node " + key +
                                  " must be a nonempty list of [weight, multiplicity] pairs");
    LaurentCharacter sum(rs.rank());
    for (const auto& pair : list) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_array() ||
          !pair[1].is_number_integer())
        throw std::invalid_argument("initial data for node " + key +
                                    " must be a list of [weight, multiplicity] pairs");
      if (static_cast<int>(pair[0].size()) != rs.rank())
        throw std::invalid_argument("initial data for node " + key +
                                    " has a weight of the wrong rank");
      Weight w = Weight::zero(rs.rank());
      for (int c = 0; c < rs.rank(); ++c) {
        if (!pair[0][c].is_number_integer())
          throw std::invalid_argument("initial data for node " + key +
                                      " has a non-integer weight coordinate");
        w.coords[c] = pair[0][c].get<long long>();
      }
      if (!w.dominant())
        throw std::invalid_argument("initial data for node " + key +
                                    " names a non-dominant weight");
      long long mult = pair[1].get<long long>();
      if (mult <= 0)
        throw std::invalid_argument("initial data for node " + key +
                                    " has a non-positive multiplicity");
      sum += Int(mult) * ctx.irreducible(w);
    }
    q1.push_back(std::move(sum));
  }
  return q1;
}

std::vector<LaurentCharacter> load_initial_data(const RootSystem& rs,
                                                const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open initial-data file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_initial_data(rs, buffer.str());
}

KernelSpec kernel_spec(const RootSystem& rs, int node, long long m) {
  if (node < 0 || node >= rs.rank()) throw std::invalid_argument("node out of range");
  if (m < 1) throw std::invalid_argument("the level parameter m must be positive");
  KernelSpec spec;
  spec.node = node;
  spec.m = m;
  spec.lambda = Weight::zero(rs.rank());
  int di = rs.symmetrizers()[node];
  for (int j : rs.adjacent(node)) {
    int dj = rs.symmetrizers()[j];
    long long level = 0;
    int copies = 0;
    switch (di) {
      case 1:
        level = dj * m;
        copies = 1;
        break;
      case 2:
        // A short-short edge contributes one factor at 2m, a short-long edge
        // two factors at m.
        level = dj == 2 ? 2 * m : m;
        copies = dj == 2 ? 1 : 2;
        break;
      case 3:
        level = m;
        copies = 3;
        break;
      default:
        throw std::logic_error("symmetrizer outside 1..3");
    }
    for (int c = 0; c < copies; ++c) spec.factors.emplace_back(j, level);
    spec.lambda.coords[j] += level * copies;
  }
  return spec;
}

DimIdentityCheck verify_dimension_identity(QSystemTable& table, int node, long long m) {
  const RootSystem& rs = table.root_system();
  KernelSpec spec = kernel_spec(rs, node, m);
  DimIdentityCheck check;
  check.node = node;
  check.m = m;
  check.factors = spec.factors;
  LieFamily family = rs.type().family;
  check.experimental =
      family == LieFamily::E || family == LieFamily::F || family == LieFamily::G;

  long long center = rs.symmetrizers()[node] * m;
  Int base = table.get(node, center).mass();
  check.square = base * base;
  check.kernel_mass = 1;
  for (const auto& [j, level] : spec.factors)
    check.kernel_mass *= table.get(j, level).mass();
  check.shifted_mass = table.get(node, center + 1).mass() * table.get(node, center - 1).mass();
  check.ok = check.square == check.kernel_mass + check.shifted_mass;
  return check;
}

}  // namespace dq
