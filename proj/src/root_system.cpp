#include "dq/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace dq {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int expected_root_count(LieType t) {
  int n = t.rank;
  switch (t.family) {
    case LieFamily::A: return n * (n + 1) / 2;
    case LieFamily::B:
    case LieFamily::C: return n * n;
    case LieFamily::D: return n * (n - 1);
    case LieFamily::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case LieFamily::F: return 24;
    case LieFamily::G: return 6;
  }
  fail("unknown family");
}

std::vector<std::vector<int>> cartan_matrix(LieType t) {
  int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case LieFamily::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case LieFamily::B:
      if (n < 2) fail("type B requires rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -1;  // alpha_n is the short node
      c[n - 1][n - 2] = -2;
      break;
    case LieFamily::C:
      if (n < 2) fail("type C requires rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n is the long node
      c[n - 1][n - 2] = -1;
      break;
    case LieFamily::D:
      if (n < 3) fail("type D requires rank >= 3");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case LieFamily::E: {
      if (n < 6 || n > 8) fail("type E requires rank 6, 7 or 8");
      // Bourbaki numbering: node 2 hangs off node 4 of the chain 1-3-4-5-...
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    }
    case LieFamily::F:
      if (n != 4) fail("type F requires rank 4");
      link(0, 1);
      c[1][2] = -1;  // alpha_3, alpha_4 are the short nodes
      c[2][1] = -2;
      link(2, 3);
      break;
    case LieFamily::G:
      if (n != 2) fail("type G requires rank 2");
      c[0][1] = -3;  // alpha_1 is the short node
      c[1][0] = -1;
      break;
  }
  if (t.family == LieFamily::A && n < 1) fail("type A requires rank >= 1");
  return c;
}

std::vector<std::vector<Rat>> rational_inverse(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) fail("singular Cartan matrix");
    std::swap(a[col], a[pivot]);
    Rat inv = Rat(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

LieType LieType::parse(std::string_view s) {
  size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == s.size()) fail("empty Lie type");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos++])));
  if (f < 'A' || f > 'G') fail("unknown Lie family '" + std::string(1, f) + "'");
  int rank = 0;
  bool digits = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    rank = rank * 10 + (s[pos++] - '0');
    digits = true;
    if (rank > 1000) fail("rank out of range");
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (!digits || pos != s.size()) fail("malformed Lie type '" + std::string(s) + "'");
  LieType t{static_cast<LieFamily>(f), rank};
  int lo = 1, hi = 1000;
  switch (t.family) {
    case LieFamily::A: break;
    case LieFamily::B:
    case LieFamily::C: lo = 2; break;
    case LieFamily::D: lo = 3; break;
    case LieFamily::E: lo = 6; hi = 8; break;
    case LieFamily::F: lo = hi = 4; break;
    case LieFamily::G: lo = hi = 2; break;
  }
  if (rank < lo || rank > hi) fail("no type " + t.name());
  return t;
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}

bool Weight::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c >= 0; });
}

long long Weight::coord_sum() const {
  return std::accumulate(coords.begin(), coords.end(), 0LL);
}

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("weights of different rank cannot be combined");
}

Weight& Weight::operator+=(const Weight& o) {
  require_same_rank(*this, o);
  for (int i = 0; i < rank(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same_rank(*this, o);
  for (int i = 0; i < rank(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(long long k, Weight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

RootSystem RootSystem::build(LieType t) {
  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = t.rank;
  rs.cartan_ = cartan_matrix(t);
  rs.compute_symmetrizers();
  rs.generate_roots();
  rs.finish_roots();
  rs.compute_rho_key();
  rs.validate();
  return rs;
}

void RootSystem::compute_symmetrizers() {
  // Minimal positive integers with d_j C_ij = d_i C_ji, found by propagating
  // the edge ratios through the (connected) Dynkin graph.
  std::vector<Rat> x(rank_, 0);
  x[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < rank_; ++j) {
      if (i == j || cartan_[i][j] == 0 || x[j] != 0) continue;
      x[j] = x[i] * rat_frac(cartan_[j][i], cartan_[i][j]);
      todo.push_back(j);
    }
  }
  Int den = 1;
  for (const auto& v : x) {
    if (v == 0) fail("Dynkin diagram is not connected");
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
  }
  std::vector<Int> scaled(rank_);
  Int g = 0;
  for (int i = 0; i < rank_; ++i) {
    scaled[i] = boost::multiprecision::numerator(x[i]) * (den / boost::multiprecision::denominator(x[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  d_.resize(rank_);
  lcm_d_ = 1;
  for (int i = 0; i < rank_; ++i) {
    Int v = scaled[i] / g;
    if (v < 1 || v > 3) fail("symmetrizer out of range");
    d_[i] = static_cast<int>(v);
    lcm_d_ = std::lcm(lcm_d_, d_[i]);
  }
}

void RootSystem::generate_roots() {
  // Closure by root strings: alpha + alpha_i is a root iff the string
  // through alpha in direction alpha_i ascends, i.e. p - alpha(h_i) >= 1
  // where p counts the descents alpha - alpha_i, alpha - 2 alpha_i, ...
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> wave;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    known.insert(e);
    wave.push_back(e);
    Root r;
    r.coords = e;
    r.height = 1;
    roots_.push_back(std::move(r));
  }
  int height = 1;
  while (!wave.empty()) {
    ++height;
    std::vector<std::vector<int>> next;
    for (const auto& m : wave) {
      for (int i = 0; i < rank_; ++i) {
        std::vector<int> cand = m;
        cand[i] += 1;
        if (known.count(cand)) continue;
        long long pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += static_cast<long long>(cartan_[i][j]) * m[j];
        int p = 0;
        std::vector<int> down = m;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          known.insert(cand);
          next.push_back(cand);
          Root r;
          r.coords = cand;
          r.height = height;
          roots_.push_back(std::move(r));
        }
      }
    }
    wave = std::move(next);
  }
}

void RootSystem::finish_roots() {
  // Ascending height; within a height the leftmost support comes first, so
  // the simple roots appear in node order at the front.
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords > b.coords;
  });
  for (int a = 0; a < static_cast<int>(roots_.size()); ++a) {
    Root& r = roots_[a];
    Rat len2 = 0;  // (alpha, alpha) with (alpha_i, alpha_j) = C_ij / d_i
    for (int i = 0; i < rank_; ++i) {
      if (r.coords[i] == 0) continue;
      for (int j = 0; j < rank_; ++j)
        len2 += Rat(r.coords[i]) * r.coords[j] * rat_frac(cartan_[i][j], d_[i]);
    }
    Rat dr = Rat(2) / len2;
    if (boost::multiprecision::denominator(dr) != 1 ||
        boost::multiprecision::numerator(dr) < 1 || boost::multiprecision::numerator(dr) > 3)
      fail("root of unexpected length");
    r.d = static_cast<int>(boost::multiprecision::numerator(dr));
    r.fund_coords.assign(rank_, 0);
    r.h_row.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
      long long v = 0;
      for (int j = 0; j < rank_; ++j) v += static_cast<long long>(cartan_[i][j]) * r.coords[j];
      r.fund_coords[i] = v;
      long long num = static_cast<long long>(r.d) * r.coords[i];
      if (num % d_[i] != 0) fail("coroot row is not integral");
      r.h_row[i] = num / d_[i];
    }
    index_[r.coords] = a;
  }
}

void RootSystem::compute_rho_key() {
  // (w, rho) = sum_j r_j / d_j with r = C^{-1} c, rescaled to an integer
  // linear form in the coordinates of w.
  cinv_ = rational_inverse(cartan_);
  std::vector<Rat> key(rank_, 0);
  Int den = 1;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) key[i] += cinv_[j][i] / d_[j];
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(key[i]));
  }
  rho_key_.resize(rank_);
  for (int i = 0; i < rank_; ++i) {
    rho_key_[i] = boost::multiprecision::numerator(key[i]) *
                  (den / boost::multiprecision::denominator(key[i]));
    if (rho_key_[i] <= 0) fail("rho pairing key must be positive");
  }
}

void RootSystem::validate() const {
  if (static_cast<int>(roots_.size()) != expected_root_count(type_))
    fail("generated root count does not match " + type_.name());
  for (int i = 0; i < rank_; ++i) {
    if (cartan_[i][i] != 2) fail("Cartan diagonal must be 2");
    for (int j = 0; j < rank_; ++j) {
      if (i != j && cartan_[i][j] > 0) fail("off-diagonal Cartan entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0)) fail("Cartan zero pattern must be symmetric");
      if (static_cast<long long>(d_[j]) * cartan_[i][j] !=
          static_cast<long long>(d_[i]) * cartan_[j][i])
        fail("Cartan matrix is not symmetrizable by d");
    }
  }
  if (*std::min_element(d_.begin(), d_.end()) != 1) fail("symmetrizers are not normalized");
  if (roots_.back().d != 1) fail("highest root must be long");
}

int RootSystem::find_root(const std::vector<int>& simple_coords) const {
  auto it = index_.find(simple_coords);
  return it == index_.end() ? -1 : it->second;
}

Weight RootSystem::fundamental(int i) const {
  Weight w = Weight::zero(rank_);
  w.coords.at(i) = 1;
  return w;
}

Weight RootSystem::simple_root(int j) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) w.coords[i] = cartan_[i][j];
  return w;
}

long long RootSystem::eval_coroot(const Weight& w, const Root& alpha) const {
  if (w.rank() != rank_) throw std::invalid_argument("weight rank does not match root system");
  long long v = 0;
  for (int i = 0; i < rank_; ++i) v += w.coords[i] * alpha.h_row[i];
  return v;
}

long long RootSystem::form_pairing(const Weight& w, const Root& alpha) const {
  if (w.rank() != rank_) throw std::invalid_argument("weight rank does not match root system");
  for (int i = 0; i < rank_; ++i)
    if (w.coords[i] % d_[i] != 0)
      throw std::invalid_argument("coordinate " + std::to_string(i + 1) +
                                  " is not a multiple of d_i; the pairing is not integral here");
  long long v = eval_coroot(w, alpha);
  if (v % alpha.d != 0) throw std::logic_error("pairing failed to be divisible by d_alpha");
  return v / alpha.d;
}

std::vector<std::pair<int, int>> RootSystem::root_decompositions(int a) const {
  const Root& r = root(a);
  std::vector<std::pair<int, int>> out;
  for (int b = 0; b < static_cast<int>(roots_.size()); ++b) {
    if (roots_[b].height >= r.height) break;  // sorted by height
    std::vector<int> rest(rank_);
    bool ok = true;
    for (int i = 0; i < rank_; ++i) {
      rest[i] = r.coords[i] - roots_[b].coords[i];
      if (rest[i] < 0) { ok = false; break; }
    }
    if (!ok) continue;
    int c = find_root(rest);
    if (c >= 0 && b <= c) out.emplace_back(b, c);
  }
  return out;
}

std::vector<int> RootSystem::adjacent(int i) const {
  std::vector<int> out;
  for (int j = 0; j < rank_; ++j)
    if (j != i && cartan_.at(i).at(j) < 0) out.push_back(j);
  return out;
}

Int RootSystem::rho_pairing_key(const Weight& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("weight rank does not match root system");
  Int k = 0;
  for (int i = 0; i < rank_; ++i) k += rho_key_[i] * w.coords[i];
  return k;
}

std::vector<Rat> RootSystem::root_coords(const Weight& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("weight rank does not match root system");
  std::vector<Rat> r(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) r[i] += cinv_[i][j] * w.coords[j];
  return r;
}

}  // namespace dq
