#include "dq/characters.hpp"

#include <algorithm>
#include <set>

namespace dq {

namespace {

struct DominantEntry {
  Weight w;
  std::vector<long long> depth;  // root coordinates of lambda - w
  long long height = 0;
};

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank())
    throw std::invalid_argument("weight rank does not match root system");
  if (!lambda.dominant())
    throw std::invalid_argument("highest weight must be dominant");
}

// All dominant weights w with lambda - w in the positive root lattice.  The
// root coordinates k of lambda - w satisfy 0 <= k <= C^{-1} lambda
// componentwise because the inverse Cartan matrix is entrywise nonnegative.
std::vector<DominantEntry> dominant_below(const RootSystem& rs, const Weight& lambda) {
  int n = rs.rank();
  const auto& cartan = rs.cartan();
  std::vector<long long> kmax(n);
  auto rc = rs.root_coords(lambda);
  for (int j = 0; j < n; ++j) {
    Int f = boost::multiprecision::numerator(rc[j]) / boost::multiprecision::denominator(rc[j]);
    kmax[j] = static_cast<long long>(f);
  }
  std::vector<DominantEntry> out;
  std::vector<long long> k(n, 0);
  while (true) {
    Weight w = lambda;
    bool dominant = true;
    for (int i = 0; i < n; ++i) {
      long long v = lambda.coords[i];
      for (int j = 0; j < n; ++j) v -= static_cast<long long>(cartan[i][j]) * k[j];
      w.coords[i] = v;
      if (v < 0) dominant = false;
    }
    if (dominant) {
      DominantEntry e;
      e.w = std::move(w);
      e.depth = k;
      for (long long kj : k) e.height += kj;
      out.push_back(std::move(e));
    }
    int pos = n - 1;
    while (pos >= 0 && k[pos] == kmax[pos]) k[pos--] = 0;
    if (pos < 0) break;
    ++k[pos];
  }
  std::sort(out.begin(), out.end(), [](const DominantEntry& a, const DominantEntry& b) {
    return std::tie(a.height, a.w.coords) < std::tie(b.height, b.w.coords);
  });
  return out;
}

}  // namespace

Weight dominant_conjugate(const RootSystem& rs, Weight w) {
  if (w.rank() != rs.rank()) throw std::invalid_argument("weight rank does not match root system");
  int n = rs.rank();
  const auto& cartan = rs.cartan();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      long long c = w.coords[i];
      if (c < 0) {
        for (int k = 0; k < n; ++k) w.coords[k] -= c * cartan[k][i];
        changed = true;
      }
    }
  }
  return w;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant) {
  if (!dominant.dominant()) throw std::invalid_argument("orbit seed must be dominant");
  int n = rs.rank();
  const auto& cartan = rs.cartan();
  std::set<Weight> seen{dominant};
  std::vector<Weight> queue{dominant};
  while (!queue.empty()) {
    Weight w = std::move(queue.back());
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      long long c = w.coords[i];
      if (c == 0) continue;
      Weight r = w;
      for (int k = 0; k < n; ++k) r.coords[k] -= c * cartan[k][i];
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  Weight rho = Weight(std::vector<long long>(rs.rank(), 1));
  Weight top = lambda + rho;
  Rat acc = 1;
  for (const Root& alpha : rs.positive_roots())
    acc *= rat_frac(rs.eval_coroot(top, alpha), rs.eval_coroot(rho, alpha));
  if (boost::multiprecision::denominator(acc) != 1)
    throw std::logic_error("dimension product failed to be integral");
  return boost::multiprecision::numerator(acc);
}

LaurentCharacter irreducible_character(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  int n = rs.rank();
  long long L = rs.lcm_symmetrizer();

  auto dom = dominant_below(rs, lambda);
  std::map<Weight, Int> mult;
  for (const auto& e : dom) {
    if (e.height == 0) {
      mult[e.w] = 1;
      continue;
    }
    // Multiplicity recursion: every pairing is rescaled by L so that the
    // numerator and denominator below are integers.
    Int num = 0;
    for (const Root& alpha : rs.positive_roots()) {
      Weight mu = e.w;
      std::vector<long long> dep = e.depth;
      while (true) {
        bool inside = true;
        for (int j = 0; j < n; ++j) {
          dep[j] -= alpha.coords[j];
          if (dep[j] < 0) inside = false;
        }
        if (!inside) break;
        for (int j = 0; j < n; ++j) mu.coords[j] += alpha.fund_coords[j];
        auto it = mult.find(dominant_conjugate(rs, mu));
        if (it != mult.end() && it->second != 0)
          num += it->second * ((L / alpha.d) * rs.eval_coroot(mu, alpha));
      }
    }
    long long den = 0;
    for (int j = 0; j < n; ++j)
      den += e.depth[j] * (L / rs.symmetrizers()[j]) * (lambda.coords[j] + e.w.coords[j] + 2);
    Int m = 2 * num;
    if (den <= 0 || m % den != 0)
      throw std::logic_error("weight multiplicity failed to be a positive integer");
    mult[e.w] = m / den;
  }

  LaurentCharacter out(n);
  for (const auto& [w, m] : mult)
    for (const Weight& v : weyl_orbit(rs, w)) out.add_term(v, m);
  return out;
}

const LaurentCharacter& CharacterContext::irreducible(const Weight& lambda) {
  auto it = cache_.find(lambda);
  if (it == cache_.end())
    it = cache_.emplace(lambda, irreducible_character(*rs_, lambda)).first;
  return it->second;
}

std::vector<std::pair<Weight, Int>> decompose_character(CharacterContext& ctx,
                                                        const LaurentCharacter& chi) {
  if (!chi.is_zero() && chi.rank() != ctx.rs().rank())
    throw std::invalid_argument("character rank does not match root system");
  const RootSystem& rs = ctx.rs();
  LaurentCharacter residue = chi;
  std::vector<std::pair<Weight, Int>> out;
  while (!residue.is_zero()) {
    const Weight* best = nullptr;
    Int best_key = 0;
    for (const auto& [w, c] : residue.terms()) {
      Int key = rs.rho_pairing_key(w);
      if (!best || key > best_key || (key == best_key && w.coords > best->coords)) {
        best = &w;
        best_key = std::move(key);
      }
    }
    if (!best->dominant())
      throw std::domain_error("leading weight is not dominant; "
                              "not an integer combination of irreducible characters");
    Weight w = *best;
    Int c = residue.coeff(w);
    residue -= c * ctx.irreducible(w);
    out.emplace_back(std::move(w), std::move(c));
  }
  return out;
}

std::vector<std::pair<Weight, Int>> decompose_character(const RootSystem& rs,
                                                        const LaurentCharacter& chi) {
  CharacterContext ctx(rs);
  return decompose_character(ctx, chi);
}

}  // namespace dq
