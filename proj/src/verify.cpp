#include "dq/verify.hpp"

#include <algorithm>
#include <random>

#include "dq/characters.hpp"
#include "dq/compositions.hpp"
#include "dq/demazure.hpp"
#include "dq/partitions.hpp"
#include "dq/qsystem.hpp"
#include "dq/root_system.hpp"
#include "dq/sl2_fusion.hpp"

namespace dq {

namespace {

void fail(Report& report, nlohmann::json counterexample) {
  report.status = Status::Fail;
  report.counterexample = std::move(counterexample);
}

// Dominant weights of the closed cone level * sum s_i omega_i (type A) with
// coordinate sum at most the budget.
void gamma_weights(int rank, long long level, long long budget, int pos, Weight& w,
                   std::vector<Weight>& out) {
  if (pos == rank) {
    out.push_back(w);
    return;
  }
  for (long long s = 0; level * s <= budget; ++s) {
    w.coords[pos] = level * s;
    gamma_weights(rank, level, budget - level * s, pos + 1, w, out);
  }
  w.coords[pos] = 0;
}

void partitions_descend(std::vector<long long>& prefix, long long budget, long long max_part,
                        std::vector<std::vector<long long>>& out) {
  out.push_back(prefix);
  for (long long v = std::min(budget, max_part); v >= 1; --v) {
    prefix.push_back(v);
    partitions_descend(prefix, budget - v, v, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long long>> partitions_up_to(long long max_size) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> prefix;
  partitions_descend(prefix, max_size, max_size, out);
  return out;
}

SweepBounds SweepBounds::clamped(long long max_size) const {
  if (max_size < 1) throw std::invalid_argument("the size bound must be positive");
  SweepBounds b = *this;
  auto cap_int = [max_size](int& v) { v = static_cast<int>(std::min<long long>(v, max_size)); };
  auto cap_ll = [max_size](long long& v) { v = std::min(v, max_size); };
  cap_int(b.split_rs);
  cap_int(b.split_k);
  cap_int(b.rearrange_K);
  cap_int(b.count_rs);
  cap_int(b.pairing_draws);
  cap_ll(b.pairing_coeff);
  cap_int(b.qsystem_rank);
  cap_ll(b.qsystem_mmax);
  cap_int(b.dim_rank);
  cap_ll(b.dim_mmax);
  cap_ll(b.sl2_dem_mmax);
  cap_int(b.mult_rank);
  cap_ll(b.mult_level);
  cap_ll(b.mult_coord_sum);
  cap_ll(b.sl2_size);
  cap_int(b.xi_draws);
  cap_ll(b.xi_level);
  cap_ll(b.xi_coeff);
  return b;
}

const std::vector<std::string>& sweep_types() {
  static const std::vector<std::string> types{"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                              "C2", "C3", "C4", "D4", "G2", "F4"};
  return types;
}

Report sweep_composition_calculus(const SweepBounds& bounds) {
  Report report;
  report.command = "verify.compositions";
  report.inputs = {{"split_rs", bounds.split_rs},
                   {"split_k", bounds.split_k},
                   {"rearrange_K", bounds.rearrange_K},
                   {"count_rs", bounds.count_rs}};
  long long split_cases = 0, rearrange_cases = 0, count_cases = 0;

  for (int r = 0; r <= bounds.split_rs; ++r)
    for (int s = 0; s <= bounds.split_rs; ++s)
      for (int k = 0; k <= bounds.split_k; ++k) {
        SplitCheck check = verify_split_identity(r, s, k);
        ++split_cases;
        if (!check.ok) {
          fail(report, {{"check", "split"},
                        {"r", r},
                        {"s", s},
                        {"k", k},
                        {"detail", check.detail},
                        {"element", check.counterexample}});
          return report;
        }
      }

  for (int r = 0; r <= bounds.split_rs; ++r)
    for (int s = 0; s <= bounds.split_rs; ++s)
      for (int k = 1; k <= bounds.split_k; ++k)
        for (int K = 0; K <= bounds.rearrange_K; ++K) {
          if (static_cast<long long>(s) + r < static_cast<long long>(k) * r + K) continue;
          RearrangeCheck check = verify_rearrange_constraint(r, s, k, K);
          ++rearrange_cases;
          if (!check.ok) {
            fail(report, {{"check", "rearrange"},
                          {"r", r},
                          {"s", s},
                          {"k", k},
                          {"K", K},
                          {"bad_r", check.bad_r},
                          {"bad_s", check.bad_s},
                          {"detail", check.detail}});
            return report;
          }
        }

  for (int r = 0; r <= bounds.count_rs; ++r)
    for (int s = 0; s <= bounds.count_rs; ++s) {
      ++count_cases;
      Int enumerated = static_cast<long long>(enumerate_S(r, s).elements.size());
      Int counted = count_partitions_bounded(s, r);
      if (enumerated != counted) {
        fail(report, {{"check", "cardinality"},
                      {"r", r},
                      {"s", s},
                      {"enumerated", enumerated.str()},
                      {"counted", counted.str()}});
        return report;
      }
    }

  report.data = {{"split_cases", split_cases},
                 {"rearrange_cases", rearrange_cases},
                 {"count_cases", count_cases}};
  return report;
}

Report sweep_root_pairings(const SweepBounds& bounds) {
  Report report;
  report.command = "verify.pairings";
  report.inputs = {{"types", sweep_types()},
                   {"draws", bounds.pairing_draws},
                   {"max_coeff", bounds.pairing_coeff},
                   {"seed", bounds.seed}};
  std::mt19937 rng(bounds.seed);
  std::uniform_int_distribution<long long> coeff(0, bounds.pairing_coeff);
  long long decompositions = 0;

  for (const auto& name : sweep_types()) {
    RootSystem rs = RootSystem::build(name);
    for (int draw = 0; draw < bounds.pairing_draws; ++draw) {
      Weight lambda = Weight::zero(rs.rank());
      for (int i = 0; i < rs.rank(); ++i)
        lambda.coords[i] = rs.symmetrizers()[i] * coeff(rng);

      std::vector<long long> s(rs.num_positive_roots());
      for (int a = 0; a < rs.num_positive_roots(); ++a) {
        long long value = rs.eval_coroot(lambda, a);
        int d = rs.root(a).d;
        if (value % d != 0) {
          fail(report, {{"type", name},
                        {"lambda", lambda.coords},
                        {"root", rs.root(a).coords},
                        {"value", value},
                        {"d", d},
                        {"detail", "coroot value is not a multiple of d"}});
          return report;
        }
        s[a] = rs.form_pairing(lambda, a);
        if (s[a] * d != value) {
          fail(report, {{"type", name},
                        {"lambda", lambda.coords},
                        {"root", rs.root(a).coords},
                        {"detail", "pairing and coroot evaluation disagree"}});
          return report;
        }
      }

      for (int a = 0; a < rs.num_positive_roots(); ++a) {
        for (auto [al, be] : rs.root_decompositions(a)) {
          ++decompositions;
          if (s[a] != s[al] + s[be]) {
            fail(report, {{"type", name},
                          {"lambda", lambda.coords},
                          {"root", rs.root(a).coords},
                          {"summand_a", rs.root(al).coords},
                          {"summand_b", rs.root(be).coords},
                          {"detail", "pairing is not additive over the decomposition"}});
            return report;
          }
        }
      }
    }
  }
  report.data = {{"decompositions_checked", decompositions}};
  return report;
}

Report sweep_type_a_qsystem(const SweepBounds& bounds) {
  Report report;
  report.command = "verify.qsystem_type_a";
  report.inputs = {{"max_rank", bounds.qsystem_rank}, {"mmax", bounds.qsystem_mmax}};
  long long entries = 0;

  for (int n = 1; n <= bounds.qsystem_rank; ++n) {
    RootSystem rs = RootSystem::build(LieType{LieFamily::A, n});
    CharacterContext ctx(rs);
    try {
      QSystemTable table(rs, type_a_initial(rs));
      table.fill(bounds.qsystem_mmax);
      for (int i = 0; i < n; ++i) {
        for (long long m = 0; m <= bounds.qsystem_mmax; ++m) {
          ++entries;
          const LaurentCharacter& q = table.get(i, m);
          if (q != ctx.irreducible(m * rs.fundamental(i))) {
            fail(report, {{"rank", n},
                          {"node", i + 1},
                          {"m", m},
                          {"detail", "entry differs from the closed form"}});
            return report;
          }
          for (const auto& [w, mult] : decompose_character(ctx, q)) {
            if (mult < 0) {
              fail(report, {{"rank", n},
                            {"node", i + 1},
                            {"m", m},
                            {"weight", w.coords},
                            {"multiplicity", mult.str()},
                            {"detail", "negative multiplicity"}});
              return report;
            }
          }
          if (m >= 1 && m < bounds.qsystem_mmax && !table.recursion_holds(i, m)) {
            fail(report, {{"rank", n},
                          {"node", i + 1},
                          {"m", m},
                          {"detail", "recursion residual is nonzero"}});
            return report;
          }
        }
      }
    } catch (const QSystemError& e) {
      fail(report, {{"rank", n}, {"detail", e.what()}});
      return report;
    }
  }
  report.data = {{"entries_checked", entries}};
  return report;
}

Report sweep_dimension_identity(const SweepBounds& bounds) {
  Report report;
  report.command = "verify.dimension_identity";
  report.inputs = {{"max_rank", bounds.dim_rank}, {"mmax", bounds.dim_mmax}};
  long long cases = 0;

  for (int n = 1; n <= bounds.dim_rank; ++n) {
    RootSystem rs = RootSystem::build(LieType{LieFamily::A, n});
    try {
      QSystemTable table(rs, type_a_initial(rs));
      for (int i = 0; i < n; ++i) {
        for (long long m = 1; m <= bounds.dim_mmax; ++m) {
          ++cases;
          DimIdentityCheck check = verify_dimension_identity(table, i, m);
          if (!check.ok) {
            fail(report, {{"rank", n},
                          {"node", i + 1},
                          {"m", m},
                          {"square", check.square.str()},
                          {"kernel", check.kernel_mass.str()},
                          {"shifted", check.shifted_mass.str()}});
            return report;
          }
        }
      }
    } catch (const QSystemError& e) {
      fail(report, {{"rank", n}, {"detail", e.what()}});
      return report;
    }
  }
  report.data = {{"cases", cases}};
  return report;
}

Report sweep_sl2_demazure(const SweepBounds& bounds) {
  Report report;
  report.command = "verify.sl2_demazure";
  report.inputs = {{"mmax", bounds.sl2_dem_mmax}};
  RootSystem rs = RootSystem::build("A1");
  QSystemTable table(rs, type_a_initial(rs));
  KrDim from_table = kr_dims_from_table(table);
  KrDim closed_form = sl2_kr_dims();

  Int power = 1;
  for (long long m = 0; m <= bounds.sl2_dem_mmax; ++m) {
    Weight lambda = Weight::zero(1);
    lambda.coords[0] = m;
    Int via_table = demazure_dim(rs, 1, lambda, from_table);
    Int via_closed = demazure_dim(rs, 1, lambda, closed_form);
    Int via_fusion = 1;
    if (m >= 1) {
      CompatibleTuple tuple = xi_of_level(rs, 1, lambda);
      via_fusion = sl2::fusion_dim(tuple.by_root[0]);
    }
    if (via_table != power || via_closed != power || via_fusion != power) {
      fail(report, {{"m", m},
                    {"expected", power.str()},
                    {"via_table", via_table.str()},
                    {"via_closed_form", via_closed.str()},
                    {"via_fusion", via_fusion.str()}});
      return report;
    }
    power *= 2;
  }
  report.data = {{"cases", bounds.sl2_dem_mmax + 1}};
  return report;
}

Report sweep_multiplicativity(const SweepBounds& bounds) {
  Report report;
  report.command = "verify.multiplicativity";
  report.inputs = {{"max_rank", bounds.mult_rank},
                   {"max_level", bounds.mult_level},
                   {"coord_sum", bounds.mult_coord_sum}};
  long long pairs = 0;

  for (int n = 1; n <= bounds.mult_rank; ++n) {
    RootSystem rs = RootSystem::build(LieType{LieFamily::A, n});
    try {
      QSystemTable table(rs, type_a_initial(rs));
      KrDim kr = kr_dims_from_table(table);
      for (long long level = 1; level <= bounds.mult_level; ++level) {
        std::vector<Weight> weights;
        Weight scratch = Weight::zero(n);
        gamma_weights(n, level, bounds.mult_coord_sum, 0, scratch, weights);
        for (const Weight& lambda : weights) {
          for (const Weight& mu : weights) {
            ++pairs;
            ProductCheck check = verify_multiplicativity(rs, level, lambda, mu, kr);
            if (!check.ok) {
              fail(report, {{"rank", n},
                            {"level", level},
                            {"lambda", lambda.coords},
                            {"mu", mu.coords},
                            {"combined", check.combined.str()},
                            {"left", check.left.str()},
                            {"right", check.right.str()}});
              return report;
            }
          }
        }
      }
    } catch (const QSystemError& e) {
      fail(report, {{"rank", n}, {"detail", e.what()}});
      return report;
    }
  }
  report.data = {{"pairs", pairs}};
  return report;
}

Report sweep_sl2_suite(const SweepBounds& bounds) {
  Report report;
  report.command = "verify.sl2_suite";
  report.inputs = {{"max_size", bounds.sl2_size}};
  long long cases = 0;

  for (const auto& parts : partitions_up_to(bounds.sl2_size)) {
    Partition xi(parts);
    int l = xi.length();
    long long last = l > 0 ? xi.part(l) : 0;
    nlohmann::json where{{"xi", parts}};

    auto members = sl2::index_set(xi);
    if (Int(static_cast<long long>(members.size())) != sl2::fusion_dim(xi)) {
      where["check"] = "cardinality";
      where["enumerated"] = members.size();
      where["product"] = sl2::fusion_dim(xi).str();
      fail(report, where);
      return report;
    }

    if (l >= 2) {
      std::vector<std::vector<long long>> at, below;
      for (const auto& v : members) (v.back() == last ? at : below).push_back(v);
      sl2::IndexSplit split = sl2::split_index_set(xi);
      std::sort(split.at_max.begin(), split.at_max.end());
      std::sort(split.below_max.begin(), split.below_max.end());
      if (split.at_max != at || split.below_max != below) {
        where["check"] = "split";
        fail(report, where);
        return report;
      }
    }

    sl2::BigradedCharacter basis = sl2::graded_character_basis(xi);
    sl2::BigradedCharacter ses = sl2::graded_character_ses(xi);
    if (!(basis == ses)) {
      where["check"] = "graded character routes";
      fail(report, where);
      return report;
    }

    auto specialized = basis.specialize();
    if (specialized != sl2::tensor_character(xi)) {
      where["check"] = "grade specialization";
      fail(report, where);
      return report;
    }
    for (const auto& [w, c] : specialized) {
      auto mirror = specialized.find(-w);
      if (mirror == specialized.end() || mirror->second != c) {
        where["check"] = "weight symmetry";
        where["weight"] = w;
        fail(report, where);
        return report;
      }
    }

    Partition plus = sl2::xi_plus(xi);
    Partition minus = sl2::xi_minus(xi);
    // The size bookkeeping describes the two-or-more-row transforms; a single
    // row maps to (itself, empty) instead.
    bool sizes_ok = l >= 2 ? plus.size() == xi.size() && minus.size() == xi.size() - 2 * last
                           : plus.size() == xi.size() && minus.size() == 0;
    if (!sizes_ok) {
      where["check"] = "transform sizes";
      fail(report, where);
      return report;
    }
    int t = sl2::plateau_start(xi);
    for (int k = 0; k <= l + 1; ++k) {
      long long expected = xi.tail_sum(k + 1) - (t < k && k <= l - 1 ? 1 : 0);
      if (plus.tail_sum(k + 1) != expected) {
        where["check"] = "tail sums";
        where["k"] = k;
        fail(report, where);
        return report;
      }
    }
    ++cases;
  }
  report.data = {{"partitions", cases}};
  return report;
}

Report sweep_xi_shapes(const SweepBounds& bounds) {
  Report report;
  report.command = "verify.xi_shapes";
  report.inputs = {{"draws", bounds.xi_draws},
                   {"max_level", bounds.xi_level},
                   {"max_coeff", bounds.xi_coeff},
                   {"seed", bounds.seed}};
  std::mt19937 rng(bounds.seed);
  std::uniform_int_distribution<std::size_t> type_pick(0, sweep_types().size() - 1);
  std::uniform_int_distribution<long long> level_pick(1, bounds.xi_level);
  std::uniform_int_distribution<long long> coeff(0, bounds.xi_coeff);
  std::uniform_int_distribution<long long> small_coeff(0, 2);

  auto run_draw = [&](const RootSystem& rs, long long level, const Weight& lambda,
                      bool expect_rectangular) -> std::optional<nlohmann::json> {
    CompatibleTuple tuple = xi_of_level(rs, level, lambda);
    for (int a = 0; a < rs.num_positive_roots(); ++a) {
      Shape shape = classify_shape(tuple.by_root[a]);
      bool empty_matches = (rs.eval_coroot(lambda, a) == 0) == (shape.kind == ShapeKind::Empty);
      bool allowed = shape.kind != ShapeKind::Other &&
                     (!expect_rectangular || shape.kind == ShapeKind::Empty ||
                      shape.kind == ShapeKind::Rectangular);
      if (!empty_matches || !allowed) {
        return nlohmann::json{{"type", rs.type().name()},
                              {"level", level},
                              {"lambda", lambda.coords},
                              {"root", rs.root(a).coords},
                              {"shape", shape_name(shape)},
                              {"expect_rectangular", expect_rectangular}};
      }
    }
    return std::nullopt;
  };

  for (int draw = 0; draw < bounds.xi_draws; ++draw) {
    RootSystem rs = RootSystem::build(sweep_types()[type_pick(rng)]);
    long long level = level_pick(rng);
    Weight lambda = Weight::zero(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) lambda.coords[i] = coeff(rng);
    if (lambda.is_zero()) lambda.coords[0] = 1;

    bool divisible = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (lambda.coords[i] % (level * rs.symmetrizers()[i]) != 0) divisible = false;
    if (auto bad = run_draw(rs, level, lambda, divisible)) {
      fail(report, *bad);
      return report;
    }
  }

  for (int draw = 0; draw < bounds.xi_draws; ++draw) {
    RootSystem rs = RootSystem::build(sweep_types()[type_pick(rng)]);
    long long level = level_pick(rng);
    Weight lambda = Weight::zero(rs.rank());
    bool zero = true;
    for (int i = 0; i < rs.rank(); ++i) {
      long long s = small_coeff(rng);
      lambda.coords[i] = level * rs.symmetrizers()[i] * s;
      if (s > 0) zero = false;
    }
    if (zero) lambda.coords[0] = level * rs.symmetrizers()[0];
    if (auto bad = run_draw(rs, level, lambda, true)) {
      fail(report, *bad);
      return report;
    }
  }

  report.data = {{"generic_draws", bounds.xi_draws}, {"divisible_draws", bounds.xi_draws}};
  return report;
}

std::vector<Report> run_all_sweeps(const SweepBounds& bounds) {
  return {sweep_composition_calculus(bounds), sweep_root_pairings(bounds),
          sweep_type_a_qsystem(bounds),       sweep_dimension_identity(bounds),
          sweep_sl2_demazure(bounds),         sweep_multiplicativity(bounds),
          sweep_sl2_suite(bounds),            sweep_xi_shapes(bounds)};
}

}  // namespace dq
