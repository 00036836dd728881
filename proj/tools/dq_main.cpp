#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dq/characters.hpp"
#include "dq/compositions.hpp"
#include "dq/demazure.hpp"
#include "dq/partitions.hpp"
#include "dq/qsystem.hpp"
#include "dq/report.hpp"
#include "dq/root_system.hpp"
#include "dq/sl2_fusion.hpp"
#include "dq/verify.hpp"

namespace {

using dq::Int;
using dq::Report;
using dq::Status;

// JSON has no arbitrary-precision integers; values beyond the double-safe
// range are emitted as decimal strings.
nlohmann::json int_json(const Int& v) {
  static const Int safe = Int(1) << 53;
  if (v > -safe && v < safe) return nlohmann::json(static_cast<long long>(v));
  return nlohmann::json(v.str());
}

std::vector<long long> parse_csv(const std::string& text, const std::string& what) {
  std::vector<long long> values;
  if (text.empty()) return values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed " + what + " entry \"" + item + "\"");
    }
  }
  return values;
}

struct Options {
  std::string type;
  int rank = 0;
  std::string weight;
  std::string partition;
  long long level = 1;
  long long mmax = 1;
  std::string initial_data;
  long long max_size = 0;
  int r = 0, s = 0, k = -1;
  std::string half;
  bool table_mode = false;

  dq::RootSystem make_root_system() const {
    if (type.empty()) throw std::invalid_argument("--type is required");
    std::string name = type;
    if (name.size() == 1) {
      if (rank <= 0) throw std::invalid_argument("--rank is required with --type " + name);
      name += std::to_string(rank);
    } else if (rank > 0) {
      throw std::invalid_argument("give the rank either inside --type or via --rank, not both");
    }
    return dq::RootSystem::build(name);
  }

  dq::Weight make_weight(const dq::RootSystem& rs) const {
    auto coords = parse_csv(weight, "weight");
    if (static_cast<int>(coords.size()) != rs.rank())
      throw std::invalid_argument("--weight needs exactly " + std::to_string(rs.rank()) +
                                  " comma-separated coordinates");
    dq::Weight w = dq::Weight::zero(rs.rank());
    w.coords = coords;
    return w;
  }

  dq::Partition make_partition() const {
    return dq::Partition(parse_csv(partition, "partition"));
  }

  std::vector<dq::LaurentCharacter> make_initial(const dq::RootSystem& rs) const {
    if (!initial_data.empty()) return dq::load_initial_data(rs, initial_data);
    return dq::type_a_initial(rs);
  }
};

void emit(const Report& report, bool table_mode) {
  if (!table_mode) {
    std::cout << report.to_line() << "\n";
    return;
  }
  std::cout << "[" << dq::status_name(report.status) << "] " << report.command << "\n";
  if (!report.inputs.empty()) std::cout << "  inputs: " << report.inputs.dump() << "\n";
  if (!report.data.empty()) std::cout << report.data.dump(2) << "\n";
  if (report.counterexample)
    std::cout << "  counterexample: " << report.counterexample->dump() << "\n";
}

nlohmann::json decomposition_json(dq::CharacterContext& ctx, const dq::LaurentCharacter& chi) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, mult] : dq::decompose_character(ctx, chi))
    out.push_back({w.coords, int_json(mult)});
  return out;
}

int cmd_roots(const Options& opt) {
  dq::RootSystem rs = opt.make_root_system();
  Report report;
  report.command = "roots";
  report.inputs = {{"type", rs.type().name()}};
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& alpha : rs.positive_roots())
    roots.push_back({{"coords", alpha.coords},
                     {"height", alpha.height},
                     {"d", alpha.d},
                     {"on_coroots", alpha.fund_coords}});
  report.data = {{"count", rs.num_positive_roots()},
                 {"symmetrizers", rs.symmetrizers()},
                 {"roots", std::move(roots)}};
  emit(report, opt.table_mode);
  return 0;
}

int cmd_char(const Options& opt) {
  dq::RootSystem rs = opt.make_root_system();
  dq::Weight lambda = opt.make_weight(rs);
  dq::LaurentCharacter chi = dq::irreducible_character(rs, lambda);
  Report report;
  report.command = "char";
  report.inputs = {{"type", rs.type().name()}, {"weight", lambda.coords}};
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : chi.terms()) terms.push_back({w.coords, int_json(c)});
  report.data = {{"dim", int_json(chi.mass())}, {"terms", std::move(terms)}};
  emit(report, opt.table_mode);
  return 0;
}

int cmd_dim(const Options& opt) {
  dq::RootSystem rs = opt.make_root_system();
  dq::Weight lambda = opt.make_weight(rs);
  Report report;
  report.command = "dim";
  report.inputs = {{"type", rs.type().name()}, {"weight", lambda.coords}};
  report.data = {{"dim", int_json(dq::weyl_dimension(rs, lambda))}};
  emit(report, opt.table_mode);
  return 0;
}

int cmd_xi(const Options& opt) {
  dq::RootSystem rs = opt.make_root_system();
  dq::Weight lambda = opt.make_weight(rs);
  dq::CompatibleTuple tuple = dq::xi_of_level(rs, opt.level, lambda);
  Report report;
  report.command = "xi";
  report.inputs = {{"type", rs.type().name()}, {"level", opt.level}, {"weight", lambda.coords}};
  nlohmann::json components = nlohmann::json::array();
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    const dq::Partition& part = tuple.by_root[a];
    components.push_back({{"root", rs.root(a).coords},
                          {"parts", part.parts()},
                          {"shape", dq::shape_name(dq::classify_shape(part))}});
  }
  report.data = {{"components", std::move(components)}};
  emit(report, opt.table_mode);
  return 0;
}

int cmd_sets(const Options& opt) {
  dq::CompositionSet set;
  std::string variant = "full";
  if (opt.k >= 0 && opt.half == "below") {
    set = dq::enumerate_S_below(opt.r, opt.s, opt.k);
    variant = "support below k";
  } else if (opt.k >= 0 && opt.half == "above") {
    set = dq::enumerate_S_above(opt.r, opt.s, opt.k);
    variant = "support at or above k";
  } else if (opt.k >= 0) {
    throw std::invalid_argument("--k needs --half below or --half above");
  } else {
    set = dq::enumerate_S(opt.r, opt.s);
  }
  Report report;
  report.command = "sets";
  report.inputs = {{"r", opt.r}, {"s", opt.s}, {"variant", variant}};
  if (opt.k >= 0) report.inputs["k"] = opt.k;
  report.data = {{"count", set.elements.size()}, {"elements", set.elements}};
  emit(report, opt.table_mode);
  return 0;
}

int cmd_qsolve(const Options& opt) {
  dq::RootSystem rs = opt.make_root_system();
  dq::QSystemTable table(rs, opt.make_initial(rs));
  table.fill(opt.mmax);
  dq::CharacterContext ctx(rs);
  for (int i = 0; i < rs.rank(); ++i) {
    for (long long m = 0; m <= opt.mmax; ++m) {
      const dq::LaurentCharacter& q = table.get(i, m);
      Report report;
      report.command = "qsolve.entry";
      report.inputs = {{"type", rs.type().name()}, {"node", i + 1}, {"m", m}};
      report.data = {{"dim", int_json(q.mass())},
                     {"decomposition", decomposition_json(ctx, q)}};
      emit(report, opt.table_mode);
    }
  }
  return 0;
}

int cmd_qverify(const Options& opt) {
  dq::RootSystem rs = opt.make_root_system();
  dq::QSystemTable table(rs, opt.make_initial(rs));
  table.fill(opt.mmax);
  dq::CharacterContext ctx(rs);
  bool failed = false;

  for (int i = 0; i < rs.rank(); ++i) {
    for (long long m = 1; m + 1 <= opt.mmax; ++m) {
      Report report;
      report.command = "qverify.recursion";
      report.inputs = {{"type", rs.type().name()}, {"node", i + 1}, {"m", m}};
      if (table.recursion_holds(i, m)) {
        report.data = {{"holds", true}};
      } else {
        report.status = Status::Fail;
        report.counterexample = nlohmann::json{{"detail", "recursion residual is nonzero"}};
        failed = true;
      }
      emit(report, opt.table_mode);
    }
  }

  for (int i = 0; i < rs.rank(); ++i) {
    for (long long m = 0; m <= opt.mmax; ++m) {
      Report report;
      report.command = "qverify.positivity";
      report.inputs = {{"type", rs.type().name()}, {"node", i + 1}, {"m", m}};
      nlohmann::json negative = nlohmann::json::array();
      for (const auto& [w, mult] : dq::decompose_character(ctx, table.get(i, m)))
        if (mult < 0) negative.push_back({w.coords, int_json(mult)});
      if (negative.empty()) {
        report.data = {{"nonnegative", true}};
      } else {
        report.status = Status::Fail;
        report.counterexample = nlohmann::json{{"negative_terms", std::move(negative)}};
        failed = true;
      }
      emit(report, opt.table_mode);
    }
  }

  for (int i = 0; i < rs.rank(); ++i) {
    int d = rs.symmetrizers()[i];
    for (long long m = 1; d * m + 1 <= opt.mmax; ++m) {
      dq::DimIdentityCheck check = dq::verify_dimension_identity(table, i, m);
      Report report;
      report.command = "qverify.dimension_identity";
      report.inputs = {{"type", rs.type().name()}, {"node", i + 1}, {"m", m}};
      report.data = {{"square", int_json(check.square)},
                     {"kernel", int_json(check.kernel_mass)},
                     {"shifted", int_json(check.shifted_mass)},
                     {"balances", check.ok}};
      if (check.experimental) {
        report.status = Status::Experimental;
      } else if (!check.ok) {
        report.status = Status::Fail;
        report.counterexample = nlohmann::json{{"detail", "mass identity does not balance"}};
        failed = true;
      }
      emit(report, opt.table_mode);
    }
  }
  return failed ? 1 : 0;
}

int cmd_demdim(const Options& opt) {
  dq::RootSystem rs = opt.make_root_system();
  dq::Weight lambda = opt.make_weight(rs);
  dq::QSystemTable table(rs, opt.make_initial(rs));
  std::string why;
  auto point = dq::gamma_membership(rs, opt.level, lambda, &why);
  if (!point) throw std::invalid_argument("(level, weight) is not factorizable: " + why);
  Int dim = dq::demazure_dim(rs, opt.level, lambda, dq::kr_dims_from_table(table));
  Report report;
  report.command = "demdim";
  report.inputs = {{"type", rs.type().name()}, {"level", opt.level}, {"weight", lambda.coords}};
  report.data = {{"dim", int_json(dim)}, {"s", point->s}};
  emit(report, opt.table_mode);
  return 0;
}

int cmd_sl2_basis(const Options& opt) {
  dq::Partition xi = opt.make_partition();
  auto members = dq::sl2::index_set(xi);
  Report report;
  report.command = "sl2-basis";
  report.inputs = {{"partition", xi.parts()}};
  report.data = {{"count", members.size()}, {"vectors", members}};
  emit(report, opt.table_mode);
  return 0;
}

int cmd_sl2_char(const Options& opt) {
  dq::Partition xi = opt.make_partition();
  dq::sl2::BigradedCharacter chi = dq::sl2::graded_character_basis(xi);
  Report report;
  report.command = "sl2-char";
  report.inputs = {{"partition", xi.parts()}};
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : chi.terms())
    terms.push_back({{"weight", key.first}, {"grade", key.second}, {"mult", int_json(c)}});
  report.data = {{"dim", int_json(chi.mass())}, {"terms", std::move(terms)}};
  emit(report, opt.table_mode);
  return 0;
}

int cmd_verify_all(const Options& opt) {
  dq::SweepBounds bounds;
  if (opt.max_size > 0) bounds = bounds.clamped(opt.max_size);
  bool failed = false;
  for (const Report& report : dq::run_all_sweeps(bounds)) {
    emit(report, opt.table_mode);
    if (report.status == Status::Fail) failed = true;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of current-algebra module dimensions and characters"};
  app.require_subcommand(1);

  Options opt;
  bool json_mode = false;
  app.add_flag("--table", opt.table_mode, "human-readable output");
  app.add_flag("--json", json_mode, "JSON Lines output (the default)")
      ->excludes("--table");

  auto add_type = [&](CLI::App* cmd) {
    cmd->add_option("--type", opt.type, "Lie type letter A..G, or letter+rank like A2");
    cmd->add_option("--rank", opt.rank, "rank when --type is a bare letter");
  };
  auto add_weight = [&](CLI::App* cmd) {
    cmd->add_option("--weight", opt.weight, "comma-separated fundamental-weight coordinates");
  };

  CLI::App* roots = app.add_subcommand("roots", "positive roots with heights and d-values");
  add_type(roots);

  CLI::App* chr = app.add_subcommand("char", "irreducible character of a dominant weight");
  add_type(chr);
  add_weight(chr);

  CLI::App* dim = app.add_subcommand("dim", "dimension of the irreducible with given highest weight");
  add_type(dim);
  add_weight(dim);

  CLI::App* xi = app.add_subcommand("xi", "canonical partition tuple at a level");
  add_type(xi);
  add_weight(xi);
  xi->add_option("--level", opt.level, "level, a positive integer");

  CLI::App* sets = app.add_subcommand("sets", "index-set vectors with given count and weighted sum");
  sets->add_option("-r,--r", opt.r, "number of entries counted");
  sets->add_option("-s,--s", opt.s, "weighted sum");
  sets->add_option("-k,--k", opt.k, "support cut (with --half)");
  sets->add_option("--half", opt.half, "below: entries past k vanish; above: entries before k vanish");

  CLI::App* qsolve = app.add_subcommand("qsolve", "solve the character recursion up to m");
  add_type(qsolve);
  qsolve->add_option("--mmax", opt.mmax, "largest index to fill");
  qsolve->add_option("--initial-data", opt.initial_data, "JSON file defining the level-1 characters");

  CLI::App* qverify = app.add_subcommand(
      "qverify", "check recursion residuals, positivity, and mass identities");
  add_type(qverify);
  qverify->add_option("--mmax", opt.mmax, "largest index to fill");
  qverify->add_option("--initial-data", opt.initial_data, "JSON file defining the level-1 characters");

  CLI::App* demdim = app.add_subcommand("demdim", "factorized module dimension at (level, weight)");
  add_type(demdim);
  add_weight(demdim);
  demdim->add_option("--level", opt.level, "level, a positive integer");
  demdim->add_option("--initial-data", opt.initial_data, "JSON file defining the level-1 characters");

  CLI::App* sl2_basis = app.add_subcommand("sl2-basis", "monomial basis index vectors of a rank-1 fusion product");
  sl2_basis->add_option("--partition", opt.partition, "comma-separated parts");

  CLI::App* sl2_char = app.add_subcommand("sl2-char", "bigraded character of a rank-1 fusion product");
  sl2_char->add_option("--partition", opt.partition, "comma-separated parts");

  CLI::App* verify_all = app.add_subcommand("verify-all", "run every verification sweep");
  verify_all->add_option("--max-size", opt.max_size, "clamp all sweep bounds to this size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(opt);
    if (chr->parsed()) return cmd_char(opt);
    if (dim->parsed()) return cmd_dim(opt);
    if (xi->parsed()) return cmd_xi(opt);
    if (sets->parsed()) return cmd_sets(opt);
    if (qsolve->parsed()) return cmd_qsolve(opt);
    if (qverify->parsed()) return cmd_qverify(opt);
    if (demdim->parsed()) return cmd_demdim(opt);
    if (sl2_basis->parsed()) return cmd_sl2_basis(opt);
    if (sl2_char->parsed()) return cmd_sl2_char(opt);
    if (verify_all->parsed()) return cmd_verify_all(opt);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const dq::QSystemError& e) {
    Report report;
    report.command = "error";
    report.status = Status::Fail;
    report.counterexample = nlohmann::json{{"detail", e.what()}};
    emit(report, opt.table_mode);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
