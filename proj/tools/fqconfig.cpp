// Command-line front end: exact counts, decompositions, witness search,
// bound evaluation, experiments, and the full verification grid.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fqc/bounds.hpp"
#include "fqc/configs.hpp"
#include "fqc/experiment.hpp"
#include "fqc/pointset_io.hpp"
#include "fqc/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string set_file;
  std::uint64_t q = 0;
  unsigned d = 2;
  long long r = 1;
  std::uint64_t seed = 0;
  bool as_json = false;
  bool as_csv = false;
  std::uint64_t budget = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_set) {
  if (needs_set) cmd->add_option("--set", o.set_file, "point-set file");
  cmd->add_option("--q", o.q, "field order (odd prime power)");
  cmd->add_option("--d", o.d, "dimension");
  cmd->add_option("--r", o.r, "dilation ratio (field code)");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_flag("--json", o.as_json, "JSON output");
  cmd->add_flag("--csv", o.as_csv, "CSV output");
  cmd->add_option("--budget", o.budget, "enumeration budget (nodes)");
}

fqc::PointSet load_set(const CommonOpts& o) {
  if (o.set_file.empty()) throw CLI::ValidationError("--set FILE is required");
  return fqc::read_pointset_file(o.set_file);
}

std::uint64_t budget_of(const CommonOpts& o) {
  return o.budget ? o.budget : fqc::default_budget();
}

json point_to_json(const fqc::Point& p) {
  json row = json::array();
  for (auto c : p) row.push_back(c);
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Similar-configuration counting and verification over F_q^d"};
  app.require_subcommand(1);

  CommonOpts opt;

  auto* cmd_field = app.add_subcommand("field-info", "describe F_q");
  add_common(cmd_field, opt, false);

  auto* cmd_sphere = app.add_subcommand("sphere", "sphere size and members");
  add_common(cmd_sphere, opt, false);
  long long sphere_t = 1;
  bool sphere_list = false;
  cmd_sphere->add_option("--t", sphere_t, "radius (field code)");
  cmd_sphere->add_flag("--list", sphere_list, "list members");

  auto* cmd_dist = app.add_subcommand("distances", "distance set of E");
  add_common(cmd_dist, opt, true);

  auto* cmd_quot = app.add_subcommand("quotient", "quotient set of the distance set");
  add_common(cmd_quot, opt, true);

  auto* cmd_count = app.add_subcommand("count", "|S_k(r)| or |P_k(r)|");
  add_common(cmd_count, opt, true);
  std::string count_pattern = "star:1";
  bool count_oracle = false;
  cmd_count->add_option("--pattern", count_pattern, "star:K or path:K");
  cmd_count->add_flag("--oracle", count_oracle, "also run the exhaustive oracle");

  auto* cmd_decomp = app.add_subcommand("decompose", "degenerate-class decomposition");
  add_common(cmd_decomp, opt, true);
  std::string decomp_pattern = "star:2";
  cmd_decomp->add_option("--pattern", decomp_pattern, "star:K or path:4");

  auto* cmd_walks = app.add_subcommand("walks", "walk counts of the auxiliary graph");
  add_common(cmd_walks, opt, true);
  unsigned walks_kmax = 4;
  cmd_walks->add_option("--kmax", walks_kmax, "maximum walk length");

  auto* cmd_search = app.add_subcommand("search", "witness search for a pattern");
  add_common(cmd_search, opt, true);
  std::string search_pattern = "star:2";
  bool distinct_tuples = false;
  cmd_search->add_option("--pattern", search_pattern, "star:K, path:K or cycle:K");
  cmd_search->add_flag("--require-distinct-tuples", distinct_tuples,
                       "exclude the identity assignment ys = xs");

  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate theorem bounds");
  add_common(cmd_bounds, opt, true);
  unsigned bounds_k = 2;
  cmd_bounds->add_option("--k", bounds_k, "star parameter k");

  auto* cmd_exp = app.add_subcommand("experiment", "reproducible witness experiments");
  add_common(cmd_exp, opt, false);
  std::string exp_pattern = "star:2";
  std::string exp_gen = "uniform";
  std::string exp_rsel = "all";
  std::vector<std::size_t> exp_sizes;
  unsigned exp_trials = 1;
  bool exp_counts = false, exp_timing = false;
  cmd_exp->add_option("--pattern", exp_pattern, "pattern kind:K");
  cmd_exp->add_option("--generator", exp_gen, "uniform|full-space|sphere|subspace");
  cmd_exp->add_option("--r-domain", exp_rsel, "all|squares|explicit (with --r)");
  cmd_exp->add_option("--sizes", exp_sizes, "set sizes")->required();
  cmd_exp->add_option("--trials", exp_trials, "trials per (size, r)");
  cmd_exp->add_flag("--count", exp_counts, "count nondegenerate witnesses");
  cmd_exp->add_flag("--timing", exp_timing, "record wall time (breaks byte determinism)");

  auto* cmd_verify = app.add_subcommand("verify-all", "run the verification grid");
  add_common(cmd_verify, opt, false);
  std::vector<std::uint64_t> verify_qs = {3, 5, 7, 9};
  std::vector<unsigned> verify_ds = {2, 3};
  cmd_verify->add_option("--grid-q", verify_qs, "field orders");
  cmd_verify->add_option("--grid-d", verify_ds, "dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help is not an error
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_field->parsed()) {
      fqc::Fq F(opt.q ? opt.q : 3);
      json j{{"q", F.q()}, {"p", F.p()}, {"e", F.e()}};
      if (F.e() > 1) j["modulus"] = F.modulus();
      j["qr_set"] = F.qr_set();
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (cmd_sphere->parsed()) {
      fqc::Fq F(opt.q ? opt.q : 3);
      auto t = static_cast<fqc::code_t>(sphere_t);
      json j{{"q", F.q()},
             {"d", opt.d},
             {"t", t},
             {"size", fqc::sphere_size_formula(F, opt.d, t)}};
      if (sphere_list) {
        fqc::Point origin(opt.d, 0);
        json members = json::array();
        for (const auto& p : fqc::sphere_enum(F, opt.d, origin, t))
          members.push_back(point_to_json(p));
        j["members"] = std::move(members);
      }
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (cmd_dist->parsed() || cmd_quot->parsed()) {
      fqc::PointSet E = load_set(opt);
      auto ds = fqc::distance_set(E);
      json j{{"q", E.F().q()}, {"d", E.d}, {"size", E.size()}};
      if (cmd_dist->parsed()) {
        j["distance_set"] = ds;
      } else {
        j["quotient_set"] = fqc::quotient_set(ds, E.F());
      }
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (cmd_count->parsed()) {
      fqc::PointSet E = load_set(opt);
      auto r = static_cast<fqc::code_t>(opt.r);
      fqc::PatternGraph G = fqc::PatternGraph::parse(count_pattern);
      unsigned k = static_cast<unsigned>(G.edges.size());
      fqc::BigInt fast;
      if (count_pattern.rfind("star:", 0) == 0)
        fast = fqc::count_star_tuples(E, r, k);
      else if (count_pattern.rfind("path:", 0) == 0)
        fast = fqc::count_path_tuples(E, r, k);
      else
        throw CLI::ValidationError("count supports star:K and path:K");
      json j{{"pattern", count_pattern}, {"r", r}, {"count", fast.get_str()}};
      if (count_oracle) {
        auto slow = fqc::count_tuples_exhaustive(E, r, G, budget_of(opt));
        j["oracle"] = slow;
        j["agree"] = fast == fqc::BigInt(slow);
        if (!j["agree"].get<bool>()) {
          std::cout << j.dump(2) << '\n';
          return kExitViolation;
        }
      }
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (cmd_decomp->parsed()) {
      fqc::PointSet E = load_set(opt);
      auto r = static_cast<fqc::code_t>(opt.r);
      fqc::DecompositionReport rep;
      if (decomp_pattern.rfind("star:", 0) == 0) {
        unsigned k = static_cast<unsigned>(std::stoul(decomp_pattern.substr(5)));
        rep = fqc::star_decomposition(E, r, k, budget_of(opt));
      } else if (decomp_pattern == "path:4") {
        rep = fqc::path4_decomposition(E, r, budget_of(opt));
      } else {
        throw CLI::ValidationError("decompose supports star:K and path:4");
      }
      json j{{"pattern", decomp_pattern},
             {"r", r},
             {"total", rep.total},
             {"nondegenerate", rep.nondegenerate},
             {"degenerate_union", rep.degenerate_union},
             {"classes", rep.classes}};
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (cmd_walks->parsed()) {
      fqc::PointSet E = load_set(opt);
      auto r = static_cast<fqc::code_t>(opt.r);
      auto w = fqc::AuxGraph(E, r).walk_counts(walks_kmax);
      json jw = json::array();
      for (const auto& v : w) jw.push_back(v.get_str());
      json checks = json::array();
      bool all_hold = true;
      for (const auto& ch : fqc::verify_walk_inequalities(w)) {
        checks.push_back({{"name", ch.name}, {"holds", ch.holds}, {"equality", ch.equality}});
        all_hold = all_hold && ch.holds;
      }
      json j{{"r", r}, {"walks", jw}, {"inequalities", checks}};
      std::cout << j.dump(2) << '\n';
      return all_hold ? kExitOk : kExitViolation;
    }

    if (cmd_search->parsed()) {
      fqc::PointSet E = load_set(opt);
      auto r = static_cast<fqc::code_t>(opt.r);
      fqc::PatternGraph G = fqc::PatternGraph::parse(search_pattern);
      auto res = fqc::find_witness(E, r, G, distinct_tuples);
      json j{{"pattern", search_pattern},
             {"r", r},
             {"found", res.witness.has_value()},
             {"nodes_visited", res.nodes_visited}};
      if (res.witness) {
        json xs = json::array(), ys = json::array();
        for (const auto& p : res.witness->xs) xs.push_back(point_to_json(p));
        for (const auto& p : res.witness->ys) ys.push_back(point_to_json(p));
        j["xs"] = std::move(xs);
        j["ys"] = std::move(ys);
      }
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (cmd_bounds->parsed()) {
      fqc::PointSet E = load_set(opt);
      auto r = static_cast<fqc::code_t>(opt.r);
      const auto q = E.F().q();
      const unsigned d = E.d;
      fqc::BigInt n(static_cast<unsigned long>(E.size()));
      fqc::AuxGraph aux(E, r);
      fqc::BigInt S1 = aux.degree_power_sum(1);

      json reports = json::array();
      bool violated = false;
      auto emit = [&](fqc::BoundReport rep) {
        json j{{"name", rep.name},
               {"hypothesis_ok", rep.hypothesis_ok},
               {"bound", rep.bound.get_str()},
               {"verdict", fqc::to_string(rep.verdict)}};
        if (rep.exact) j["exact"] = rep.exact->get_str();
        violated = violated || rep.verdict == fqc::Verdict::violated;
        reports.push_back(std::move(j));
      };

      auto s1rep = fqc::s1_lower_bound(q, d, n);
      s1rep.exact = S1;
      fqc::settle(s1rep);
      emit(s1rep);

      auto star_rep = fqc::star_decomposition(E, r, bounds_k, budget_of(opt));
      auto brep =
          fqc::star_B_lower_bound(n, bounds_k, S1, aux.degree_power_sum(bounds_k - 1));
      brep.exact = fqc::BigInt(static_cast<unsigned long>(star_rep.nondegenerate));
      fqc::settle(brep);
      emit(brep);

      auto w = aux.walk_counts(4);
      auto path_rep = fqc::path4_decomposition(E, r, budget_of(opt));
      auto crep = fqc::path_C_lower_bound(n, q, d, w[1], w[2], w[3], w[4]);
      crep.exact = fqc::BigInt(static_cast<unsigned long>(path_rep.nondegenerate));
      fqc::settle(crep);
      emit(crep);

      json thresholds;
      try {
        auto th = fqc::star_pair_threshold(q, d, bounds_k);
        thresholds["star_pair"] = {{"size", th.size.get_str()},
                                   {"r_domain", fqc::to_string(th.domain)}};
      } catch (const std::exception& ex) {
        thresholds["star_pair"] = {{"error", ex.what()}};
      }
      try {
        auto th = fqc::path4_threshold(q, d);
        thresholds["path4"] = {{"size", th.size.get_str()},
                               {"r_domain", fqc::to_string(th.domain)}};
      } catch (const std::exception& ex) {
        thresholds["path4"] = {{"error", ex.what()}};
      }

      json j{{"reports", reports}, {"thresholds", thresholds}};
      std::cout << j.dump(2) << '\n';
      return violated ? kExitViolation : kExitOk;
    }

    if (cmd_exp->parsed()) {
      fqc::ExperimentSpec spec;
      spec.q = opt.q ? opt.q : 3;
      spec.d = opt.d;
      spec.pattern = exp_pattern;
      spec.sizes = exp_sizes;
      spec.trials = exp_trials;
      spec.seed = opt.seed;
      spec.count_nondegenerate = exp_counts;
      spec.record_timing = exp_timing;
      spec.budget = budget_of(opt);
      if (exp_rsel == "all")
        spec.r_selection = fqc::RSelection::all_nonzero;
      else if (exp_rsel == "squares")
        spec.r_selection = fqc::RSelection::squares_only;
      else if (exp_rsel == "explicit") {
        spec.r_selection = fqc::RSelection::explicit_list;
        spec.r_list = {static_cast<fqc::code_t>(opt.r)};
      } else {
        throw CLI::ValidationError("bad --r-domain");
      }
      if (exp_gen == "uniform")
        spec.generator.kind = fqc::GenKind::uniform;
      else if (exp_gen == "full-space")
        spec.generator.kind = fqc::GenKind::full_space;
      else if (exp_gen == "sphere")
        spec.generator.kind = fqc::GenKind::sphere;
      else if (exp_gen == "subspace")
        spec.generator.kind = fqc::GenKind::subspace;
      else
        throw CLI::ValidationError("bad --generator");

      auto rows = fqc::run_experiment(spec);
      if (opt.as_json)
        fqc::write_json(std::cout, rows);
      else
        fqc::write_csv(std::cout, rows);
      for (const auto& row : rows)
        if (!row.error.empty()) return kExitViolation;
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      fqc::VerifyGrid grid;
      grid.qs = verify_qs;
      grid.ds = verify_ds;
      grid.seed = opt.seed;
      auto report = fqc::verify_all(grid);
      fqc::write_json(std::cout, report);
      return report.ok() ? kExitOk : kExitViolation;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
