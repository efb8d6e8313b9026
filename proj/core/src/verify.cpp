#include "fqc/verify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fqc/generate.hpp"

namespace fqc {

namespace {

struct Ctx {
  const VerifyGrid& grid;
  VerifyReport& report;

  void record(const std::string& check, const std::string& instance, bool pass,
              std::string detail = "") {
    report.results.push_back({check, instance, pass, std::move(detail)});
  }

  PointSet random_set(std::shared_ptr<const Fq> F, unsigned d, std::size_t size,
                      std::uint64_t stream) {
    GenSpec gen;
    gen.kind = GenKind::uniform;
    gen.size = size;
    return generate_set(F, d, gen, CounterRng::derive(grid.seed, stream));
  }
};

std::string inst(std::uint64_t q, unsigned d, const std::string& extra = "") {
  std::string s = "q=" + std::to_string(q) + " d=" + std::to_string(d);
  if (!extra.empty()) s += " " + extra;
  return s;
}

void check_sphere_partition(Ctx& c) {
  for (auto q : c.grid.qs)
    for (auto d : c.grid.ds) {
      Fq F(q);
      long long total = 0;
      for (code_t t = 0; t < F.q(); ++t) total += sphere_size_formula(F, d, t);
      long long qd = 1;
      for (unsigned i = 0; i < d; ++i) qd *= static_cast<long long>(q);
      c.record("sphere_partition", inst(q, d), total == qd,
               "sum=" + std::to_string(total));
    }
}

void check_sphere_formula_vs_enum(Ctx& c) {
  for (auto q : c.grid.qs)
    for (auto d : c.grid.ds) {
      auto F = std::make_shared<Fq>(q);
      Point origin(d, 0);
      bool pass = true;
      for (code_t t = 0; t < F->q() && pass; ++t)
        pass = static_cast<long long>(sphere_enum(*F, d, origin, t).size()) ==
               sphere_size_formula(*F, d, t);
      c.record("sphere_formula_vs_enum", inst(q, d), pass);
    }
}

void check_sphere_translation(Ctx& c) {
  std::uint64_t stream = 1000;
  for (auto q : c.grid.qs)
    for (auto d : c.grid.ds) {
      Fq F(q);
      CounterRng rng(CounterRng::derive(c.grid.seed, stream++));
      bool pass = true;
      for (unsigned trial = 0; trial < 10 && pass; ++trial) {
        Point center(d);
        for (auto& x : center) x = static_cast<code_t>(rng.below(F.q()));
        code_t t = static_cast<code_t>(rng.below(F.q()));
        pass = static_cast<long long>(sphere_enum(F, d, center, t).size()) ==
               sphere_size_formula(F, d, t);
      }
      c.record("sphere_translation_invariance", inst(q, d), pass);
    }
}

void check_bisector_size(Ctx& c) {
  std::uint64_t stream = 2000;
  for (auto q : c.grid.qs)
    for (auto d : c.grid.ds) {
      Fq F(q);
      CounterRng rng(CounterRng::derive(c.grid.seed, stream++));
      long long expect = 1;
      for (unsigned i = 0; i + 1 < d; ++i) expect *= static_cast<long long>(q);
      bool pass = true;
      for (unsigned trial = 0; trial < 10 && pass; ++trial) {
        Point u(d), w(d);
        do {
          for (auto& x : u) x = static_cast<code_t>(rng.below(F.q()));
          for (auto& x : w) x = static_cast<code_t>(rng.below(F.q()));
        } while (u == w);
        pass = static_cast<long long>(bisector_enum(F, d, u, w).size()) == expect;
      }
      c.record("bisector_size", inst(q, d), pass);
    }
}

void check_quotient_theorems(Ctx& c) {
  {
    auto F = std::make_shared<Fq>(3);
    GenSpec gen;
    gen.kind = GenKind::full_space;
    PointSet E = generate_set(F, 4, gen, 0);
    auto rep = quotient_threshold_check(E);
    c.record("quotient_theorem_even", "E=F_3^4",
             rep.hypothesis_ok && rep.verdict == Verdict::holds);
  }
  {
    auto F = std::make_shared<Fq>(5);
    GenSpec gen;
    gen.kind = GenKind::full_space;
    PointSet E = generate_set(F, 3, gen, 0);
    auto rep = quotient_threshold_check(E);
    c.record("quotient_theorem_odd", "E=F_5^3",
             rep.hypothesis_ok && rep.verdict == Verdict::holds);
  }
  {
    auto F = std::make_shared<Fq>(3);
    GenSpec gen;
    gen.kind = GenKind::uniform;
    gen.size = 2;
    PointSet E = generate_set(F, 2, gen, c.grid.seed);
    auto rep = quotient_threshold_check(E);
    c.record("quotient_theorem_vacuous", "small E",
             !rep.hypothesis_ok && rep.verdict == Verdict::vacuous);
  }
}

void check_sk_identity(Ctx& c) {
  std::uint64_t stream = 3000;
  for (unsigned cse = 0; cse < c.grid.random_cases; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    std::size_t size = 2 + rng.below(4);
    PointSet E = c.random_set(F, 2, size, stream * 7 + cse);
    code_t r = 1 + static_cast<code_t>(rng.below(q - 1));
    for (unsigned k = 1; k <= 2; ++k) {
      BigInt fast = count_star_tuples(E, r, k);
      std::uint64_t slow = count_tuples_exhaustive(E, r, PatternGraph::star(k));
      c.record("sk_degree_power_identity",
               inst(q, 2, "|E|=" + std::to_string(size) + " r=" + std::to_string(r) +
                              " k=" + std::to_string(k)),
               fast == BigInt(slow), fast.get_str() + " vs " + std::to_string(slow));
    }
  }
}

void check_pk_identity(Ctx& c) {
  std::uint64_t stream = 4000;
  for (unsigned cse = 0; cse < c.grid.random_cases; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    std::size_t size = 2 + rng.below(3);
    PointSet E = c.random_set(F, 2, size, stream * 7 + cse);
    code_t r = 1 + static_cast<code_t>(rng.below(q - 1));
    auto w = AuxGraph(E, r).walk_counts(4);
    bool pass = true;
    std::string detail;
    for (unsigned k = 1; k <= 4; ++k) {
      std::uint64_t slow = count_tuples_exhaustive(E, r, PatternGraph::path(k));
      if (w[k] != BigInt(slow)) {
        pass = false;
        detail = "k=" + std::to_string(k);
      }
    }
    c.record("pk_walk_identity",
             inst(q, 2, "|E|=" + std::to_string(size) + " r=" + std::to_string(r)),
             pass, detail);
  }
}

void check_walk_degree_identity(Ctx& c) {
  std::uint64_t stream = 5000;
  for (unsigned cse = 0; cse < c.grid.random_cases; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    std::size_t size = 2 + rng.below(5);
    PointSet E = c.random_set(F, 2, size, stream * 7 + cse);
    code_t r = 1 + static_cast<code_t>(rng.below(q - 1));
    AuxGraph aux(E, r);
    auto w = aux.walk_counts(2);
    bool pass = w[1] == aux.degree_power_sum(1) && w[2] == aux.degree_power_sum(2);
    c.record("w1_w2_equal_degree_sums",
             inst(q, 2, "|E|=" + std::to_string(size) + " r=" + std::to_string(r)),
             pass);
  }
}

void check_decomposition_star(Ctx& c) {
  std::uint64_t stream = 6000;
  for (unsigned cse = 0; cse < c.grid.random_cases; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    std::size_t size = 3 + rng.below(3);
    PointSet E = c.random_set(F, 2, size, stream * 7 + cse);
    code_t r = 1 + static_cast<code_t>(rng.below(q - 1));
    unsigned k = 2 + cse % 2;
    auto rep = star_decomposition(E, r, k);
    bool closure = rep.nondegenerate + rep.degenerate_union == rep.total;
    bool total_ok = BigInt(rep.total) == count_star_tuples(E, r, k);
    bool witness_ok = rep.nondegenerate == count_witnesses(E, r, PatternGraph::star(k));
    c.record("star_decomposition_closure",
             inst(q, 2, "|E|=" + std::to_string(size) + " r=" + std::to_string(r) +
                            " k=" + std::to_string(k)),
             closure && total_ok && witness_ok);
  }
}

void check_decomposition_path4(Ctx& c) {
  std::uint64_t stream = 7000;
  for (unsigned cse = 0; cse < c.grid.random_cases / 2 + 1; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    std::size_t size = 3 + rng.below(3);
    PointSet E = c.random_set(F, 2, size, stream * 7 + cse);
    code_t r = 1 + static_cast<code_t>(rng.below(q - 1));
    auto rep = path4_decomposition(E, r);
    bool closure = rep.nondegenerate + rep.degenerate_union == rep.total;
    bool split = rep.classes.at("I") + rep.classes.at("II") + rep.classes.at("III") ==
                 rep.classes.at("A6_union");
    bool total_ok = BigInt(rep.total) == count_path_tuples(E, r, 4);
    c.record("path4_decomposition_closure",
             inst(q, 2, "|E|=" + std::to_string(size) + " r=" + std::to_string(r)),
             closure && split && total_ok);
  }
}

void check_walk_inequalities_aux(Ctx& c) {
  std::uint64_t stream = 8000;
  for (auto q : c.grid.qs) {
    auto F = std::make_shared<Fq>(q);
    PointSet E = c.random_set(F, 2, std::min<std::size_t>(6, q * q), stream + q);
    for (code_t r : {code_t(1), static_cast<code_t>(q - 1)}) {
      auto w = AuxGraph(E, r).walk_counts(4);
      auto checks = verify_walk_inequalities(w);
      bool pass = std::all_of(checks.begin(), checks.end(),
                              [](const auto& ch) { return ch.holds; });
      c.record("walk_inequalities_aux", inst(q, 2, "r=" + std::to_string(r)), pass);
    }
  }
}

void check_walk_inequalities_random(Ctx& c) {
  CounterRng rng(CounterRng::derive(c.grid.seed, 9000));
  bool all_pass = true;
  std::string detail;
  for (unsigned g = 0; g < 100; ++g) {
    std::size_t n = 2 + rng.below(11);
    ExplicitGraph graph(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.below(2)) graph.add_edge(i, j);
    auto w = graph.walk_counts(6);
    for (const auto& ch : verify_walk_inequalities(w))
      if (!ch.holds) {
        all_pass = false;
        detail = "graph " + std::to_string(g) + ": " + ch.name;
      }
  }
  c.record("walk_inequalities_random_graphs", "100 graphs, n<=12", all_pass, detail);
}

void check_holder_and_chain(Ctx& c) {
  std::uint64_t stream = 10000;
  for (unsigned cse = 0; cse < c.grid.random_cases; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    std::size_t size = 2 + rng.below(5);
    PointSet E = c.random_set(F, 2, size, stream * 7 + cse);
    code_t r = 1 + static_cast<code_t>(rng.below(q - 1));
    AuxGraph aux(E, r);
    BigInt n(static_cast<unsigned long>(size));
    std::vector<BigInt> S{BigInt(size) * BigInt(size)};
    for (unsigned k = 1; k <= 3; ++k) S.push_back(aux.degree_power_sum(k));
    auto holder = s_holder_checks(n, S);
    auto P = aux.walk_counts(4);
    auto chain = p_chain_checks(n, P);
    bool pass =
        std::all_of(holder.begin(), holder.end(), [](const auto& h) { return h.holds; }) &&
        std::all_of(chain.begin(), chain.end(), [](const auto& h) { return h.holds; });
    c.record("holder_and_p_chain",
             inst(q, 2, "|E|=" + std::to_string(size) + " r=" + std::to_string(r)),
             pass);
  }
}

void check_bound_validity(Ctx& c) {
  std::uint64_t stream = 11000;
  for (unsigned cse = 0; cse < c.grid.random_cases; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    unsigned d = (cse % 4 < 2) ? 2 : 3;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    // Keep n >= q^{d/2} so the S_1 hypothesis is met where possible.
    std::size_t size = std::min<std::size_t>(4 + rng.below(3), q * q);
    PointSet E = c.random_set(F, d, size, stream * 7 + cse);
    code_t r = (d % 2 == 1) ? F->qr_set()[rng.below(F->qr_set().size())]
                            : 1 + static_cast<code_t>(rng.below(q - 1));
    AuxGraph aux(E, r);
    BigInt n(static_cast<unsigned long>(size));
    BigInt S1 = aux.degree_power_sum(1);

    auto s1rep = s1_lower_bound(q, d, n);
    s1rep.exact = S1;
    settle(s1rep);

    unsigned k = 2;
    auto star_rep = star_decomposition(E, r, k);
    auto brep = star_B_lower_bound(n, k, S1, aux.degree_power_sum(k - 1));
    brep.exact = BigInt(static_cast<unsigned long>(star_rep.nondegenerate));
    settle(brep);

    auto path_rep = path4_decomposition(E, r);
    auto w = aux.walk_counts(4);
    auto crep = path_C_lower_bound(n, q, d, w[1], w[2], w[3], w[4]);
    crep.exact = BigInt(static_cast<unsigned long>(path_rep.nondegenerate));
    settle(crep);

    bool pass = s1rep.verdict != Verdict::violated && brep.verdict != Verdict::violated &&
                crep.verdict != Verdict::violated;
    c.record("bound_validity_sweep",
             inst(q, d, "|E|=" + std::to_string(size) + " r=" + std::to_string(r)),
             pass);
  }
}

void check_dilation_symmetry(Ctx& c) {
  std::uint64_t stream = 12000;
  for (unsigned cse = 0; cse < c.grid.random_cases / 2 + 1; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    std::size_t size = 3 + rng.below(4);
    PointSet E = c.random_set(F, 2, size, stream * 7 + cse);
    code_t r = 1 + static_cast<code_t>(rng.below(q - 1));
    PatternGraph G = (cse % 2 == 0) ? PatternGraph::star(2) : PatternGraph::path(2);
    bool fwd = find_witness(E, r, G).witness.has_value();
    bool bwd = find_witness(E, F->inv(r), G).witness.has_value();
    c.record("dilation_symmetry",
             inst(q, 2, "|E|=" + std::to_string(size) + " r=" + std::to_string(r)),
             fwd == bwd);
  }
}

void check_monotonicity(Ctx& c) {
  std::uint64_t stream = 13000;
  for (unsigned cse = 0; cse < 20; ++cse) {
    std::uint64_t q = (cse % 2 == 0) ? 3 : 5;
    auto F = std::make_shared<Fq>(q);
    CounterRng rng(CounterRng::derive(c.grid.seed, stream + cse));
    std::size_t size = 2 + rng.below(4);
    PointSet bigger = c.random_set(F, 2, size + 1, stream * 7 + cse);
    PointSet smaller = bigger;
    smaller.points.pop_back();
    code_t r = 1 + static_cast<code_t>(rng.below(q - 1));
    bool pass = count_star_tuples(smaller, r, 1) <= count_star_tuples(bigger, r, 1) &&
                count_path_tuples(smaller, r, 2) <= count_path_tuples(bigger, r, 2);
    c.record("tuple_count_monotonicity",
             inst(q, 2, "|E|=" + std::to_string(size) + "+1"), pass);
  }
}

using CheckFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> reg = {
      {"sphere_partition", check_sphere_partition},
      {"sphere_formula_vs_enum", check_sphere_formula_vs_enum},
      {"sphere_translation_invariance", check_sphere_translation},
      {"bisector_size", check_bisector_size},
      {"quotient_theorems", check_quotient_theorems},
      {"sk_degree_power_identity", check_sk_identity},
      {"pk_walk_identity", check_pk_identity},
      {"w1_w2_equal_degree_sums", check_walk_degree_identity},
      {"star_decomposition_closure", check_decomposition_star},
      {"path4_decomposition_closure", check_decomposition_path4},
      {"walk_inequalities_aux", check_walk_inequalities_aux},
      {"walk_inequalities_random_graphs", check_walk_inequalities_random},
      {"holder_and_p_chain", check_holder_and_chain},
      {"bound_validity_sweep", check_bound_validity},
      {"dilation_symmetry", check_dilation_symmetry},
      {"tuple_count_monotonicity", check_monotonicity},
  };
  return reg;
}

}  // namespace

std::vector<std::string> registered_checks() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

VerifyReport verify_all(const VerifyGrid& grid) {
  VerifyReport report;
  if (grid.qs.empty() || grid.ds.empty()) return report;
  Ctx ctx{grid, report};
  for (const auto& [name, fn] : registry()) fn(ctx);
  return report;
}

void write_json(std::ostream& out, const VerifyReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json j{{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  nlohmann::json top{{"ok", report.ok()},
                     {"failures", report.failures()},
                     {"results", std::move(arr)}};
  out << top.dump(2) << '\n';
}

}  // namespace fqc
