#include "fqc/configs.hpp"

#include <algorithm>
#include <cstdlib>

namespace fqc {

PatternGraph PatternGraph::star(unsigned k) {
  PatternGraph g;
  g.n = k + 1;
  for (unsigned i = 1; i <= k; ++i) g.edges.emplace_back(0, i);
  g.name = "star:" + std::to_string(k);
  return g;
}

PatternGraph PatternGraph::path(unsigned k) {
  PatternGraph g;
  g.n = k + 1;
  for (unsigned i = 0; i < k; ++i) g.edges.emplace_back(i, i + 1);
  g.name = "path:" + std::to_string(k);
  return g;
}

PatternGraph PatternGraph::cycle(unsigned k) {
  PatternGraph g;
  g.n = k;
  for (unsigned i = 0; i < k; ++i) g.edges.emplace_back(i, (i + 1) % k);
  g.name = "cycle:" + std::to_string(k);
  return g;
}

PatternGraph PatternGraph::parse(const std::string& text) {
  auto pos = text.find(':');
  if (pos == std::string::npos) throw std::invalid_argument("pattern must be kind:K");
  std::string kind = text.substr(0, pos);
  unsigned k = static_cast<unsigned>(std::stoul(text.substr(pos + 1)));
  if (kind == "star") return star(k);
  if (kind == "path") return path(k);
  if (kind == "cycle") {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    return cycle(k);
  }
  throw std::invalid_argument("unknown pattern kind: " + kind);
}

void PatternGraph::validate() const {
  if (edges.empty()) throw std::invalid_argument("pattern has no edges");
  for (auto [a, b] : edges)
    if (a == b || a >= n || b >= n) throw std::invalid_argument("bad pattern edge");
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FQCONFIG_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

BigInt count_star_tuples(const PointSet& E, code_t r, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (E.size() == 0) return 0;
  return AuxGraph(E, r).degree_power_sum(k);
}

BigInt count_path_tuples(const PointSet& E, code_t r, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (E.size() == 0) return 0;
  return AuxGraph(E, r).walk_counts(k)[k];
}

namespace {

struct TupleEnum {
  const PointSet& E;
  code_t r;
  const PatternGraph& G;
  bool distinct;
  std::uint64_t budget;
  std::function<void(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>
      on_tuple;

  const Fq& F = E.F();
  std::size_t m = E.size();
  std::vector<std::vector<code_t>> dmat;
  std::vector<std::vector<std::size_t>> back;  // back[v] = earlier neighbors of v
  std::vector<std::size_t> xs, ys;
  std::uint64_t nodes = 0;

  void run() {
    dmat.assign(m, std::vector<code_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        dmat[i][j] = dist(F, E.points[i], E.points[j]);
    back.assign(G.n, {});
    for (auto [a, b] : G.edges) {
      if (a > b) std::swap(a, b);
      back[b].push_back(a);
    }
    rec(0);
  }

  void rec(std::size_t v) {
    if (v == G.n) {
      on_tuple(xs, ys);
      return;
    }
    for (std::size_t xi = 0; xi < m; ++xi) {
      if (distinct && std::find(xs.begin(), xs.end(), xi) != xs.end()) continue;
      bool x_ok = true;
      for (std::size_t u : back[v])
        if (dmat[xs[u]][xi] == 0) {
          x_ok = false;
          break;
        }
      if (!x_ok) continue;
      for (std::size_t yi = 0; yi < m; ++yi) {
        if (++nodes > budget) throw BudgetExceeded(budget);
        if (distinct && std::find(ys.begin(), ys.end(), yi) != ys.end()) continue;
        bool ok = true;
        for (std::size_t u : back[v])
          if (dmat[ys[u]][yi] != F.mul(r, dmat[xs[u]][xi])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        xs.push_back(xi);
        ys.push_back(yi);
        rec(v + 1);
        xs.pop_back();
        ys.pop_back();
      }
    }
  }
};

bool all_distinct(const std::vector<std::size_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

}  // namespace

std::uint64_t count_tuples_exhaustive(const PointSet& E, code_t r, const PatternGraph& G,
                                      std::uint64_t budget) {
  if (r == 0) throw std::invalid_argument("dilation ratio must be nonzero");
  G.validate();
  std::uint64_t count = 0;
  TupleEnum en{E, r, G, false, budget,
               [&](const auto&, const auto&) { ++count; }};
  en.run();
  return count;
}

DecompositionReport star_decomposition(const PointSet& E, code_t r, unsigned k,
                                       std::uint64_t budget) {
  if (r == 0) throw std::invalid_argument("dilation ratio must be nonzero");
  PatternGraph G = PatternGraph::star(k);
  DecompositionReport rep;
  // Coincidence classes run over leaf pairs; labels use the 1-based vertex
  // numbering with the center as vertex 1.
  for (unsigned i = 2; i <= k + 1; ++i)
    for (unsigned j = i + 1; j <= k + 1; ++j) {
      rep.classes["A" + std::to_string(i) + std::to_string(j)] = 0;
      rep.classes["A'" + std::to_string(i) + std::to_string(j)] = 0;
    }
  TupleEnum en{E, r, G, false, budget, [&](const auto& xs, const auto& ys) {
                 ++rep.total;
                 bool degenerate = false;
                 for (unsigned i = 2; i <= k + 1; ++i)
                   for (unsigned j = i + 1; j <= k + 1; ++j) {
                     if (xs[i - 1] == xs[j - 1]) {
                       ++rep.classes["A" + std::to_string(i) + std::to_string(j)];
                       degenerate = true;
                     }
                     if (ys[i - 1] == ys[j - 1]) {
                       ++rep.classes["A'" + std::to_string(i) + std::to_string(j)];
                       degenerate = true;
                     }
                   }
                 if (!degenerate && all_distinct(xs) && all_distinct(ys))
                   ++rep.nondegenerate;
               }};
  en.run();
  rep.degenerate_union = rep.total - rep.nondegenerate;
  return rep;
}

DecompositionReport path4_decomposition(const PointSet& E, code_t r,
                                        std::uint64_t budget) {
  if (r == 0) throw std::invalid_argument("dilation ratio must be nonzero");
  PatternGraph G = PatternGraph::path(4);
  // Index pairs behind A_1..A_6, 0-based: the six non-adjacent vertex pairs of
  // the 4-path (adjacent pairs cannot coincide, their edge distance is nonzero).
  static constexpr std::pair<std::size_t, std::size_t> kPairs[6] = {
      {0, 2}, {0, 3}, {0, 4}, {2, 4}, {1, 4}, {1, 3}};
  DecompositionReport rep;
  for (int i = 1; i <= 6; ++i) {
    rep.classes["A" + std::to_string(i)] = 0;
    rep.classes["A'" + std::to_string(i)] = 0;
  }
  rep.classes["I"] = rep.classes["II"] = rep.classes["III"] = 0;
  rep.classes["A6_union"] = 0;
  TupleEnum en{E, r, G, false, budget, [&](const auto& xs, const auto& ys) {
                 ++rep.total;
                 bool degenerate = false;
                 for (int i = 0; i < 6; ++i) {
                   auto [a, b] = kPairs[i];
                   if (xs[a] == xs[b]) {
                     ++rep.classes["A" + std::to_string(i + 1)];
                     degenerate = true;
                   }
                   if (ys[a] == ys[b]) {
                     ++rep.classes["A'" + std::to_string(i + 1)];
                     degenerate = true;
                   }
                 }
                 bool x24 = xs[1] == xs[3], y24 = ys[1] == ys[3];
                 if (x24 || y24) ++rep.classes["A6_union"];
                 if (x24 && !y24) ++rep.classes["I"];
                 if (!x24 && y24) ++rep.classes["II"];
                 if (x24 && y24) ++rep.classes["III"];
                 if (!degenerate && all_distinct(xs) && all_distinct(ys))
                   ++rep.nondegenerate;
               }};
  en.run();
  rep.degenerate_union = rep.total - rep.nondegenerate;
  return rep;
}

namespace {

struct WitnessSearch {
  const PointSet& E;
  code_t r;
  const PatternGraph& G;
  bool require_distinct_tuples;

  const Fq& F = E.F();
  std::size_t m = E.size();
  std::vector<std::vector<code_t>> dmat;
  std::vector<bool> dist_realized;  // by some pair of distinct points
  std::vector<std::vector<std::size_t>> back;
  std::vector<std::size_t> xs, ys;
  std::uint64_t nodes = 0;
  std::optional<Witness> found;

  void prepare() {
    dmat.assign(m, std::vector<code_t>(m, 0));
    dist_realized.assign(F.q(), false);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        dmat[i][j] = dist(F, E.points[i], E.points[j]);
        if (i != j) dist_realized[dmat[i][j]] = true;
      }
    back.assign(G.n, {});
    for (auto [a, b] : G.edges) {
      if (a > b) std::swap(a, b);
      back[b].push_back(a);
    }
  }

  bool rec_x(std::size_t v) {
    if (v == G.n) return rec_y(0);
    for (std::size_t xi = 0; xi < m; ++xi) {
      ++nodes;
      if (std::find(xs.begin(), xs.end(), xi) != xs.end()) continue;
      bool ok = true;
      for (std::size_t u : back[v]) {
        code_t dx = dmat[xs[u]][xi];
        // Edge distance must be nonzero and the r-scaled target distance must
        // exist somewhere in E for the y-phase to have any chance.
        if (dx == 0 || !dist_realized[F.mul(r, dx)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      xs.push_back(xi);
      if (rec_x(v + 1)) return true;
      xs.pop_back();
    }
    return false;
  }

  bool rec_y(std::size_t v) {
    if (v == G.n) {
      if (require_distinct_tuples && xs == ys) return false;
      Witness w;
      for (std::size_t i : xs) w.xs.push_back(E.points[i]);
      for (std::size_t i : ys) w.ys.push_back(E.points[i]);
      found = std::move(w);
      return true;
    }
    for (std::size_t yi = 0; yi < m; ++yi) {
      ++nodes;
      if (std::find(ys.begin(), ys.end(), yi) != ys.end()) continue;
      bool ok = true;
      for (std::size_t u : back[v])
        if (dmat[ys[u]][yi] != F.mul(r, dmat[xs[u]][xs[v]])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ys.push_back(yi);
      if (rec_y(v + 1)) return true;
      ys.pop_back();
    }
    return false;
  }
};

}  // namespace

SearchResult find_witness(const PointSet& E, code_t r, const PatternGraph& G,
                          bool require_distinct_tuples) {
  if (r == 0) throw std::invalid_argument("dilation ratio must be nonzero");
  G.validate();
  SearchResult res;
  if (G.n > E.size()) return res;
  WitnessSearch s{E, r, G, require_distinct_tuples};
  s.prepare();
  s.rec_x(0);
  res.witness = std::move(s.found);
  res.nodes_visited = s.nodes;
  if (res.witness && !validate_witness(E, r, G, *res.witness))
    throw std::logic_error("witness failed self-check");
  return res;
}

std::uint64_t count_witnesses(const PointSet& E, code_t r, const PatternGraph& G,
                              std::uint64_t budget) {
  if (r == 0) throw std::invalid_argument("dilation ratio must be nonzero");
  G.validate();
  if (G.n > E.size()) return 0;
  std::uint64_t count = 0;
  TupleEnum en{E, r, G, true, budget, [&](const auto&, const auto&) { ++count; }};
  en.run();
  return count;
}

bool validate_witness(const PointSet& E, code_t r, const PatternGraph& G,
                      const Witness& w) {
  const Fq& F = E.F();
  if (w.xs.size() != G.n || w.ys.size() != G.n) return false;
  auto in_E = [&](const Point& p) {
    return std::find(E.points.begin(), E.points.end(), p) != E.points.end();
  };
  for (const Point& p : w.xs)
    if (!in_E(p)) return false;
  for (const Point& p : w.ys)
    if (!in_E(p)) return false;
  for (std::size_t i = 0; i < G.n; ++i)
    for (std::size_t j = i + 1; j < G.n; ++j)
      if (w.xs[i] == w.xs[j] || w.ys[i] == w.ys[j]) return false;
  for (auto [a, b] : G.edges) {
    code_t dx = dist(F, w.xs[a], w.xs[b]);
    if (dx == 0) return false;
    if (dist(F, w.ys[a], w.ys[b]) != F.mul(r, dx)) return false;
  }
  return true;
}

}  // namespace fqc
