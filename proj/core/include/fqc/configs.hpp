#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqc/auxgraph.hpp"
#include "fqc/geom.hpp"

namespace fqc {

/// A pattern graph on vertices [0, n) with a nonempty simple edge set.
struct PatternGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::string name;

  static PatternGraph star(unsigned k);
  static PatternGraph path(unsigned k);
  static PatternGraph cycle(unsigned k);
  /// Parses "star:K", "path:K", "cycle:K".
  static PatternGraph parse(const std::string& text);

  void validate() const;
};

/// Two injective placements of a pattern into E with r-scaled nonzero
/// edge distances.
struct Witness {
  std::vector<Point> xs;
  std::vector<Point> ys;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("enumeration budget exceeded (" + std::to_string(budget) +
                           " nodes)") {}
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Reads FQCONFIG_BUDGET if set, else kDefaultBudget.
std::uint64_t default_budget();

/// |S_k(r)| via the degree-power-sum identity on the auxiliary graph.
BigInt count_star_tuples(const PointSet& E, code_t r, unsigned k);

/// |P_k(r)| = w_k of the auxiliary graph.
BigInt count_path_tuples(const PointSet& E, code_t r, unsigned k);

/// Exhaustive ordered-tuple count over E^{2n} satisfying the edge constraints,
/// with no distinctness requirement. Independent of the convolution path;
/// serves as the brute-force oracle for S_k and P_k.
std::uint64_t count_tuples_exhaustive(const PointSet& E, code_t r, const PatternGraph& G,
                                      std::uint64_t budget = kDefaultBudget);

struct DecompositionReport {
  std::uint64_t total = 0;
  std::map<std::string, std::uint64_t> classes;
  std::uint64_t nondegenerate = 0;       // |B| or |C|
  std::uint64_t degenerate_union = 0;    // total - nondegenerate
};

/// Exact S_k(r) decomposition into the coincidence classes A_ij / A'_ij
/// (2 <= i < j <= k+1, 1-based labels) and the nondegenerate remainder B.
DecompositionReport star_decomposition(const PointSet& E, code_t r, unsigned k,
                                       std::uint64_t budget = kDefaultBudget);

/// Exact P_4(r) decomposition into A_1..A_6, A'_1..A'_6, the I/II/III split of
/// A_6 u A'_6, and the nondegenerate remainder C. Verifies I+II+III = |A6 u A'6|.
DecompositionReport path4_decomposition(const PointSet& E, code_t r,
                                        std::uint64_t budget = kDefaultBudget);

struct SearchResult {
  std::optional<Witness> witness;
  std::uint64_t nodes_visited = 0;
};

/// First witness in lexicographic (xs, ys) order by point index, or nothing.
/// xs are assigned before ys; partial x-assignments are pruned when some edge
/// needs an r-scaled distance no pair of E realizes.
SearchResult find_witness(const PointSet& E, code_t r, const PatternGraph& G,
                          bool require_distinct_tuples = false);

/// Number of ordered witness pairs (distinct xs, distinct ys).
std::uint64_t count_witnesses(const PointSet& E, code_t r, const PatternGraph& G,
                              std::uint64_t budget = kDefaultBudget);

/// Re-validates a witness against the defining constraints.
bool validate_witness(const PointSet& E, code_t r, const PatternGraph& G,
                      const Witness& w);

}  // namespace fqc
