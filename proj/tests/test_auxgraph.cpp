#include <doctest.h>

#include "fqc/auxgraph.hpp"
#include "fqc/generate.hpp"

using namespace fqc;

namespace {

PointSet full_space(std::uint64_t q, unsigned d) {
  GenSpec gen;
  gen.kind = GenKind::full_space;
  return generate_set(std::make_shared<Fq>(q), d, gen, 0);
}

PointSet make_set(std::uint64_t q, unsigned d, std::vector<Point> pts) {
  PointSet E;
  E.field = std::make_shared<Fq>(q);
  E.d = d;
  E.points = std::move(pts);
  E.validate();
  return E;
}

// Walks enumerated directly on the vertex set E x E via the adjacency
// predicate; independent of the convolution.
std::vector<BigInt> brute_walks(const PointSet& E, code_t r, unsigned kmax) {
  const Fq& F = E.F();
  const std::size_t m = E.size();
  std::vector<std::pair<std::size_t, std::size_t>> verts;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) verts.emplace_back(i, j);
  auto adj = [&](std::size_t a, std::size_t b) {
    return adjacency(F, E.points[verts[a].first], E.points[verts[a].second],
                     E.points[verts[b].first], E.points[verts[b].second], r);
  };
  std::vector<BigInt> w{BigInt(static_cast<unsigned long>(verts.size()))};
  std::vector<BigInt> c(verts.size(), 1), next(verts.size());
  for (unsigned k = 1; k <= kmax; ++k) {
    for (std::size_t a = 0; a < verts.size(); ++a) {
      next[a] = 0;
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (adj(a, b)) next[a] += c[b];
    }
    c.swap(next);
    BigInt total = 0;
    for (const auto& v : c) total += v;
    w.push_back(total);
  }
  return w;
}

}  // namespace

TEST_CASE("distance profiles") {
  auto E = make_set(3, 2, {{0, 0}, {1, 0}});
  auto prof = build_profiles(E);
  CHECK(prof.at(0, 0) == 1);
  CHECK(prof.at(0, 1) == 1);
  CHECK(prof.at(0, 2) == 0);

  auto full = full_space(3, 2);
  auto pf = build_profiles(full);
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(pf.at(i, 0) == 1);
    CHECK(pf.at(i, 1) == 4);
    CHECK(pf.at(i, 2) == 4);
  }

  auto single = make_set(3, 2, {{1, 1}});
  auto ps = build_profiles(single);
  CHECK(ps.at(0, 0) == 1);
  CHECK(ps.at(0, 1) == 0);
}

TEST_CASE("adjacency predicate") {
  Fq F(3);
  Point o{0, 0}, e1{1, 0};
  CHECK(adjacency(F, o, o, e1, e1, 1));
  CHECK_FALSE(adjacency(F, o, o, o, o, 1));  // v = v' forces distance 0
  CHECK_FALSE(adjacency(F, o, o, e1, e1, 2));
  CHECK_THROWS_AS(adjacency(F, o, o, e1, e1, 0), std::invalid_argument);
}

TEST_CASE("degrees on the full plane are 32") {
  auto E = full_space(3, 2);
  for (code_t r : {code_t(1), code_t(2)}) {
    AuxGraph aux(E, r);
    CHECK(aux.degree(0, 0) == 32);
    CHECK(aux.degree(4, 7) == 32);
  }
}

TEST_CASE("degree of a singleton is zero") {
  auto E = make_set(3, 2, {{1, 1}});
  AuxGraph aux(E, 1);
  CHECK(aux.degree(0, 0) == 0);
}

TEST_CASE("walk counts, regular case") {
  auto E = full_space(3, 2);
  auto w = AuxGraph(E, 1).walk_counts(2);
  CHECK(w[0] == 81);
  CHECK(w[1] == 2592);
  CHECK(w[2] == 82944);
}

TEST_CASE("walk counts, two disjoint edges") {
  auto E = make_set(3, 2, {{0, 0}, {1, 0}});
  auto w = AuxGraph(E, 1).walk_counts(2);
  CHECK(w[0] == 4);
  CHECK(w[1] == 4);
  CHECK(w[2] == 4);
}

TEST_CASE("degree power sums") {
  auto E = full_space(3, 2);
  AuxGraph aux(E, 1);
  CHECK(aux.degree_power_sum(1) == 2592);
  CHECK(aux.degree_power_sum(2) == 82944);

  auto T = make_set(3, 2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(AuxGraph(T, 1).degree_power_sum(1) == 20);
}

TEST_CASE("convolution walks agree with explicit enumeration") {
  for (std::uint64_t q : {3, 5}) {
    auto F = std::make_shared<Fq>(q);
    for (unsigned cse = 0; cse < 10; ++cse) {
      GenSpec gen;
      gen.kind = GenKind::uniform;
      gen.size = 2 + cse % 3;
      PointSet E = generate_set(F, 2, gen, 1234 + cse);
      code_t r = 1 + static_cast<code_t>(cse % (q - 1));
      CAPTURE(q);
      CAPTURE(cse);
      CHECK(AuxGraph(E, r).walk_counts(4) == brute_walks(E, r, 4));
    }
  }
}

TEST_CASE("walk inequalities on hand graphs") {
  // path on 3 vertices
  std::vector<BigInt> path3{3, 4, 6};
  for (const auto& ch : verify_walk_inequalities(path3)) CHECK(ch.holds);

  // triangle: first family with k = 3 holds with equality
  std::vector<BigInt> tri{3, 6, 12, 24};
  auto checks = verify_walk_inequalities(tri);
  for (const auto& ch : checks) CHECK(ch.holds);
  bool saw_equality = false;
  for (const auto& ch : checks)
    if (ch.name == "w1^3 <= w0^2*w3") saw_equality = ch.equality;
  CHECK(saw_equality);

  // edgeless graph
  std::vector<BigInt> empty{5, 0, 0, 0};
  for (const auto& ch : verify_walk_inequalities(empty)) CHECK(ch.holds);
}

TEST_CASE("corrupted walk counts are reported") {
  // w2 too small relative to w1 cannot come from a graph
  std::vector<BigInt> bogus{3, 10, 1};
  bool violation = false;
  for (const auto& ch : verify_walk_inequalities(bogus)) violation |= !ch.holds;
  CHECK(violation);
}

TEST_CASE("explicit graph walk counts") {
  ExplicitGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  CHECK(tri.walk_counts(3) == std::vector<BigInt>{3, 6, 12, 24});
}
