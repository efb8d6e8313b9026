#include <doctest.h>

#include <algorithm>

#include "fqc/geom.hpp"

using namespace fqc;

namespace {

PointSet make_set(std::uint64_t q, unsigned d, std::vector<Point> pts) {
  PointSet E;
  E.field = std::make_shared<Fq>(q);
  E.d = d;
  E.points = std::move(pts);
  E.validate();
  return E;
}

}  // namespace

TEST_CASE("norm") {
  Fq F3(3), F5(5);
  CHECK(norm(F3, {1, 0}) == 1);
  CHECK(norm(F5, {1, 2}) == 0);  // nonzero null vector, -1 is a QR mod 5
  CHECK(norm(F3, {1, 1, 1}) == 0);
}

TEST_CASE("sphere size formula, hand values") {
  Fq F3(3), F5(5);
  CHECK(sphere_size_formula(F3, 2, 1) == 4);
  CHECK(sphere_size_formula(F3, 2, 0) == 1);
  CHECK(sphere_size_formula(F5, 2, 0) == 9);
  CHECK(sphere_size_formula(F3, 3, 1) == 6);
  CHECK_THROWS_AS(sphere_size_formula(F3, 1, 0), std::invalid_argument);
}

TEST_CASE("sphere enumeration matches formula and members check out") {
  for (std::uint64_t q : {3, 5, 7, 9}) {
    Fq F(q);
    for (unsigned d : {2u, 3u}) {
      Point origin(d, 0);
      for (code_t t = 0; t < q; ++t) {
        CAPTURE(q);
        CAPTURE(d);
        CAPTURE(t);
        auto pts = sphere_enum(F, d, origin, t);
        CHECK(static_cast<long long>(pts.size()) == sphere_size_formula(F, d, t));
        for (const auto& p : pts) CHECK(norm(F, p) == t);
      }
    }
  }
}

TEST_CASE("sphere enumeration, explicit small case") {
  Fq F(3);
  auto pts = sphere_enum(F, 2, {0, 0}, 1);
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<Point>{{0, 1}, {0, 2}, {1, 0}, {2, 0}});
  auto single = sphere_enum(F, 2, {1, 1}, 0);
  CHECK(single == std::vector<Point>{{1, 1}});
}

TEST_CASE("bisector") {
  Fq F(3);
  auto b = bisector_enum(F, 2, {0, 0}, {1, 0});
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<Point>{{2, 0}, {2, 1}, {2, 2}});
  CHECK(bisector_enum(F, 3, {0, 0, 0}, {1, 0, 0}).size() == 9);
  CHECK_THROWS_AS(bisector_enum(F, 2, {1, 1}, {1, 1}), std::invalid_argument);
  // every member is genuinely equidistant
  for (const auto& v : b)
    CHECK(dist(F, v, {0, 0}) == dist(F, v, {1, 0}));
}

TEST_CASE("distance set") {
  auto E = make_set(3, 2, {{0, 0}, {1, 0}});
  CHECK(distance_set(E) == std::set<code_t>{0, 1});
  CHECK(distance_set(E, false) == std::set<code_t>{1});

  std::vector<Point> all;
  for (code_t a = 0; a < 3; ++a)
    for (code_t b = 0; b < 3; ++b) all.push_back({a, b});
  CHECK(distance_set(make_set(3, 2, all)) == std::set<code_t>{0, 1, 2});

  CHECK(distance_set(make_set(3, 2, {{1, 2}})) == std::set<code_t>{0});
}

TEST_CASE("quotient set") {
  Fq F(3);
  CHECK(quotient_set({0, 1}, F) == std::set<code_t>{0, 1});
  CHECK(quotient_set({0, 1, 2}, F) == std::set<code_t>{0, 1, 2});
  CHECK(quotient_set({0}, F).empty());
}

TEST_CASE("pointset validation") {
  CHECK_THROWS_AS(make_set(3, 2, {{0, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_set(3, 2, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_set(3, 2, {{0, 5}}), std::invalid_argument);
}
