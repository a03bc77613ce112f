#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "toriccode/error.hpp"
#include "toriccode/toric_set.hpp"

using namespace toric;

namespace {

std::set<std::vector<FieldElement>> as_points(const ToricSet& x) {
  std::set<std::vector<FieldElement>> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.insert(x.point(i).coords);
  return out;
}

}  // namespace

TEST_CASE("enumerate_x sizes") {
  CHECK(enumerate_x(families::cycle(3), FiniteField::make(3, 2)).size() == 64);
  CHECK(enumerate_x(families::complete_graph(4), FiniteField::make(2, 2)).size() == 27);
  const auto f3 = FiniteField::make(3, 1);
  const auto c4 = families::cycle(4);
  CHECK(oracle::toric_points(c4, f3).size() == 4);
  CHECK(enumerate_x(c4, f3).size() == 4);
}

TEST_CASE("enumerate_x matches direct enumeration with field arithmetic") {
  const std::vector<Clutter> clutters = {families::cycle(3), families::cycle(4), families::complete_graph(4),
                                         families::path(3), Clutter::from_edges(3, {{1}, {2, 3}}),
                                         Clutter::from_edges(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}})};
  for (std::uint64_t q : {3, 4, 5, 7}) {
    const auto f = FiniteField::from_order(q);
    for (const auto& c : clutters) {
      const auto x = enumerate_x(c, f);
      CHECK(as_points(x) == oracle::toric_points(c, f));
    }
  }
}

TEST_CASE("enumerate_x is independent of worker partitioning") {
  const auto f = FiniteField::make(5, 1);
  const auto c = families::complete_graph(4);
  const auto base = enumerate_x(c, f);
  for (unsigned t : {2u, 3u, 4u}) CHECK(enumerate_x(c, f, {kDefaultEnumerationBudget, t}) == base);
}

TEST_CASE("enumerate_x honors the budget") {
  const auto f = FiniteField::make(3, 2);
  try {
    enumerate_x(families::cycle(5), f, {1000, 1});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 32768);
  }
}

TEST_CASE("points are canonical with unit coordinates") {
  const auto x = enumerate_x(families::complete_graph(4), FiniteField::make(2, 2));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto p = x.point(i);
    CHECK(p.coords[0] == FieldElement(1));
    for (auto c : p.coords) CHECK_FALSE(c.is_zero());
    if (i) {
      auto a = x.indices(i - 1), b = x.indices(i);
      CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
}

TEST_CASE("canonicalize scales the first nonzero coordinate to 1") {
  const auto f = FiniteField::make(5, 1);
  const auto p = canonicalize(f, {FieldElement(0), FieldElement(3), FieldElement(1)});
  CHECK(p.coords == std::vector<FieldElement>{FieldElement(0), FieldElement(1), FieldElement(2)});
  CHECK_THROWS_AS(canonicalize(f, {FieldElement(0), FieldElement(0)}), InputError);
}

TEST_CASE("projective_torus") {
  const auto f3 = FiniteField::make(3, 1);
  const auto t = projective_torus(2, f3);
  CHECK(t.size() == 2);
  CHECK(t.point(0).coords == std::vector<FieldElement>{FieldElement(1), FieldElement(1)});
  CHECK(t.point(1).coords == std::vector<FieldElement>{FieldElement(1), FieldElement(2)});
  CHECK(projective_torus(3, FiniteField::make(3, 2)).size() == 64);
  CHECK(projective_torus(3, f3).size() == 4);
  CHECK(equals_torus(projective_torus(4, FiniteField::make(5, 1))));
  CHECK_THROWS_AS(projective_torus(1, f3), InputError);
}

TEST_CASE("equals_torus examples") {
  CHECK(equals_torus(enumerate_x(families::cycle(3), FiniteField::make(3, 2))));
  const auto c4 = enumerate_x(families::cycle(4), FiniteField::make(3, 1));
  CHECK(c4.size() == 4);
  CHECK_FALSE(equals_torus(c4));
  const auto path = enumerate_x(families::path(3), FiniteField::make(3, 1));
  CHECK(path.size() == 2);
  CHECK(equals_torus(path));
}

TEST_CASE("profile") {
  const auto tri = profile(families::cycle(3), FiniteField::make(3, 2));
  CHECK(tri.size == 64);
  CHECK(tri.rank == 3);
  CHECK(tri.full_rank);
  CHECK(tri.degree_matches);
  const auto k4 = profile(families::complete_graph(4), FiniteField::make(3, 1));
  CHECK(k4.size == 8);
  CHECK(k4.rank == 4);
  CHECK(k4.torus_degree == 8);
  CHECK(k4.degree_matches);
  const auto c4 = profile(families::cycle(4), FiniteField::make(3, 1));
  CHECK(c4.rank == 3);
  CHECK_FALSE(c4.full_rank);
}

TEST_CASE("X is closed under multiplication") {
  std::mt19937 rng(11);
  for (const auto& c : {families::cycle(4), families::complete_graph(4), families::cycle(5)}) {
    const auto x = enumerate_x(c, FiniteField::make(2, 2));
    std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
    for (int i = 0; i < 100; ++i) CHECK(x.contains(multiply_points(x, pick(rng), pick(rng))));
  }
}

TEST_CASE("|X| divides (q-1)^(n-1) for uniform full-rank clutters") {
  for (std::uint64_t q : {3, 4, 5, 7}) {
    const auto f = FiniteField::from_order(q);
    for (const auto& c : {families::cycle(3), families::complete_graph(4), families::cycle(5),
                          families::cycle_with_tail(3, 1)}) {
      const auto pr = profile(c, f);
      REQUIRE(pr.full_rank);
      CHECK(pr.torus_degree % pr.size == 0);
    }
  }
}

TEST_CASE("CSV dump uses shifted primitive-power indices") {
  const auto t = projective_torus(2, FiniteField::make(3, 1));
  std::ostringstream os;
  t.write_csv(os);
  CHECK(os.str() == "t1,t2\n1,1\n1,2\n");
}

TEST_CASE("constructor normalizes, sorts and deduplicates") {
  const auto f = FiniteField::make(5, 1);
  const ToricSet x(f, 2, ToricSource::kPoints, {1, 2, 0, 1, 0, 3, 2, 1});
  REQUIRE(x.size() == 2);
  CHECK(std::vector<std::uint32_t>(x.indices(0).begin(), x.indices(0).end()) == std::vector<std::uint32_t>{0, 1});
  CHECK(std::vector<std::uint32_t>(x.indices(1).begin(), x.indices(1).end()) == std::vector<std::uint32_t>{0, 3});
  CHECK_FALSE(x.is_group());
  CHECK(projective_torus(2, f).is_group());
  CHECK_THROWS_AS(ToricSet(f, 2, ToricSource::kPoints, {0, 4}), InputError);
  CHECK_THROWS_AS(ToricSet(f, 2, ToricSource::kPoints, {0, 1, 2}), InputError);
}

TEST_CASE("generators") {
  const auto f = FiniteField::make(5, 1);
  const auto t = projective_torus(3, f);
  CHECK(generators(t).size() == 2);  // (Z/4)^2
  const auto x = enumerate_x(families::cycle(4), FiniteField::make(7, 1));
  const auto g = generators(x);
  CHECK_FALSE(g.empty());
  CHECK(g.size() <= 4);
  CHECK_THROWS_AS(generators(ToricSet(f, 2, ToricSource::kPoints, {0, 0, 0, 1})), InputError);
}
