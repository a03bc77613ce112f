#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toriccode/error.hpp"
#include "toriccode/intlattice.hpp"
#include "toriccode/toric_set.hpp"

using namespace toric;

namespace {

std::int64_t det_of(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return oracle::det(rows);
}

}  // namespace

TEST_CASE("rank_rational examples") {
  const auto tri = incidence(families::cycle(3));
  CHECK(std::abs(det_of(tri)) == 2);  // cofactor oracle
  CHECK(rank_rational(tri) == 3);
  CHECK(rank_rational(incidence(families::cycle(4))) == 3);
  CHECK(rank_rational(incidence(families::complete_graph(4))) == 4);
  CHECK(rank_rational(IntMatrix(3, 4)) == 0);
}

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).invariant_factors == std::vector<std::int64_t>{1, 1});
  CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).invariant_factors ==
        std::vector<std::int64_t>{1, 6});
  const auto rel = difference_lattice(families::cycle(3).vectors());
  CHECK(rel == IntMatrix::from_rows({{-1, 0, 1}, {0, -1, 1}}));
  CHECK(oracle::invariant_factors_by_minors(rel) == std::vector<std::int64_t>{1, 1});
  CHECK(smith_normal_form(rel).invariant_factors == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("smith_normal_form agrees with minor gcds and round-trips") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    const auto snf = smith_normal_form(m, true);
    CHECK(snf.invariant_factors == oracle::invariant_factors_by_minors(m));
    for (std::size_t i = 1; i < snf.invariant_factors.size(); ++i)
      CHECK(snf.invariant_factors[i] % snf.invariant_factors[i - 1] == 0);
    REQUIRE(snf.transforms.has_value());
    CHECK(multiply(multiply(snf.transforms->left, m), snf.transforms->right) == snf.diagonal);
    CHECK(std::abs(det_of(snf.transforms->left)) == 1);
    CHECK(std::abs(det_of(snf.transforms->right)) == 1);
    CHECK(snf.rank == rank_rational(m));
  }
}

TEST_CASE("smith_normal_form signals overflow") {
  const std::int64_t big = std::int64_t{1} << 62;
  const auto m = IntMatrix::from_rows({{3, big}, {big, 5}});
  CHECK_THROWS_AS(smith_normal_form(m), ArithmeticOverflow);
}

TEST_CASE("phi_injective") {
  CHECK(phi_injective(families::cycle(3), 9));
  CHECK_FALSE(phi_injective(IntMatrix::from_rows({{2, 0}}), 3));
  CHECK(phi_injective(IntMatrix::from_rows({{2, 0}}), 4));  // gcd(3, 2) = 1
  CHECK_THROWS_AS(phi_injective(families::cycle(3), 2), InputError);
  // Torsion-free quotient never obstructs.
  for (std::int64_t q : {3, 4, 5, 7, 8, 9}) CHECK(phi_injective(families::path(4), q));
}

TEST_CASE("ci_classify examples") {
  const auto tri = ci_classify(families::cycle(3), 3);
  CHECK(tri.applicable);
  CHECK(tri.is_ci);
  const auto c4 = ci_classify(families::cycle(4), 3);
  CHECK(c4.applicable);
  CHECK_FALSE(c4.is_ci);
  CHECK_FALSE(c4.vectors_independent);
  const auto k4 = ci_classify(families::complete_graph(4), 4);
  CHECK_FALSE(k4.is_ci);
  CHECK_FALSE(k4.vectors_independent);
  const auto mixed = ci_classify(Clutter::from_edges(3, {{1}, {2, 3}}), 3);
  CHECK_FALSE(mixed.applicable);
  CHECK_FALSE(mixed.is_ci);
  CHECK_THROWS_AS(ci_classify(families::cycle(3), 2), InputError);
}

TEST_CASE("ci verdict matches the geometric torus test") {
  std::vector<Clutter> battery = {families::cycle(3),        families::cycle(4),  families::cycle(5),
                                  families::path(3),         families::path(5),   families::star(3),
                                  families::complete_graph(4), families::cycle_with_tail(3, 1),
                                  families::cycle_with_tail(5, 1), families::cycle(6)};
  for (std::uint64_t q : {3, 4, 5}) {
    const auto f = FiniteField::from_order(q);
    for (const auto& c : battery) {
      const auto rep = ci_classify(c, static_cast<std::int64_t>(q));
      CHECK(rep.is_ci == equals_torus(enumerate_x(c, f)));
    }
  }
  for (int n : {3, 5, 7, 9})
    for (std::int64_t q : {3, 4, 5}) CHECK(ci_classify(families::cycle(n), q).is_ci);
}
