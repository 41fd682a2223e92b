#include "fixtures.hpp"
#include "oracles.hpp"

#include "ppi/errors.hpp"
#include "ppi/uniqueness.hpp"

#include <doctest.h>

using ppi::AtomicDist;
using ppi::BinaryMatrix;

namespace {

BinaryMatrix transpose(const BinaryMatrix& m) {
  BinaryMatrix t(m.front().size(), std::vector<std::uint8_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

ppi::GridSet set_of(const BinaryMatrix& m) {
  std::vector<std::uint8_t> cells;
  for (const auto& row : m) cells.insert(cells.end(), row.begin(), row.end());
  return ppi::GridSet({2, m.size()}, std::move(cells));
}

}  // namespace

TEST_CASE("conjugacy test examples") {
  const auto grid = ppi::uniform_grid(256);
  CHECK(ppi::is_pareto_optimal_2x2(grid, grid, 1.0 / 256));
  const AtomicDist quarter({{0.25, 0.5}, {0.75, 0.5}});
  CHECK_FALSE(ppi::is_pareto_optimal_2x2(quarter, quarter, 1e-9));
  CHECK(ppi::is_pareto_optimal_2x2(AtomicDist::point_mass(0.5), AtomicDist({{0.0, 0.5}, {1.0, 0.5}}), 1e-9));
  CHECK(ppi::is_pareto_optimal_2x2(quarter, ppi::conjugate(quarter), 1e-9));
  CHECK_THROWS_AS(ppi::is_pareto_optimal_2x2(quarter, AtomicDist::point_mass(0.3), 1e-9), ppi::PreconditionError);
}

TEST_CASE("Lorentz test examples") {
  CHECK(ppi::lorentz_uniqueness_2d(fixtures::upper_triangle(8)));
  CHECK(ppi::lorentz_uniqueness_2d(fixtures::halfspace(8)));
  CHECK_FALSE(ppi::lorentz_uniqueness_2d(fixtures::block_pattern(4)));
  CHECK_FALSE(ppi::lorentz_uniqueness_2d(fixtures::block_pattern(8)));
  CHECK(ppi::lorentz_uniqueness_2d(ppi::GridSet({2, 6}, std::vector<std::uint8_t>(36, 1))));
  CHECK(ppi::lorentz_uniqueness_2d(ppi::GridSet({2, 6}, std::vector<std::uint8_t>(36, 0))));
  // Rectangular matrices are supported.
  CHECK(ppi::lorentz_uniqueness({{1, 1, 1}, {1, 0, 0}}));
  CHECK_FALSE(ppi::lorentz_uniqueness({{1, 0, 1}, {0, 1, 0}}));
}

TEST_CASE("switch test examples") {
  CHECK_FALSE(ppi::switch_uniqueness_matrix({{1, 0}, {0, 1}}));
  CHECK(ppi::switch_uniqueness_matrix({{1, 1}, {0, 0}}));
  CHECK(ppi::switch_uniqueness_matrix({{1, 1, 1}, {1, 1, 0}, {1, 0, 0}}));
  const auto sw = ppi::find_switch({{0, 1, 0}, {1, 0, 0}});
  REQUIRE(sw);
  const auto mate = ppi::marginal_mate({{0, 1, 0}, {1, 0, 0}});
  REQUIRE(mate);
  CHECK(*mate == BinaryMatrix{{1, 0, 0}, {0, 1, 0}});
  CHECK_FALSE(ppi::marginal_mate({{1, 1}, {1, 0}}));
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(ppi::validate_matrix({}), ppi::DomainError);
  CHECK_THROWS_AS(ppi::validate_matrix({{1, 0}, {1}}), ppi::DomainError);
  CHECK_THROWS_AS(ppi::validate_matrix({{2, 0}}), ppi::DomainError);
  CHECK_THROWS_AS(ppi::brute_force_marginal_mates(BinaryMatrix(6, std::vector<std::uint8_t>(6, 0))),
                  ppi::ResourceError);
}

TEST_CASE("brute force enumeration matches exhaustive counting") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = oracle::random_matrix(rng, 1 + oracle::below(rng, 4), 1 + oracle::below(rng, 4), oracle::uniform(rng));
    const auto mates = ppi::brute_force_marginal_mates(m);
    CHECK(mates.size() == oracle::count_mates_exhaustive(m));
    CHECK(std::find(mates.begin(), mates.end(), m) != mates.end());
    for (const auto& x : mates) CHECK(oracle::marginals(x) == oracle::marginals(m));
  }
}

TEST_CASE("switch, Lorentz and enumeration agree") {
  std::mt19937_64 rng(42);
  int unique = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = oracle::random_matrix(rng, 1 + oracle::below(rng, 5), 1 + oracle::below(rng, 5), oracle::uniform(rng));
    const bool by_switch = ppi::switch_uniqueness_matrix(m);
    const bool by_lorentz = ppi::lorentz_uniqueness(m);
    const bool by_count = ppi::brute_force_marginal_mates(m).size() == 1;
    CHECK(by_switch == by_lorentz);
    CHECK(by_switch == by_count);
    CHECK(by_lorentz == ppi::lorentz_uniqueness(transpose(m)));
    const auto mate = ppi::marginal_mate(m);
    CHECK(mate.has_value() == !by_switch);
    if (mate) {
      CHECK(*mate != m);
      CHECK(oracle::marginals(*mate) == oracle::marginals(m));
    }
    unique += by_switch;
  }
  CHECK(unique > 50);
  CHECK(unique < 450);
}

TEST_CASE("additive sets are sets of uniqueness") {
  const auto tri = fixtures::halfspace(6);
  const auto h = ppi::additive_set_test(tri, 1.0 / 24);
  REQUIRE(h);
  CHECK(ppi::verify_additive_witness(tri, *h, 1.0 / 24));
  CHECK_FALSE(ppi::additive_set_test(fixtures::block_pattern(4), 1.0 / 16));
  CHECK_THROWS_AS(ppi::additive_set_test(tri, 0.0), ppi::DomainError);

  std::mt19937_64 rng(43);
  int additive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t R = 2 + oracle::below(rng, 4);
    const auto m = oracle::random_matrix(rng, R, R, oracle::uniform(rng));
    const auto set = set_of(m);
    const auto w = ppi::additive_set_test(set, 1.0 / (4.0 * static_cast<double>(R)));
    if (!w) continue;
    ++additive;
    CHECK(ppi::verify_additive_witness(set, *w, 1.0 / (4.0 * static_cast<double>(R)), 1e-7));
    CHECK(ppi::lorentz_uniqueness(m));
    if (R <= 4) CHECK(oracle::count_mates_exhaustive(m) == 1);
    else CHECK(ppi::brute_force_marginal_mates(m).size() == 1);
  }
  CHECK(additive > 10);
}

TEST_CASE("additive sets in three dimensions") {
  // {i + j + k >= R} on a 3-dimensional grid.
  const std::size_t R = 3;
  std::vector<std::uint8_t> cells(R * R * R);
  for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = (c / 9 + (c / 3) % 3 + c % 3) >= R ? 1 : 0;
  const ppi::GridSet set({3, R}, cells);
  const auto h = ppi::additive_set_test(set, 0.05);
  REQUIRE(h);
  CHECK(ppi::verify_additive_witness(set, *h, 0.05));
}

TEST_CASE("partition uniqueness examples") {
  const auto three = fixtures::three_state(0.25);
  CHECK(ppi::partition_uniqueness_grid(three));
  const auto two = ppi::to_partition(fixtures::block_pattern(4));
  const auto report = ppi::partition_uniqueness_report(two);
  CHECK_FALSE(report.unique);
  REQUIRE(report.alternative);
  for (std::size_t axis = 0; axis < 2; ++axis)
    for (std::size_t k = 0; k < 2; ++k) {
      const auto a = ppi::grid_projections(*report.alternative, axis, k);
      const auto b = ppi::grid_projections(two, axis, k);
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-7));
    }
  CHECK(ppi::partition_uniqueness_grid(ppi::to_partition(fixtures::upper_triangle(6))));
  CHECK_THROWS_AS(ppi::partition_uniqueness_grid(fixtures::three_state(0.25, 40)), ppi::ResourceError);
}

TEST_CASE("partition LP agrees with the per-cell oracle") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t R = 2 + oracle::below(rng, 3), m = 2 + oracle::below(rng, 2);
    const auto g = oracle::random_partition(rng, 2, R, m);
    CHECK(ppi::partition_uniqueness_grid(g) == oracle::partition_unique_per_cell(g));
  }
  // Binary partitions are unique exactly when the Lorentz test passes.
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t R = 2 + oracle::below(rng, 4);
    const auto m = oracle::random_matrix(rng, R, R, oracle::uniform(rng));
    const auto set = set_of(m);
    CHECK(ppi::partition_uniqueness_grid(ppi::to_partition(set)) == ppi::lorentz_uniqueness(m));
  }
}
