#include "fixtures.hpp"
#include "oracles.hpp"

#include "ppi/design_games.hpp"
#include "ppi/errors.hpp"

#include <doctest.h>

using fixtures::q;
using ppi::DesignerProblem;
using ppi::Rational;
using ppi::RationalMatrix;

namespace {

Rational expected(const RationalMatrix& dist, const RationalMatrix& payoff) {
  Rational total = 0;
  for (std::size_t i = 0; i < dist.size(); ++i)
    for (std::size_t j = 0; j < dist[i].size(); ++j) total += dist[i][j] * payoff[i][j];
  return total;
}

RationalMatrix constant(std::size_t n, const Rational& v) { return RationalMatrix(n, std::vector<Rational>(n, v)); }

// Designer problem on a random zero-sum game with random state payoffs.
DesignerProblem random_problem(std::mt19937_64& rng) {
  const std::size_t n = 2 + oracle::below(rng, 2);
  DesignerProblem p;
  p.u = constant(n, 0);
  for (auto& row : p.u)
    for (auto& v : row) v = Rational(static_cast<long>(oracle::below(rng, 7)) - 3);
  const long w = 1 + static_cast<long>(oracle::below(rng, 4));
  p.prior = {Rational(w) / 5, 1 - Rational(w) / 5};
  for (int k = 0; k < 2; ++k) {
    auto ud = constant(n, 0);
    for (auto& row : ud)
      for (auto& v : row) v = Rational(static_cast<long>(oracle::below(rng, 4)));
    p.u_d.push_back(ud);
  }
  return p;
}

}  // namespace

TEST_CASE("zero-sum solutions") {
  const auto rps = ppi::solve_zero_sum(fixtures::rps().u);
  CHECK(rps.value == 0);
  CHECK(rps.strategy1 == std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)});
  CHECK(rps.strategy2 == std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)});

  const auto pennies = ppi::solve_zero_sum({{q(1), q(-1)}, {q(-1), q(1)}});
  CHECK(pennies.value == 0);
  CHECK(pennies.strategy1 == std::vector<Rational>{q(1, 2), q(1, 2)});

  const auto dom = ppi::solve_zero_sum({{q(1), q(1)}, {q(0), q(0)}});
  CHECK(dom.value == 1);
  CHECK(dom.strategy1 == std::vector<Rational>{q(1), q(0)});
}

TEST_CASE("rock-paper-scissors designer") {
  const auto p = fixtures::rps();
  CHECK(ppi::independent_baseline(p) == q(6, 9));
  CHECK(ppi::relaxed_bound(p) == q(2));
  const auto sol = ppi::designer_optimum(p);
  // The LP optimum over kernels whose state average is the uniform
  // equilibrium; a hand-built kernel attains the same value.
  CHECK(sol.payoff == q(10, 9));
  CHECK(sol.equilibrium == constant(3, q(1, 9)));
  for (std::size_t w = 0; w < 2; ++w) {
    Rational total = 0;
    for (const auto& row : sol.kernel[w])
      for (const auto& v : row) {
        CHECK(v >= 0);
        total += v;
      }
    CHECK(total == 1);
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(q(1, 2) * sol.kernel[0][i][j] + q(1, 2) * sol.kernel[1][i][j] == q(1, 9));
  CHECK(q(1, 2) * expected(sol.kernel[0], p.u_d[0]) + q(1, 2) * expected(sol.kernel[1], p.u_d[1]) == sol.payoff);

  const auto s = ppi::recommendation_structure(p, sol);
  CHECK(ppi::is_private_private(s, Rational(0)));
}

TEST_CASE("state-independent designer utility") {
  auto p = fixtures::rps();
  p.u_d = {p.u_d[0], p.u_d[0]};
  const Rational flat = expected(constant(3, q(1, 9)), p.u_d[0]);
  CHECK(ppi::designer_optimum(p).payoff == flat);
  CHECK(ppi::independent_baseline(p) == flat);
}

TEST_CASE("degenerate prior") {
  auto p = fixtures::rps();
  p.prior = {q(0), q(1)};
  const auto sol = ppi::designer_optimum(p);
  CHECK(sol.payoff == expected(constant(3, q(1, 9)), p.u_d[1]));
  CHECK(sol.kernel[1] == constant(3, q(1, 9)));
}

TEST_CASE("supplied equilibrium and zero baseline") {
  auto p = fixtures::rps();
  RationalMatrix eq = constant(3, q(0));
  eq[0][0] = q(1, 2);
  eq[0][1] = q(1, 2);
  p.equilibrium = eq;
  RationalMatrix reward = constant(3, q(0));
  reward[2][2] = q(1);
  p.u_d = {reward, reward};
  CHECK(ppi::independent_baseline(p) == 0);
  CHECK(ppi::designer_optimum(p).payoff == 0);
}

TEST_CASE("problem validation") {
  auto p = fixtures::rps();
  p.prior = {q(1, 2), q(1, 3)};
  CHECK_THROWS_AS(ppi::validate(p), ppi::DomainError);
  p = fixtures::rps();
  p.u_d.pop_back();
  CHECK_THROWS_AS(ppi::validate(p), ppi::DomainError);
  p = fixtures::rps();
  p.u[0].pop_back();
  CHECK_THROWS_AS(ppi::validate(p), ppi::DomainError);
}

TEST_CASE("designer optimum lies between the baseline and the relaxed bound") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_problem(rng);
    const auto sol = ppi::designer_optimum(p);
    CHECK(sol.payoff >= ppi::independent_baseline(p));
    CHECK(sol.payoff <= ppi::relaxed_bound(p));
    const auto s = ppi::recommendation_structure(p, sol);
    CHECK(ppi::is_private_private(s, Rational(0)));
  }
}
