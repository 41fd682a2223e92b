#include "fixtures.hpp"
#include "oracles.hpp"

#include "ppi/disclosure.hpp"
#include "ppi/errors.hpp"

#include <doctest.h>

using fixtures::q;
using ppi::ExactAtomicDist;
using ppi::ExactStructure;
using ppi::Rational;

namespace {

// P(t = k | omega, s_1 = v) read off the disclosure table.
Rational transition(const ExactStructure& d, std::size_t omega, std::size_t v, std::size_t k) {
  Rational total = 0;
  for (std::size_t t = 0; t < d.alphabets()[1]; ++t) total += d.prob(omega, v * d.alphabets()[1] + t);
  return d.prob(omega, v * d.alphabets()[1] + k) / total;
}

}  // namespace

TEST_CASE("optimal disclosure distribution") {
  const auto d = ppi::optimal_disclosure_dist(fixtures::symmetric_beliefs(q(3, 4)));
  CHECK(d == ExactAtomicDist({{q(0), q(1, 4)}, {q(1, 2), q(1, 2)}, {q(1), q(1, 4)}}));
  CHECK(ppi::optimal_disclosure_dist(ExactAtomicDist::point_mass(q(2, 5))) ==
        ExactAtomicDist({{q(0), q(3, 5)}, {q(1), q(2, 5)}}));
  for (long k = 11; k <= 19; ++k) {
    const Rational r = q(k, 20);
    CHECK(ppi::revelation_probability(ppi::optimal_disclosure_dist(fixtures::symmetric_beliefs(r))) == 2 * (1 - r));
  }
}

TEST_CASE("sampling rule") {
  CHECK(ppi::sample_disclosure(0.75, 1, 0.0) == 0.25);
  CHECK(ppi::sample_disclosure(1.0, 1, 0.37) == 0.37);
  CHECK(ppi::sample_disclosure(0.75, 0, 1.0) == 0.25);
  CHECK_THROWS_AS(ppi::sample_disclosure(0.0, 1, 0.5), ppi::DomainError);
  CHECK_THROWS_AS(ppi::sample_disclosure(1.0, 0, 0.5), ppi::DomainError);
  CHECK_THROWS_AS(ppi::sample_disclosure(0.5, 2, 0.5), ppi::DomainError);
  CHECK_THROWS_AS(ppi::sample_disclosure(0.5, 1, 1.5), ppi::DomainError);
}

TEST_CASE("finite disclosure for the 3/4 signal") {
  const auto d = ppi::finite_disclosure(fixtures::symmetric_signal(q(3, 4)));
  REQUIRE(d.alphabets() == std::vector<std::size_t>{2, 3});
  CHECK(ppi::is_private_private(d));
  CHECK(ppi::posterior_dist(d, 1) == ExactAtomicDist({{q(0), q(1, 4)}, {q(1, 2), q(1, 2)}, {q(1), q(1, 4)}}));
  CHECK(ppi::posterior_dist(d, 0) == fixtures::symmetric_beliefs(q(3, 4)));
  // Matching signal: the middle value with probability 2/3, otherwise revealing.
  for (std::size_t w = 0; w < 2; ++w) {
    CHECK(transition(d, w, w, 1) == q(2, 3));
    CHECK(transition(d, w, w, 2 * w) == q(1, 3));
    CHECK(transition(d, w, 1 - w, 2 * w) == q(1));
  }
}

TEST_CASE("finite disclosure edge cases") {
  // Uninformative s_1: the disclosure fully reveals.
  const ExactStructure unin(2, {2}, {q(3, 10), q(3, 10), q(1, 5), q(1, 5)});
  const auto du = ppi::finite_disclosure(unin);
  CHECK(ppi::posterior_dist(du, 1) == ExactAtomicDist({{q(0), q(3, 5)}, {q(1), q(2, 5)}}));

  // Fully revealing s_1: the disclosure carries no information.
  const ExactStructure full(2, {2}, {q(1, 2), q(0), q(0), q(1, 2)});
  const auto df = ppi::finite_disclosure(full);
  CHECK(ppi::posterior_dist(df, 1) == ExactAtomicDist::point_mass(q(1, 2)));

  CHECK_THROWS_AS(ppi::finite_disclosure(ExactStructure(3, {1}, {q(1, 3), q(1, 3), q(1, 3)})), ppi::DomainError);
}

TEST_CASE("disclosure is independent and conjugate on random inputs") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const auto mu = oracle::random_exact_dist(rng, 6);
    const Rational m = ppi::mean(mu);
    if (m == 0 || m == 1) continue;
    const auto d = ppi::finite_disclosure(ppi::structure_from_beliefs(mu));
    CHECK(ppi::is_private_private(d, Rational(0)));
    CHECK(ppi::posterior_dist(d, 0) == mu);
    CHECK(ppi::posterior_dist(d, 1) == ppi::conjugate(mu));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = oracle::random_dist(rng, 6);
    const auto d = ppi::finite_disclosure(ppi::structure_from_beliefs(mu));
    CHECK(ppi::is_private_private(d, 1e-9));
    CHECK(ppi::cdf_l1_distance(ppi::posterior_dist(d, 1), ppi::conjugate(mu)) < 1e-9);
  }
}

TEST_CASE("seeded samples are reproducible and independent of s_1") {
  const auto s = fixtures::symmetric_signal(0.75);
  const auto a = ppi::sample_disclosures(s, 1000, 7);
  const auto b = ppi::sample_disclosures(s, 1000, 7);
  const auto c = ppi::sample_disclosures(s, 1000, 8);
  bool same = true, differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a[i].s1 == b[i].s1 && a[i].s2star == b[i].s2star;
    differs = differs || a[i].s2star != c[i].s2star;
  }
  CHECK(same);
  CHECK(differs);

  // Conditional on s_1, s2* is uniform on [0,1]: check quartile frequencies.
  const std::size_t N = 200000;
  const auto draws = ppi::sample_disclosures(s, N, 9);
  std::array<std::array<double, 4>, 2> counts{};
  std::array<double, 2> totals{};
  for (const auto& d : draws) {
    counts[d.s1][std::min<std::size_t>(3, static_cast<std::size_t>(d.s2star * 4))] += 1;
    totals[d.s1] += 1;
  }
  for (std::size_t v = 0; v < 2; ++v)
    for (std::size_t k = 0; k < 4; ++k) {
      const double se = std::sqrt(0.25 * 0.75 / totals[v]);
      CHECK(std::abs(counts[v][k] / totals[v] - 0.25) < 5 * se);
    }
}
