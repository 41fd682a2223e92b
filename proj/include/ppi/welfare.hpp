#pragma once

// Feasible pairs of belief distributions for two agents and a binary state,
// and welfare maximisation over the Pareto frontier.

#include "ppi/belief.hpp"
#include "ppi/disclosure.hpp"
#include "ppi/errors.hpp"
#include "ppi/lp.hpp"
#include "ppi/structure.hpp"

#include <optional>
#include <vector>

namespace ppi {

// Equal means and mu2 a mean-preserving contraction of the conjugate of mu1.
template <class T>
bool is_feasible_pair(const BasicAtomicDist<T>& mu1, const BasicAtomicDist<T>& mu2,
                      const T& tol = default_tolerance<T>()) {
  if (abs_value(T(mean(mu1) - mean(mu2))) > tol) return false;
  return is_mpc(mu2, conjugate(mu1), tol);
}

// A private private structure whose agents' belief distributions are mu1 and
// mu2. Agent 1 gets the interval signal of the optimal disclosure against
// mu1; its conjugate beliefs are then garbled onto mu2 by a transport plan
// pi[k][l] with row sums P(t = k), column sums mu2's weights, and column
// barycenters at mu2's atoms.
template <class T>
std::optional<BasicFiniteStructure<T>> feasibility_certificate(const BasicAtomicDist<T>& mu1,
                                                               const BasicAtomicDist<T>& mu2,
                                                               const T& tol = default_tolerance<T>()) {
  if (!is_feasible_pair(mu1, mu2, tol)) return std::nullopt;
  const T p = mean(mu1);
  if (p <= T(0) || p >= T(1)) throw DomainError("certificate needs a prior strictly inside (0,1)");

  const auto base = finite_disclosure(structure_from_beliefs(mu1));
  const auto joint = base.state_signal_joint(1);
  const std::size_t K = base.alphabets()[1], L = mu2.size();
  std::vector<T> a(K), y(K);
  for (std::size_t k = 0; k < K; ++k) {
    a[k] = joint[0][k] + joint[1][k];
    y[k] = joint[1][k] / a[k];
  }

  LinearProgram<T> lp;
  lp.variables = K * L;
  auto var = [&](std::size_t k, std::size_t l) { return k * L + l; };
  for (std::size_t k = 0; k < K; ++k) {
    std::vector<std::pair<std::size_t, T>> row;
    for (std::size_t l = 0; l < L; ++l) row.push_back({var(k, l), T(1)});
    lp.add(std::move(row), Relation::Equal, a[k]);
  }
  for (std::size_t l = 0; l < L; ++l) {
    std::vector<std::pair<std::size_t, T>> mass, bary;
    for (std::size_t k = 0; k < K; ++k) {
      mass.push_back({var(k, l), T(1)});
      bary.push_back({var(k, l), y[k]});
    }
    lp.add(std::move(mass), Relation::Equal, mu2[l].w);
    lp.add(std::move(bary), Relation::Equal, T(mu2[l].w * mu2[l].x));
  }
  const auto sol = solve_lp(lp);
  if (sol.status == LpStatus::IterationLimit) throw ResourceError("transport LP hit its iteration limit");
  if (sol.status != LpStatus::Optimal) return std::nullopt;

  std::vector<std::vector<T>> kernel(K, std::vector<T>(L, T(0)));
  for (std::size_t k = 0; k < K; ++k) {
    T total(0);
    for (std::size_t l = 0; l < L; ++l) {
      kernel[k][l] = sol.x[var(k, l)] > T(0) ? sol.x[var(k, l)] : T(0);
      total += kernel[k][l];
    }
    for (auto& v : kernel[k]) v /= total;
  }
  return garble(base, 1, kernel);
}

// u[state][action]
using PayoffTable = std::vector<std::vector<double>>;

void validate_payoffs(const PayoffTable& u);
double indirect_utility(const PayoffTable& u, double q);
double expected_indirect_utility(const PayoffTable& u, const AtomicDist& mu);

// alpha/(alpha+beta) at p - beta and beta/(alpha+beta) at p + alpha; the
// point mass at p when alpha = beta = 0.
AtomicDist two_point_dist(double prior, double alpha, double beta);

struct WelfareResult {
  double alpha = 0;
  double beta = 0;
  // Agent whose beliefs take two values (0 or 1); the other holds the conjugate.
  int two_valued_agent = 0;
  AtomicDist mu1 = AtomicDist::point_mass(0.5);
  AtomicDist mu2 = AtomicDist::point_mass(0.5);
  double welfare = 0;
};

double pair_welfare(const PayoffTable& u1, const PayoffTable& u2, const AtomicDist& mu1, const AtomicDist& mu2);
WelfareResult maximize_welfare(const PayoffTable& u1, const PayoffTable& u2, double prior);
// Full revelation to the better of the two agents, nothing to the other.
double reveal_to_one_welfare(const PayoffTable& u1, const PayoffTable& u2, double prior);

}  // namespace ppi
