#pragma once

// A designer recommending actions in a two-player zero-sum game. With a
// unique equilibrium the recommendations must be independent of each other,
// so the designer only chooses how they correlate with the state. All
// quantities are exact rationals.

#include "ppi/rational.hpp"
#include "ppi/structure.hpp"

#include <optional>
#include <vector>

namespace ppi {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct ZeroSumSolution {
  std::vector<Rational> strategy1;
  std::vector<Rational> strategy2;
  Rational value;
};

// Maximin strategies for the row player (payoffs u) and the column player.
ZeroSumSolution solve_zero_sum(const RationalMatrix& u);

struct DesignerProblem {
  RationalMatrix u;                       // row player's payoff
  std::vector<RationalMatrix> u_d;        // designer utility per state, [a1][a2]
  std::vector<Rational> prior;            // over states
  std::optional<RationalMatrix> equilibrium;  // product distribution over action pairs
};

void validate(const DesignerProblem& p);
// The supplied equilibrium, or the product of the zero-sum maximin strategies.
// Uniqueness of the correlated equilibrium is assumed, not checked.
RationalMatrix equilibrium_of(const DesignerProblem& p);

struct DesignerSolution {
  Rational payoff;
  std::vector<RationalMatrix> kernel;  // q(a1, a2 | state)
  RationalMatrix equilibrium;
};

// Maximises sum prior * q * u_d over kernels whose state average is the
// equilibrium. Among optimal kernels returns the lexicographically largest.
DesignerSolution designer_optimum(const DesignerProblem& p);
// Recommendations drawn independently of the state.
Rational independent_baseline(const DesignerProblem& p);
// Designer choosing actions freely per state, ignoring the privacy constraint.
Rational relaxed_bound(const DesignerProblem& p);

// (state, a1, a2) with probability prior * q. States with zero prior must
// not occur.
ExactStructure recommendation_structure(const DesignerProblem& p, const DesignerSolution& s);

}  // namespace ppi
