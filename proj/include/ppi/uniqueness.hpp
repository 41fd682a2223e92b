#pragma once

// Tests for Pareto optimality of information structures: conjugacy for two
// agents and a binary state, and uniqueness of discrete sets and partitions
// given their projections.

#include "ppi/belief.hpp"
#include "ppi/errors.hpp"
#include "ppi/grid.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ppi {

using BinaryMatrix = std::vector<std::vector<std::uint8_t>>;

// Two agents, binary state: Pareto optimal iff the belief distributions are
// conjugate. Distance is measured as the L1 gap between the CDFs, so a grid
// and its conjugate differing by half a cell still compare equal at tol 1/R.
template <class T>
bool is_pareto_optimal_2x2(const BasicAtomicDist<T>& mu1, const BasicAtomicDist<T>& mu2,
                           const T& tol = default_tolerance<T>()) {
  if (abs_value(T(mean(mu1) - mean(mu2))) > tol) throw PreconditionError("not a feasible pair: means differ");
  return cdf_l1_distance(mu2, conjugate(mu1)) <= tol;
}

void validate_matrix(const BinaryMatrix& mat);
BinaryMatrix grid_matrix(const GridSet& g);

// Sorted row counts must be the conjugate partition of the sorted column
// counts; exact integer arithmetic.
bool lorentz_uniqueness(const BinaryMatrix& mat);
bool lorentz_uniqueness_2d(const GridSet& g);

// A switch is a 2x2 submatrix [[1,0],[0,1]] or [[0,1],[1,0]]. Returns
// {r, r', c, c'} for the first one found.
std::optional<std::array<std::size_t, 4>> find_switch(const BinaryMatrix& mat);
bool switch_uniqueness_matrix(const BinaryMatrix& mat);
// A distinct matrix with the same marginals, when one exists.
std::optional<BinaryMatrix> marginal_mate(const BinaryMatrix& mat);

// All 0/1 matrices with the same row and column sums. At most 25 cells.
std::vector<BinaryMatrix> brute_force_marginal_mates(const BinaryMatrix& mat);

// Per-axis values h_i(j) in [-1, 1] with sum_i h_i(x_i) >= 0 on the set and
// <= -epsilon off it. Absent when no such values exist.
using AdditiveWitness = std::vector<std::vector<double>>;
std::optional<AdditiveWitness> additive_set_test(const GridSet& g, double epsilon);
bool verify_additive_witness(const GridSet& g, const AdditiveWitness& h, double epsilon, double tol = 1e-9);

struct PartitionUniqueness {
  bool unique = false;
  double off_label_mass = 0;            // LP optimum
  std::optional<FuzzyGrid> alternative;  // another fuzzy partition with the same projections
};

// True iff the indicator of g is the only fuzzy partition with its per-state
// projections. Solved as one LP maximising the mass placed off the labels.
// n = 2 only; resolution <= 32 and at most 4 states.
PartitionUniqueness partition_uniqueness_report(const GridPartition& g);
bool partition_uniqueness_grid(const GridPartition& g);

}  // namespace ppi
