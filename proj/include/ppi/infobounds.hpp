#pragma once

// Entropy-based and quadratic information measures, and the bounds they
// satisfy for private private structures. Logarithms are base 2.

#include "ppi/belief.hpp"
#include "ppi/structure.hpp"

#include <string>
#include <vector>

namespace ppi {

double entropy(const std::vector<double>& p);
// sum_k q(k) (1 - q(k))
double quadratic_entropy(const std::vector<double>& p);

double mutual_information(const SimplexDist<double>& mu);
double mutual_information(const AtomicDist& mu);
double quadratic_information(const SimplexDist<double>& mu);
double quadratic_information(const AtomicDist& mu);

struct InfoReport {
  std::string inequality;  // superadditivity, binary or quadratic
  std::string units;       // bits or quadratic
  std::vector<double> per_agent;
  double joint = 0;
  double bound = 0;
  double slack = 0;
  // Quadratic bound only: joint minus summed per-agent variance of each
  // state's posterior coordinate.
  std::vector<double> per_state_slack;
  bool holds = true;
};

inline constexpr double kSlackTolerance = 1e-9;

// sum_i I(omega; s_i) <= I(omega; s_1..s_n). bound = joint information.
InfoReport check_superadditivity(const FiniteStructure& s);
// sum_i I_i <= H(p) - (ln 2 / 8) sum_{i<j} I_i I_j for a binary state.
InfoReport check_binary_strengthening(const FiniteStructure& s);
// sum_i Ibar_i <= Hbar(p), and the same per state coordinate.
InfoReport check_quadratic_bound(const FiniteStructure& s);

}  // namespace ppi
