#include "ppi/disclosure.hpp"

#include <cmath>

namespace ppi {

double sample_disclosure(double p1, int omega, double u) {
  if (!(p1 >= 0 && p1 <= 1)) throw DomainError("posterior must lie in [0,1]");
  if (!(u >= 0 && u <= 1)) throw DomainError("uniform draw must lie in [0,1]");
  if (omega == 1) {
    if (p1 <= 0) throw DomainError("state 1 is impossible at posterior 0");
    return (1 - p1) + u * p1;
  }
  if (omega == 0) {
    if (p1 >= 1) throw DomainError("state 0 is impossible at posterior 1");
    return u * (1 - p1);
  }
  throw DomainError("state must be 0 or 1");
}

std::vector<DisclosureSample> sample_disclosures(const FiniteStructure& s, std::size_t count, std::uint64_t seed) {
  if (s.states() != 2 || s.agents() != 1) throw DomainError("disclosure needs a binary state and one signal");
  const std::size_t V = s.alphabets()[0];
  const auto joint = s.state_signal_joint(0);
  std::vector<double> posterior(V, 0.0), cumulative;
  std::vector<std::pair<int, std::size_t>> outcomes;
  double acc = 0;
  for (std::size_t v = 0; v < V; ++v) {
    const double total = joint[0][v] + joint[1][v];
    if (total > 0) posterior[v] = joint[1][v] / total;
    for (int w = 0; w < 2; ++w) {
      if (joint[w][v] <= 0) continue;
      acc += joint[w][v];
      cumulative.push_back(acc);
      outcomes.push_back({w, v});
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<DisclosureSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double a = uniform01(rng) * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), a);
    if (it == cumulative.end()) --it;
    const auto [w, v] = outcomes[static_cast<std::size_t>(it - cumulative.begin())];
    out.push_back({v, sample_disclosure(posterior[v], w, uniform01(rng))});
  }
  return out;
}

}  // namespace ppi
