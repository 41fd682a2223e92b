#pragma once

// Optimal private disclosure for a binary state: the most informative signal
// about omega that is independent of a protected signal s_1.

#include "ppi/belief.hpp"
#include "ppi/errors.hpp"
#include "ppi/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ppi {

// Belief distribution of the optimal disclosure: the conjugate of mu1.
template <class T>
BasicAtomicDist<T> optimal_disclosure_dist(const BasicAtomicDist<T>& mu1) {
  return conjugate(mu1);
}

// Total weight on the fully revealing beliefs 0 and 1.
template <class T>
T revelation_probability(const BasicAtomicDist<T>& d) {
  T total(0);
  for (const auto& a : d.atoms()) {
    if (a.x == T(0) || a.x == T(1)) total += a.w;
  }
  return total;
}

// Draws s2* uniformly from [1 - p1, 1] when omega = 1 and from [0, 1 - p1]
// when omega = 0, using the single uniform draw u.
double sample_disclosure(double p1, int omega, double u);

// (omega, s_1) with P(s_1 = k) = w_k and P(omega = 1 | s_1 = k) = x_k.
template <class T>
BasicFiniteStructure<T> structure_from_beliefs(const BasicAtomicDist<T>& mu) {
  std::vector<T> pmf(2 * mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    pmf[k] = mu[k].w * (T(1) - mu[k].x);
    pmf[mu.size() + k] = mu[k].w * mu[k].x;
  }
  return BasicFiniteStructure<T>(2, {mu.size()}, std::move(pmf));
}

// Cut points of the disclosure intervals: distinct values of 1 - p(s_1)
// strictly inside (0,1), with 0 and 1 added at the ends.
template <class T>
std::vector<T> disclosure_cuts(const BasicFiniteStructure<T>& s) {
  if (s.states() != 2 || s.agents() != 1) throw DomainError("disclosure needs a binary state and one signal");
  const auto joint = s.state_signal_joint(0);
  const T eps = ScalarTraits<T>::posterior_eps();
  std::vector<T> cuts;
  for (std::size_t v = 0; v < s.alphabets()[0]; ++v) {
    const T total = joint[0][v] + joint[1][v];
    if (total == T(0)) continue;
    const T c = T(1) - joint[1][v] / total;
    if (c > eps && c < T(1) - eps) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<T> out{T(0)};
  for (const auto& c : cuts) {
    if (abs_value(T(c - out.back())) > eps) out.push_back(c);
  }
  out.push_back(T(1));
  return out;
}

// Joint structure (omega, s_1, t) where t is the index of the interval
// containing s2*. Intervals are left-closed, the last one closed.
template <class T>
BasicFiniteStructure<T> finite_disclosure(const BasicFiniteStructure<T>& s) {
  const auto cuts = disclosure_cuts(s);
  const std::size_t K = cuts.size() - 1;
  const std::size_t V = s.alphabets()[0];
  const auto joint = s.state_signal_joint(0);
  const T eps = ScalarTraits<T>::posterior_eps();

  // Overlap of interval k with [lo, hi].
  auto overlap = [&](std::size_t k, const T& lo, const T& hi) {
    const T a = std::max(cuts[k], lo), b = std::min(cuts[k + 1], hi);
    return b > a ? T(b - a) : T(0);
  };
  auto snap = [&](T c) {
    for (const auto& x : cuts) {
      if (abs_value(T(c - x)) <= eps) return x;
    }
    return c;
  };

  std::vector<T> pmf(2 * V * K, T(0));
  for (std::size_t v = 0; v < V; ++v) {
    const T total = joint[0][v] + joint[1][v];
    if (total == T(0)) continue;
    const T p = joint[1][v] / total;
    const T c = snap(T(1) - p);
    for (std::size_t k = 0; k < K; ++k) {
      // A degenerate interval [c,1] or [0,c] collapses onto its endpoint.
      const T hi_share = c < T(1) ? T(overlap(k, c, T(1)) / (T(1) - c)) : T(k + 1 == K ? 1 : 0);
      const T lo_share = c > T(0) ? T(overlap(k, T(0), c) / c) : T(k == 0 ? 1 : 0);
      if (joint[1][v] > T(0)) pmf[(V + v) * K + k] = joint[1][v] * hi_share;
      if (joint[0][v] > T(0)) pmf[v * K + k] = joint[0][v] * lo_share;
    }
  }
  return BasicFiniteStructure<T>(2, {V, K}, std::move(pmf));
}

struct DisclosureSample {
  std::size_t s1;
  double s2star;
};

// Seeded draws of (omega, s_1) from s followed by the disclosure sampler.
std::vector<DisclosureSample> sample_disclosures(const FiniteStructure& s, std::size_t count, std::uint64_t seed);

// Uniform double in [0,1) from the top 53 bits of a 64-bit draw; identical
// on every platform, unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace ppi
