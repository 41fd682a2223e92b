#pragma once

// Shared example objects for the test suites.

#include "ppi/belief.hpp"
#include "ppi/design_games.hpp"
#include "ppi/grid.hpp"
#include "ppi/structure.hpp"

#include <cmath>
#include <vector>

namespace fixtures {

using ppi::Rational;

inline Rational q(long a, long b = 1) { return Rational(a) / Rational(b); }

// {x1 + x2 > 1} rasterized by cell centers: cell (i,j) is in iff i + j >= R.
inline ppi::GridSet upper_triangle(std::size_t R) {
  std::vector<std::uint8_t> cells(R * R);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) cells[i * R + j] = i + j >= R ? 1 : 0;
  return ppi::GridSet({2, R}, std::move(cells));
}

// {x1 + x2 >= 1} by cell centers: i + j >= R - 1.
inline ppi::GridSet halfspace(std::size_t R) {
  std::vector<std::uint8_t> cells(R * R);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) cells[i * R + j] = i + j + 1 >= R ? 1 : 0;
  return ppi::GridSet({2, R}, std::move(cells));
}

// Two binary signals, each correct with probability 3/4, realized on a 4x4
// grid; omega = 1 on the listed cells. R = 8 is the 2x2 upsampling.
inline ppi::GridSet block_pattern(std::size_t R = 4) {
  const std::size_t ones[][2] = {{0, 2}, {1, 3}, {2, 0}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  const std::size_t f = R / 4;
  std::vector<std::uint8_t> cells(R * R, 0);
  for (const auto& c : ones)
    for (std::size_t a = 0; a < f; ++a)
      for (std::size_t b = 0; b < f; ++b) cells[(c[0] * f + a) * R + c[1] * f + b] = 1;
  return ppi::GridSet({2, R}, std::move(cells));
}

// Three-state partition indexed by beta. Left half (t1 < 1/2): t2 in
// [0,beta) is 0, [beta,1/2) is 1, [1/2,1-beta) is 0, [1-beta,1] is 1.
// Right half: t2 < 1/2 is 1, otherwise 2. Cells are labeled by centers.
inline ppi::GridPartition three_state(double beta, std::size_t R = 20) {
  std::vector<std::size_t> labels(R * R);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < R; ++j) {
      const double t1 = (i + 0.5) / R, t2 = (j + 0.5) / R;
      std::size_t l;
      if (t1 < 0.5) {
        if (t2 < beta) l = 0;
        else if (t2 < 0.5) l = 1;
        else if (t2 < 1 - beta) l = 0;
        else l = 1;
      } else {
        l = t2 < 0.5 ? 1 : 2;
      }
      labels[i * R + j] = l;
    }
  }
  return ppi::GridPartition({2, R}, std::move(labels), 3);
}

// Binary state, one signal equal to omega with probability r, prior 1/2.
template <class T>
ppi::BasicFiniteStructure<T> symmetric_signal(const T& r) {
  const T h = T(1) / T(2);
  return ppi::BasicFiniteStructure<T>(2, {2}, {h * r, h * (T(1) - r), h * (T(1) - r), h * r});
}

template <class T>
ppi::BasicAtomicDist<T> symmetric_beliefs(const T& r) {
  const T h = T(1) / T(2);
  return ppi::BasicAtomicDist<T>({{T(1) - r, h}, {r, h}});
}

// omega uniform on {0,1}^2 encoded as 4 states; agent i sees bit i.
inline ppi::FiniteStructure two_bit() {
  std::vector<double> pmf(4 * 4, 0.0);
  for (std::size_t w = 0; w < 4; ++w) {
    const std::size_t b1 = w >> 1, b2 = w & 1;
    pmf[w * 4 + b1 * 2 + b2] = 0.25;
  }
  return ppi::FiniteStructure(4, {2, 2}, std::move(pmf));
}

// Rock-paper-scissors with actions ordered R, P, S. The designer earns 1 per
// player choosing scissors in state 1 or rock in state 0.
inline ppi::DesignerProblem rps() {
  ppi::DesignerProblem p;
  p.u = {{q(0), q(-1), q(1)}, {q(1), q(0), q(-1)}, {q(-1), q(1), q(0)}};
  p.prior = {q(1, 2), q(1, 2)};
  ppi::RationalMatrix low(3, std::vector<Rational>(3)), high(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      low[i][j] = (i == 0) + (j == 0);
      high[i][j] = (i == 2) + (j == 2);
    }
  p.u_d = {low, high};
  return p;
}

// u_i(omega, a) = 1 - 2|omega - a|.
inline std::vector<std::vector<double>> matching_payoffs() { return {{1, -1}, {-1, 1}}; }

}  // namespace fixtures
