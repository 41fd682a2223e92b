#pragma once

// Reference implementations written independently of the library code, and
// hand-rolled random generators for property tests.

#include "ppi/belief.hpp"
#include "ppi/grid.hpp"
#include "ppi/lp.hpp"
#include "ppi/rational.hpp"
#include "ppi/structure.hpp"
#include "ppi/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using ppi::Rational;

// ---------------------------------------------------------------------------
// Beliefs

// F(x) by direct summation.
template <class T>
T cdf(const ppi::BasicAtomicDist<T>& d, const T& x) {
  T total(0);
  for (const auto& a : d.atoms())
    if (a.x <= x) total += a.w;
  return total;
}

// min{y : F(y) >= u}, with F^{-1}(0) = 0.
template <class T>
T inverse_cdf(const ppi::BasicAtomicDist<T>& d, const T& u) {
  if (u <= T(0)) return T(0);
  T acc(0);
  for (const auto& a : d.atoms()) {
    acc += a.w;
    if (acc >= u) return a.x;
  }
  return d.atoms().back().x;
}

// 1 - F^{-1}(1 - x), straight from the definition.
template <class T>
T conjugate_cdf(const ppi::BasicAtomicDist<T>& d, const T& x) {
  return T(1) - inverse_cdf(d, T(T(1) - x));
}

// Integral of F from 0 to y for a step CDF.
template <class T>
T integrated_cdf(const ppi::BasicAtomicDist<T>& d, const T& y) {
  T total(0);
  for (const auto& a : d.atoms())
    if (a.x < y) total += a.w * (y - a.x);
  return total;
}

// a is a mean-preserving contraction of b: equal means and the integrated
// CDF of a never exceeds that of b. Checked at every atom of either.
template <class T>
bool is_contraction(const ppi::BasicAtomicDist<T>& a, const ppi::BasicAtomicDist<T>& b, const T& tol) {
  if (ppi::abs_value(T(ppi::mean(a) - ppi::mean(b))) > tol) return false;
  std::vector<T> ys{T(0), T(1)};
  for (const auto& x : a.atoms()) ys.push_back(x.x);
  for (const auto& x : b.atoms()) ys.push_back(x.x);
  for (const auto& y : ys)
    if (integrated_cdf(a, y) > integrated_cdf(b, y) + tol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Matrices

inline std::pair<std::vector<int>, std::vector<int>> marginals(const ppi::BinaryMatrix& m) {
  std::vector<int> r(m.size(), 0), c(m.front().size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      r[i] += m[i][j];
      c[j] += m[i][j];
    }
  return {r, c};
}

// Counts matrices with the same marginals by trying every 0/1 pattern.
inline std::size_t count_mates_exhaustive(const ppi::BinaryMatrix& m) {
  const std::size_t rows = m.size(), cols = m.front().size(), cells = rows * cols;
  const auto target = marginals(m);
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    ppi::BinaryMatrix x(rows, std::vector<std::uint8_t>(cols));
    for (std::size_t k = 0; k < cells; ++k) x[k / cols][k % cols] = (bits >> k) & 1;
    if (marginals(x) == target) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Partitions: one LP per (cell, off-label state), maximizing that entry
// subject to the projection and simplex constraints.
inline bool partition_unique_per_cell(const ppi::GridPartition& g) {
  const std::size_t R = g.shape().resolution, m = g.states(), cells = R * R;
  ppi::LinearProgram<double> base;
  base.variables = cells * m;
  for (std::size_t c = 0; c < cells; ++c) {
    std::vector<std::pair<std::size_t, double>> row;
    for (std::size_t k = 0; k < m; ++k) row.push_back({c * m + k, 1.0});
    base.add(row, ppi::Relation::Equal, 1.0);
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < R; ++i) {
      std::vector<std::pair<std::size_t, double>> row_terms, col_terms;
      double row_count = 0, col_count = 0;
      for (std::size_t j = 0; j < R; ++j) {
        row_terms.push_back({(i * R + j) * m + k, 1.0});
        col_terms.push_back({(j * R + i) * m + k, 1.0});
        row_count += g.labels()[i * R + j] == k;
        col_count += g.labels()[j * R + i] == k;
      }
      base.add(row_terms, ppi::Relation::Equal, row_count);
      base.add(col_terms, ppi::Relation::Equal, col_count);
    }
  }
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t k = 0; k < m; ++k) {
      if (g.labels()[c] == k) continue;
      auto lp = base;
      lp.objective.assign(lp.variables, 0.0);
      lp.objective[c * m + k] = 1.0;
      const auto sol = ppi::solve_lp(lp);
      if (sol.status != ppi::LpStatus::Optimal || sol.objective > 1e-7) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Geometry: area of a convex polygon clipped by half-planes, exact.

struct Point {
  Rational x, y;
};

// Keeps the part of poly with a*x + b*y <= c.
inline std::vector<Point> clip(const std::vector<Point>& poly, const Rational& a, const Rational& b,
                               const Rational& c) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    const Rational fp = a * p.x + b * p.y - c, fq = a * q.x + b * q.y - c;
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const Rational t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

inline Rational area(const std::vector<Point>& poly) {
  Rational twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return ppi::abs_value(Rational(twice / 2));
}

// Area of {lo <= u1 + u2 <= hi} inside the box [x0,x1] x [y0,y1].
inline Rational band_area(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1,
                          const Rational& lo, const Rational& hi) {
  std::vector<Point> poly{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  poly = clip(poly, 1, 1, hi);
  if (poly.empty()) return 0;
  poly = clip(poly, -1, -1, -lo);
  if (poly.size() < 3) return 0;
  return area(poly);
}

// ---------------------------------------------------------------------------
// Information: I(omega; signals) from the joint table, sum p log p/(p p).
inline double mutual_information_table(const std::vector<std::vector<double>>& joint) {
  std::vector<double> pw(joint.size(), 0.0), ps(joint.front().size(), 0.0);
  for (std::size_t w = 0; w < joint.size(); ++w)
    for (std::size_t s = 0; s < joint[w].size(); ++s) {
      pw[w] += joint[w][s];
      ps[s] += joint[w][s];
    }
  double total = 0;
  for (std::size_t w = 0; w < joint.size(); ++w)
    for (std::size_t s = 0; s < joint[w].size(); ++s)
      if (joint[w][s] > 0) total += joint[w][s] * std::log2(joint[w][s] / (pw[w] * ps[s]));
  return total;
}

inline std::vector<std::vector<double>> profile_table(const ppi::FiniteStructure& s) {
  std::vector<std::vector<double>> t(s.states(), std::vector<double>(s.profiles()));
  for (std::size_t w = 0; w < s.states(); ++w)
    for (std::size_t j = 0; j < s.profiles(); ++j) t[w][j] = s.prob(w, j);
  return t;
}

// ---------------------------------------------------------------------------
// Generators

inline double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Random distribution with up to max_atoms atoms on a 1/denominator lattice.
inline ppi::ExactAtomicDist random_exact_dist(std::mt19937_64& rng, std::size_t max_atoms, long denominator = 20) {
  const std::size_t k = 1 + below(rng, max_atoms);
  std::vector<ppi::Atom<Rational>> atoms;
  long weight_total = 0;
  std::vector<long> weights;
  for (std::size_t i = 0; i < k; ++i) {
    weights.push_back(1 + static_cast<long>(below(rng, 9)));
    weight_total += weights.back();
  }
  for (std::size_t i = 0; i < k; ++i) {
    const long x = static_cast<long>(below(rng, static_cast<std::size_t>(denominator) + 1));
    atoms.push_back({Rational(x) / denominator, Rational(weights[i]) / weight_total});
  }
  return ppi::ExactAtomicDist(std::move(atoms));
}

inline ppi::AtomicDist random_dist(std::mt19937_64& rng, std::size_t max_atoms) {
  const std::size_t k = 1 + below(rng, max_atoms);
  std::vector<ppi::Atom<double>> atoms;
  double total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    atoms.push_back({uniform(rng), 0.05 + uniform(rng)});
    total += atoms.back().w;
  }
  for (auto& a : atoms) a.w /= total;
  return ppi::AtomicDist(std::move(atoms));
}

// Random labels with every state used at least once.
inline ppi::GridPartition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t R, std::size_t m) {
  ppi::GridShape shape{n, R};
  std::vector<std::size_t> labels(shape.cells());
  for (auto& l : labels) l = below(rng, m);
  for (std::size_t k = 0; k < m && k < labels.size(); ++k) labels[below(rng, labels.size())] = k;
  std::vector<bool> used(m, false);
  for (auto l : labels) used[l] = true;
  for (std::size_t k = 0; k < m; ++k) {
    if (!used[k]) return random_partition(rng, n, R, m);
  }
  return ppi::GridPartition(shape, std::move(labels), m);
}

inline ppi::BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  ppi::BinaryMatrix m(rows, std::vector<std::uint8_t>(cols));
  for (auto& row : m)
    for (auto& v : row) v = uniform(rng) < density ? 1 : 0;
  return m;
}

}  // namespace oracle
