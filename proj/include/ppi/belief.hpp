#pragma once

// Finite-support distributions of posterior beliefs.
//
// A binary-state belief is a number in [0,1] (the probability of the high
// state), so a signal is summarised by an AtomicDist on [0,1]. For m states a
// belief is a point of the simplex and the signal is summarised by a
// SimplexDist. Both are templated on the scalar so the same code runs in
// double precision and in exact rational arithmetic.

#include "ppi/errors.hpp"
#include "ppi/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ppi {

template <class T>
struct Atom {
  T x;  // location in [0,1]
  T w;  // probability mass
};

template <class T>
T default_tolerance() {
  if constexpr (ScalarTraits<T>::exact) {
    return T(0);
  } else {
    return T(1e-9);
  }
}

template <class T>
class BasicAtomicDist {
 public:
  // Sorts, merges atoms closer than the merge tolerance, drops negligible
  // weights and renormalises. Throws DomainError when a location leaves
  // [0,1], a weight is negative or the weights do not sum to one.
  explicit BasicAtomicDist(std::vector<Atom<T>> atoms);

  static BasicAtomicDist point_mass(const T& p) { return BasicAtomicDist({{p, T(1)}}); }

  const std::vector<Atom<T>>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Atom<T>& operator[](std::size_t i) const { return atoms_[i]; }

  friend bool operator==(const BasicAtomicDist& a, const BasicAtomicDist& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].x != b[i].x || a[i].w != b[i].w) return false;
    return true;
  }

 private:
  std::vector<Atom<T>> atoms_;
};

using AtomicDist = BasicAtomicDist<double>;
using ExactAtomicDist = BasicAtomicDist<Rational>;

template <class T>
BasicAtomicDist<T>::BasicAtomicDist(std::vector<Atom<T>> atoms) {
  using Tr = ScalarTraits<T>;
  if (atoms.empty()) throw DomainError("distribution has no atoms");
  const T slack = Tr::merge_eps();
  T total(0);
  for (auto& a : atoms) {
    if (a.x < -slack || a.x > T(1) + slack)
      throw DomainError("atom location " + std::to_string(to_double(a.x)) + " outside [0,1]");
    if (a.x < T(0)) a.x = T(0);
    if (a.x > T(1)) a.x = T(1);
    if (a.w < T(0) && a.w < -Tr::drop_eps())
      throw DomainError("negative atom weight " + std::to_string(to_double(a.w)));
    total += a.w;
  }
  if (abs_value(T(total - T(1))) > Tr::sum_tol())
    throw DomainError("atom weights sum to " + std::to_string(to_double(total)) + ", not 1");

  std::sort(atoms.begin(), atoms.end(), [](const Atom<T>& a, const Atom<T>& b) { return a.x < b.x; });

  std::vector<Atom<T>> merged;
  merged.reserve(atoms.size());
  T group_start(0);
  for (const auto& a : atoms) {
    if (!merged.empty() && a.x - group_start <= Tr::merge_eps()) {
      auto& m = merged.back();
      T w = m.w + a.w;
      if (w > T(0)) m.x = (m.x * m.w + a.x * a.w) / w;
      m.w = w;
    } else {
      merged.push_back(a);
      group_start = a.x;
    }
  }

  T kept(0);
  for (const auto& a : merged)
    if (a.w > Tr::drop_eps()) {
      atoms_.push_back(a);
      kept += a.w;
    }
  if (atoms_.empty()) throw DomainError("distribution has no positive atoms");
  if (kept != T(1))
    for (auto& a : atoms_) a.w /= kept;
}

// Right-continuous CDF as its list of jump points (x, F(x)).
template <class T>
struct StepCDF {
  std::vector<std::pair<T, T>> breakpoints;
};

template <class T>
void check_unit(const T& x, const char* what) {
  if (x < T(0) || x > T(1)) throw DomainError(std::string(what) + " " + std::to_string(to_double(x)) + " outside [0,1]");
}

// F(x): mass of atoms located at or below x.
template <class T>
T cdf_eval(const BasicAtomicDist<T>& d, const T& x) {
  check_unit(x, "cdf argument");
  T f(0);
  for (const auto& a : d.atoms()) {
    if (a.x > x) break;
    f += a.w;
  }
  return f;
}

// min{y : F(y) >= u}. quantile(d, 0) is the smallest atom location.
template <class T>
T quantile(const BasicAtomicDist<T>& d, const T& u) {
  check_unit(u, "quantile level");
  if (u == T(0)) return d[0].x;
  const T eps = ScalarTraits<T>::merge_eps();
  T c(0);
  for (const auto& a : d.atoms()) {
    c += a.w;
    if (c >= u - eps) return a.x;
  }
  return d.atoms().back().x;
}

template <class T>
T mean(const BasicAtomicDist<T>& d) {
  T m(0);
  for (const auto& a : d.atoms()) m += a.x * a.w;
  return m;
}

// The distribution whose CDF is the reflection of F around the anti-diagonal:
// G(x) = 1 - F^{-1}(1 - x). Atoms become gaps of the same length and gaps
// become atoms of the same weight:
//   - the gap (x_k, 1] above the top atom becomes an atom at 0,
//   - the gap between atoms i and i+1 becomes an atom at 1 - c_i, where c_i is
//     the cumulative weight up to atom i,
//   - the gap [0, x_1) below the bottom atom becomes an atom at 1.
template <class T>
BasicAtomicDist<T> conjugate(const BasicAtomicDist<T>& d) {
  const auto& a = d.atoms();
  const std::size_t k = a.size();
  // upper[i] = 1 - c_i, accumulated from the top for accuracy in double
  std::vector<T> upper(k + 1, T(0));
  for (std::size_t i = k; i-- > 0;) upper[i] = upper[i + 1] + a[i].w;

  std::vector<Atom<T>> out;
  out.reserve(k + 1);
  out.push_back({T(0), T(1) - a[k - 1].x});
  for (std::size_t i = k - 1; i-- > 0;) out.push_back({upper[i + 1], a[i + 1].x - a[i].x});
  out.push_back({T(1), a[0].x});
  return BasicAtomicDist<T>(std::move(out));
}

namespace detail {

// Sorted, deduplicated union of {0, 1} and the atom locations of a and b.
template <class T>
std::vector<T> breakpoints(const BasicAtomicDist<T>& a, const BasicAtomicDist<T>& b) {
  std::vector<T> ys{T(0), T(1)};
  for (const auto& at : a.atoms()) ys.push_back(at.x);
  for (const auto& at : b.atoms()) ys.push_back(at.x);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

// For each sorted y: (F(y), integral of F over [y,1]).
// The tail integral equals F(y)(1-y) + sum over atoms above y of w(1-x).
template <class T>
std::vector<std::pair<T, T>> cdf_and_tail(const BasicAtomicDist<T>& d, const std::vector<T>& ys) {
  T above(0);
  for (const auto& a : d.atoms()) above += a.w * (T(1) - a.x);
  std::vector<std::pair<T, T>> out;
  out.reserve(ys.size());
  std::size_t i = 0;
  T f(0);
  for (const auto& y : ys) {
    while (i < d.size() && d[i].x <= y) {
      f += d[i].w;
      above -= d[i].w * (T(1) - d[i].x);
      ++i;
    }
    out.emplace_back(f, f * (T(1) - y) + above);
  }
  return out;
}

}  // namespace detail

// True iff a is a mean-preserving contraction of b: equal means and
// for every y, the integral of F_a over [y,1] is at least that of F_b.
// Both integrals are piecewise linear in y with kinks at atom locations, so
// checking the union of breakpoints is exact.
template <class T>
bool is_mpc(const BasicAtomicDist<T>& a, const BasicAtomicDist<T>& b, const T& tol = default_tolerance<T>()) {
  if (abs_value(T(mean(a) - mean(b))) > tol) return false;
  const auto ys = detail::breakpoints(a, b);
  const auto ta = detail::cdf_and_tail(a, ys);
  const auto tb = detail::cdf_and_tail(b, ys);
  for (std::size_t i = 0; i < ys.size(); ++i)
    if (ta[i].second < tb[i].second - tol) return false;
  return true;
}

// a Blackwell dominates b iff b is a mean-preserving contraction of a.
template <class T>
bool blackwell_dominates(const BasicAtomicDist<T>& a, const BasicAtomicDist<T>& b,
                         const T& tol = default_tolerance<T>()) {
  return is_mpc(b, a, tol);
}

// Integral over [0,1] of |F_a - F_b| (the 1-Wasserstein distance).
template <class T>
T cdf_l1_distance(const BasicAtomicDist<T>& a, const BasicAtomicDist<T>& b) {
  const auto ys = detail::breakpoints(a, b);
  const auto ta = detail::cdf_and_tail(a, ys);
  const auto tb = detail::cdf_and_tail(b, ys);
  T dist(0);
  for (std::size_t i = 0; i + 1 < ys.size(); ++i)
    dist += abs_value(T(ta[i].first - tb[i].first)) * (ys[i + 1] - ys[i]);
  return dist;
}

template <class T>
StepCDF<T> step_cdf(const BasicAtomicDist<T>& d) {
  StepCDF<T> s;
  if (d[0].x > T(0)) s.breakpoints.emplace_back(T(0), T(0));
  T c(0);
  for (const auto& a : d.atoms()) {
    c += a.w;
    s.breakpoints.emplace_back(a.x, c);
  }
  s.breakpoints.back().second = T(1);
  if (d.atoms().back().x < T(1)) s.breakpoints.emplace_back(T(1), T(1));
  return s;
}

// Grid stand-in for Uniform[0,1]: R atoms of mass 1/R at (k - 1/2)/R.
// Its CDF is within 1/(2R) of the identity in sup norm.
template <class T = double>
BasicAtomicDist<T> uniform_grid(std::size_t resolution) {
  if (resolution == 0) throw DomainError("grid resolution must be positive");
  std::vector<Atom<T>> atoms;
  atoms.reserve(resolution);
  const T r(static_cast<long>(resolution));
  for (std::size_t k = 1; k <= resolution; ++k)
    atoms.push_back({(T(static_cast<long>(k)) - T(1) / T(2)) / r, T(1) / r});
  return BasicAtomicDist<T>(std::move(atoms));
}

inline AtomicDist to_double(const ExactAtomicDist& d) {
  std::vector<Atom<double>> atoms;
  for (const auto& a : d.atoms()) atoms.push_back({to_double(a.x), to_double(a.w)});
  return AtomicDist(std::move(atoms));
}

inline ExactAtomicDist to_exact(const AtomicDist& d) {
  std::vector<Atom<Rational>> atoms;
  Rational total(0);
  for (const auto& a : d.atoms()) {
    atoms.push_back({rational_from_double(a.x), rational_from_double(a.w)});
    total += atoms.back().w;
  }
  for (auto& a : atoms) a.w /= total;
  return ExactAtomicDist(std::move(atoms));
}

template <class T>
void write_cdf_csv(std::ostream& os, const StepCDF<T>& cdf) {
  os << "x,F\n";
  for (const auto& [x, f] : cdf.breakpoints) {
    if constexpr (ScalarTraits<T>::exact) {
      os << to_string(x) << ',' << to_string(f) << '\n';
    } else {
      os.precision(17);
      os << x << ',' << f << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Beliefs over m states.

template <class T>
struct SimplexAtom {
  std::vector<T> q;  // posterior over states
  T w;
};

template <class T>
class SimplexDist {
 public:
  // Merges posteriors equal within the posterior tolerance (max norm) and
  // sorts them lexicographically.
  explicit SimplexDist(std::vector<SimplexAtom<T>> atoms);

  static SimplexDist from_binary(const BasicAtomicDist<T>& d) {
    std::vector<SimplexAtom<T>> atoms;
    for (const auto& a : d.atoms()) atoms.push_back({{T(1) - a.x, a.x}, a.w});
    return SimplexDist(std::move(atoms));
  }

  std::size_t states() const { return atoms_.front().q.size(); }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<SimplexAtom<T>>& atoms() const { return atoms_; }

  // Weight-averaged posterior; equals the prior for a Bayes-consistent signal.
  std::vector<T> mean() const {
    std::vector<T> m(states(), T(0));
    for (const auto& a : atoms_)
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += a.w * a.q[k];
    return m;
  }

 private:
  std::vector<SimplexAtom<T>> atoms_;
};

template <class T>
SimplexDist<T>::SimplexDist(std::vector<SimplexAtom<T>> atoms) {
  if (atoms.empty()) throw DomainError("distribution has no atoms");
  const std::size_t m = atoms.front().q.size();
  for (const auto& a : atoms)
    if (a.q.size() != m) throw DomainError("posteriors of different dimension");
  std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.q < b.q; });
  const T eps = ScalarTraits<T>::posterior_eps();
  auto close = [&](const std::vector<T>& a, const std::vector<T>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (abs_value(T(a[k] - b[k])) > eps) return false;
    return true;
  };
  for (auto& a : atoms) {
    if (!(a.w > ScalarTraits<T>::drop_eps())) continue;
    if (!atoms_.empty() && close(atoms_.back().q, a.q)) {
      atoms_.back().w += a.w;
    } else {
      atoms_.push_back(std::move(a));
    }
  }
  if (atoms_.empty()) throw DomainError("distribution has no positive atoms");
}

}  // namespace ppi
