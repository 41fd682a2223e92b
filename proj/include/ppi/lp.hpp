#pragma once

// Dense two-phase tableau simplex over double or exact rationals.
//
//   maximize c.x  subject to  rows (<=, =, >=) and x >= 0.
//
// Entering variable: largest reduced cost, switching to Bland's rule after a
// run of degenerate pivots so the method always terminates.

#include "ppi/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ppi {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

template <class T>
struct LinearConstraint {
  std::vector<std::pair<std::size_t, T>> terms;
  Relation rel = Relation::LessEqual;
  T rhs{};
};

template <class T>
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<T> objective;  // empty means all zero
  std::vector<LinearConstraint<T>> constraints;

  void add(std::vector<std::pair<std::size_t, T>> terms, Relation rel, T rhs) {
    constraints.push_back({std::move(terms), rel, std::move(rhs)});
  }
};

template <class T>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  T objective{};
  std::vector<T> x;
};

namespace detail {

template <class T>
T lp_eps() {
  if constexpr (ScalarTraits<T>::exact) return T(0);
  else return T(1e-9);
}

template <class T>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * (cols + 1), T(0)) {}

  T& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
  T& rhs(std::size_t r) { return at(r, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void erase_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    --rows_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

template <class T>
class Simplex {
 public:
  Simplex(const LinearProgram<T>& lp, std::size_t max_iterations) : lp_(lp), max_iter_(max_iterations) {}

  LpSolution<T> run();

 private:
  void pivot(std::size_t r, std::size_t c);
  void price(const std::vector<T>& cost);
  LpStatus optimise(std::size_t allowed_cols);

  const LinearProgram<T>& lp_;
  std::size_t max_iter_;
  std::size_t iterations_ = 0;
  Tableau<T> tab_{0, 0};
  std::vector<T> z_;  // reduced costs, last entry is the objective value
  std::vector<std::size_t> basis_;
  std::size_t first_art_ = 0;
};

template <class T>
void Simplex<T>::pivot(std::size_t r, std::size_t c) {
  const std::size_t width = tab_.cols() + 1;
  const T p = tab_.at(r, c);
  for (std::size_t j = 0; j < width; ++j) tab_.at(r, j) /= p;
  tab_.at(r, c) = T(1);
  for (std::size_t i = 0; i < tab_.rows(); ++i) {
    if (i == r) continue;
    const T f = tab_.at(i, c);
    if (f == 0) continue;
    for (std::size_t j = 0; j < width; ++j) {
      if (tab_.at(r, j) != 0) tab_.at(i, j) -= f * tab_.at(r, j);
    }
    tab_.at(i, c) = T(0);
  }
  const T f = z_[c];
  if (f != 0) {
    for (std::size_t j = 0; j < width; ++j) {
      if (tab_.at(r, j) != 0) z_[j] -= f * tab_.at(r, j);
    }
    z_[c] = T(0);
  }
  basis_[r] = c;
}

// Reduced costs for maximising cost.x given the current basis:
// z_j = c_B B^-1 a_j - c_j, with the objective value in the last slot.
template <class T>
void Simplex<T>::price(const std::vector<T>& cost) {
  const std::size_t width = tab_.cols() + 1;
  z_.assign(width, T(0));
  for (std::size_t j = 0; j < tab_.cols(); ++j) z_[j] = -cost[j];
  for (std::size_t i = 0; i < tab_.rows(); ++i) {
    const T cb = cost[basis_[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < width; ++j) z_[j] += cb * tab_.at(i, j);
  }
}

template <class T>
LpStatus Simplex<T>::optimise(std::size_t allowed_cols) {
  const T eps = lp_eps<T>();
  std::size_t degenerate_run = 0;
  while (true) {
    if (iterations_++ >= max_iter_) return LpStatus::IterationLimit;
    const bool bland = ScalarTraits<T>::exact || degenerate_run > 50;
    std::size_t enter = allowed_cols;
    T best = -eps;
    for (std::size_t j = 0; j < allowed_cols; ++j) {
      if (z_[j] < best) {
        enter = j;
        if (bland) break;
        best = z_[j];
      }
    }
    if (enter == allowed_cols) return LpStatus::Optimal;

    std::size_t leave = tab_.rows();
    T ratio{};
    for (std::size_t i = 0; i < tab_.rows(); ++i) {
      const T a = tab_.at(i, enter);
      if (!(a > eps)) continue;
      const T r = tab_.rhs(i) / a;
      if (leave == tab_.rows() || r < ratio || (r == ratio && basis_[i] < basis_[leave])) {
        leave = i;
        ratio = r;
      }
    }
    if (leave == tab_.rows()) return LpStatus::Unbounded;
    degenerate_run = abs_value(ratio) <= eps ? degenerate_run + 1 : 0;
    pivot(leave, enter);
  }
}

template <class T>
LpSolution<T> Simplex<T>::run() {
  const T eps = lp_eps<T>();
  const std::size_t n = lp_.variables;
  const std::size_t m = lp_.constraints.size();

  // Normalise to nonnegative right-hand sides.
  std::vector<LinearConstraint<T>> rows = lp_.constraints;
  for (auto& row : rows) {
    if (row.rhs < 0) {
      row.rhs = -row.rhs;
      for (auto& t : row.terms) t.second = -t.second;
      if (row.rel == Relation::LessEqual) row.rel = Relation::GreaterEqual;
      else if (row.rel == Relation::GreaterEqual) row.rel = Relation::LessEqual;
    }
  }

  std::size_t slacks = 0, arts = 0;
  for (const auto& row : rows) {
    if (row.rel != Relation::Equal) ++slacks;
    if (row.rel != Relation::LessEqual) ++arts;
  }
  first_art_ = n + slacks;
  const std::size_t cols = first_art_ + arts;
  tab_ = Tableau<T>(m, cols);
  basis_.assign(m, 0);

  std::size_t next_slack = n, next_art = first_art_;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [j, v] : rows[i].terms) tab_.at(i, j) += v;
    tab_.rhs(i) = rows[i].rhs;
    switch (rows[i].rel) {
      case Relation::LessEqual:
        tab_.at(i, next_slack) = T(1);
        basis_[i] = next_slack++;
        break;
      case Relation::GreaterEqual:
        tab_.at(i, next_slack++) = T(-1);
        tab_.at(i, next_art) = T(1);
        basis_[i] = next_art++;
        break;
      case Relation::Equal:
        tab_.at(i, next_art) = T(1);
        basis_[i] = next_art++;
        break;
    }
  }

  LpSolution<T> out;
  if (arts > 0) {
    std::vector<T> phase1(cols, T(0));
    for (std::size_t j = first_art_; j < cols; ++j) phase1[j] = T(-1);
    price(phase1);
    const LpStatus st = optimise(cols);
    if (st == LpStatus::IterationLimit) {
      out.status = st;
      return out;
    }
    const T feas_tol = ScalarTraits<T>::exact ? T(0) : T(1e-7);
    if (z_[cols] < -feas_tol) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are linear combinations of the others.
    for (std::size_t i = tab_.rows(); i-- > 0;) {
      if (basis_[i] < first_art_) continue;
      std::size_t c = first_art_;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (abs_value(tab_.at(i, j)) > eps) {
          c = j;
          break;
        }
      }
      if (c < first_art_) {
        pivot(i, c);
      } else {
        tab_.erase_row(i);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<T> cost(cols, T(0));
  for (std::size_t j = 0; j < n && j < lp_.objective.size(); ++j) cost[j] = lp_.objective[j];
  price(cost);
  out.status = optimise(first_art_);
  if (out.status != LpStatus::Optimal) return out;
  out.objective = z_[cols];
  out.x.assign(n, T(0));
  for (std::size_t i = 0; i < tab_.rows(); ++i) {
    if (basis_[i] < n) out.x[basis_[i]] = tab_.rhs(i);
  }
  return out;
}

}  // namespace detail

template <class T>
LpSolution<T> solve_lp(const LinearProgram<T>& lp, std::size_t max_iterations = 200000) {
  return detail::Simplex<T>(lp, max_iterations).run();
}

}  // namespace ppi
