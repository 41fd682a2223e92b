#include "ppi/design_games.hpp"

#include "ppi/errors.hpp"
#include "ppi/lp.hpp"

#include <algorithm>

namespace ppi {

namespace {

void check_matrix(const RationalMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.size() != rows) throw DomainError(std::string(what) + " has the wrong number of rows");
  for (const auto& r : m) {
    if (r.size() != cols) throw DomainError(std::string(what) + " has the wrong number of columns");
  }
}

// Maximin for the row player of u: maximise v with x' u >= v per column.
// v is split as v+ - v-.
std::pair<std::vector<Rational>, Rational> maximin(const RationalMatrix& u) {
  const std::size_t rows = u.size(), cols = u.front().size();
  LinearProgram<Rational> lp;
  lp.variables = rows + 2;
  lp.objective.assign(lp.variables, Rational(0));
  lp.objective[rows] = 1;
  lp.objective[rows + 1] = -1;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (std::size_t i = 0; i < rows; ++i) terms.push_back({i, u[i][j]});
    terms.push_back({rows, Rational(-1)});
    terms.push_back({rows + 1, Rational(1)});
    lp.add(std::move(terms), Relation::GreaterEqual, Rational(0));
  }
  std::vector<std::pair<std::size_t, Rational>> simplex;
  for (std::size_t i = 0; i < rows; ++i) simplex.push_back({i, Rational(1)});
  lp.add(std::move(simplex), Relation::Equal, Rational(1));
  const auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("zero-sum LP failed");
  return {std::vector<Rational>(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(rows)), sol.objective};
}

}  // namespace

ZeroSumSolution solve_zero_sum(const RationalMatrix& u) {
  if (u.empty() || u.front().empty()) throw DomainError("payoff table must be nonempty");
  check_matrix(u, u.size(), u.front().size(), "payoff table");
  const std::size_t rows = u.size(), cols = u.front().size();
  // The column player maximises -u transposed.
  RationalMatrix neg(cols, std::vector<Rational>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) neg[j][i] = -u[i][j];
  auto [x, v1] = maximin(u);
  auto [y, v2] = maximin(neg);
  return {std::move(x), std::move(y), v1};
}

void validate(const DesignerProblem& p) {
  if (p.u.empty() || p.u.front().empty()) throw DomainError("game payoff table must be nonempty");
  const std::size_t A1 = p.u.size(), A2 = p.u.front().size();
  check_matrix(p.u, A1, A2, "game payoff table");
  if (p.prior.empty()) throw DomainError("prior must be nonempty");
  if (p.u_d.size() != p.prior.size()) throw DomainError("designer utility needs one table per state");
  for (const auto& t : p.u_d) check_matrix(t, A1, A2, "designer utility");
  Rational total = 0;
  for (const auto& q : p.prior) {
    if (q < 0) throw DomainError("prior has a negative entry");
    total += q;
  }
  if (total != 1) throw DomainError("prior must sum to one");
  if (p.equilibrium) {
    check_matrix(*p.equilibrium, A1, A2, "equilibrium");
    Rational sum = 0;
    for (const auto& row : *p.equilibrium)
      for (const auto& e : row) {
        if (e < 0) throw DomainError("equilibrium has a negative entry");
        sum += e;
      }
    if (sum != 1) throw DomainError("equilibrium must sum to one");
  }
}

RationalMatrix equilibrium_of(const DesignerProblem& p) {
  validate(p);
  if (p.equilibrium) return *p.equilibrium;
  const auto sol = solve_zero_sum(p.u);
  RationalMatrix eq(sol.strategy1.size(), std::vector<Rational>(sol.strategy2.size()));
  for (std::size_t i = 0; i < eq.size(); ++i)
    for (std::size_t j = 0; j < eq[i].size(); ++j) eq[i][j] = sol.strategy1[i] * sol.strategy2[j];
  return eq;
}

DesignerSolution designer_optimum(const DesignerProblem& p) {
  const auto eq = equilibrium_of(p);
  const std::size_t S = p.prior.size(), A1 = eq.size(), A2 = eq.front().size(), P = A1 * A2;
  auto var = [&](std::size_t w, std::size_t i, std::size_t j) { return w * P + i * A2 + j; };

  LinearProgram<Rational> lp;
  lp.variables = S * P;
  lp.objective.assign(lp.variables, Rational(0));
  for (std::size_t w = 0; w < S; ++w) {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (std::size_t i = 0; i < A1; ++i)
      for (std::size_t j = 0; j < A2; ++j) {
        row.push_back({var(w, i, j), Rational(1)});
        lp.objective[var(w, i, j)] = p.prior[w] * p.u_d[w][i][j];
      }
    lp.add(std::move(row), Relation::Equal, Rational(1));
  }
  for (std::size_t i = 0; i < A1; ++i)
    for (std::size_t j = 0; j < A2; ++j) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (std::size_t w = 0; w < S; ++w) {
        if (p.prior[w] != 0) row.push_back({var(w, i, j), p.prior[w]});
      }
      lp.add(std::move(row), Relation::Equal, eq[i][j]);
    }
  auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("designer LP failed");
  const Rational payoff = sol.objective;

  // Lexicographic tie-break: pin the payoff, then maximise each kernel
  // entry in turn and pin it.
  lp.add([&] {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (std::size_t v = 0; v < lp.variables; ++v)
      if (lp.objective[v] != 0) row.push_back({v, lp.objective[v]});
    return row;
  }(), Relation::Equal, payoff);
  for (std::size_t v = 0; v < lp.variables; ++v) {
    lp.objective.assign(lp.variables, Rational(0));
    lp.objective[v] = 1;
    sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("designer tie-break LP failed");
    lp.add({{v, Rational(1)}}, Relation::Equal, sol.objective);
  }

  DesignerSolution out{payoff, {}, eq};
  out.kernel.assign(S, RationalMatrix(A1, std::vector<Rational>(A2)));
  for (std::size_t w = 0; w < S; ++w)
    for (std::size_t i = 0; i < A1; ++i)
      for (std::size_t j = 0; j < A2; ++j) out.kernel[w][i][j] = sol.x[var(w, i, j)];
  return out;
}

Rational independent_baseline(const DesignerProblem& p) {
  const auto eq = equilibrium_of(p);
  Rational total = 0;
  for (std::size_t w = 0; w < p.prior.size(); ++w)
    for (std::size_t i = 0; i < eq.size(); ++i)
      for (std::size_t j = 0; j < eq[i].size(); ++j) total += p.prior[w] * eq[i][j] * p.u_d[w][i][j];
  return total;
}

Rational relaxed_bound(const DesignerProblem& p) {
  validate(p);
  Rational total = 0;
  for (std::size_t w = 0; w < p.prior.size(); ++w) {
    Rational best = p.u_d[w][0][0];
    for (const auto& row : p.u_d[w])
      for (const auto& v : row) best = std::max(best, v);
    total += p.prior[w] * best;
  }
  return total;
}

ExactStructure recommendation_structure(const DesignerProblem& p, const DesignerSolution& s) {
  const std::size_t S = p.prior.size(), A1 = s.equilibrium.size(), A2 = s.equilibrium.front().size();
  std::vector<Rational> pmf;
  pmf.reserve(S * A1 * A2);
  for (std::size_t w = 0; w < S; ++w)
    for (std::size_t i = 0; i < A1; ++i)
      for (std::size_t j = 0; j < A2; ++j) pmf.push_back(p.prior[w] * s.kernel[w][i][j]);
  return ExactStructure(S, {A1, A2}, std::move(pmf));
}

}  // namespace ppi
