#include "ppi/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace ppi {

void validate_payoffs(const PayoffTable& u) {
  if (u.size() != 2) throw DomainError("payoff table needs one row per state (two states)");
  if (u[0].empty() || u[0].size() != u[1].size()) throw DomainError("payoff rows must list the same actions");
  for (const auto& row : u) {
    for (double v : row) {
      if (!std::isfinite(v)) throw DomainError("payoffs must be finite");
    }
  }
}

double indirect_utility(const PayoffTable& u, double q) {
  double best = -INFINITY;
  for (std::size_t a = 0; a < u[0].size(); ++a) best = std::max(best, (1 - q) * u[0][a] + q * u[1][a]);
  return best;
}

double expected_indirect_utility(const PayoffTable& u, const AtomicDist& mu) {
  double total = 0;
  for (const auto& a : mu.atoms()) total += a.w * indirect_utility(u, a.x);
  return total;
}

AtomicDist two_point_dist(double prior, double alpha, double beta) {
  if (!(prior >= 0 && prior <= 1)) throw DomainError("prior must lie in [0,1]");
  if (!(alpha >= 0 && alpha <= 1 - prior && beta >= 0 && beta <= prior))
    throw DomainError("alpha must lie in [0, 1-p] and beta in [0, p]");
  const double s = alpha + beta;
  if (s == 0) return AtomicDist::point_mass(prior);
  std::vector<Atom<double>> atoms;
  if (alpha > 0) atoms.push_back({prior - beta, alpha / s});
  if (beta > 0) atoms.push_back({prior + alpha, beta / s});
  return AtomicDist(std::move(atoms));
}

double pair_welfare(const PayoffTable& u1, const PayoffTable& u2, const AtomicDist& mu1, const AtomicDist& mu2) {
  return expected_indirect_utility(u1, mu1) + expected_indirect_utility(u2, mu2);
}

namespace {

// Welfare with the two-point distribution for the agent with payoffs `two`
// and its conjugate (closed form) for the agent with payoffs `three`.
double frontier_welfare(const PayoffTable& two, const PayoffTable& three, double p, double alpha, double beta) {
  const double s = alpha + beta;
  if (s <= 0) return indirect_utility(two, p) + (1 - p) * indirect_utility(three, 0) + p * indirect_utility(three, 1);
  const double w2 = alpha / s * indirect_utility(two, p - beta) + beta / s * indirect_utility(two, p + alpha);
  const double w3 = (1 - p - alpha) * indirect_utility(three, 0) + s * indirect_utility(three, beta / s) +
                    (p - beta) * indirect_utility(three, 1);
  return w2 + w3;
}

struct Candidate {
  double welfare;
  double alpha;
  double beta;
  int role;
};

// Higher welfare wins; near-ties go to the lexicographically smallest
// (alpha, beta), then to role 0.
bool better(const Candidate& a, const Candidate& b) {
  constexpr double tie = 1e-12;
  if (a.welfare > b.welfare + tie) return true;
  if (a.welfare < b.welfare - tie) return false;
  return std::tie(a.alpha, a.beta, a.role) < std::tie(b.alpha, b.beta, b.role);
}

}  // namespace

WelfareResult maximize_welfare(const PayoffTable& u1, const PayoffTable& u2, double prior) {
  validate_payoffs(u1);
  validate_payoffs(u2);
  if (!(prior >= 0 && prior <= 1)) throw DomainError("prior must lie in [0,1]");
  const double A = 1 - prior, B = prior;
  constexpr int kGrid = 200;
  constexpr std::size_t kSeeds = 8;

  auto eval = [&](int role, double a, double b) {
    return role == 0 ? frontier_welfare(u1, u2, prior, a, b) : frontier_welfare(u2, u1, prior, a, b);
  };

  std::vector<Candidate> grid;
  for (int role = 0; role < 2; ++role) {
    for (int i = 0; i < kGrid; ++i) {
      for (int j = 0; j < kGrid; ++j) {
        const double a = A * i / (kGrid - 1), b = B * j / (kGrid - 1);
        grid.push_back({eval(role, a, b), a, b, role});
      }
    }
  }
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(std::min(kSeeds, grid.size())),
                    grid.end(), [](const Candidate& a, const Candidate& b) {
                      return std::tie(b.welfare, a.alpha, a.beta, a.role) < std::tie(a.welfare, b.alpha, b.beta, b.role);
                    });

  Candidate best = grid.front();
  for (std::size_t s = 0; s < std::min(kSeeds, grid.size()); ++s) {
    Candidate cur = grid[s];
    double da = A / (kGrid - 1), db = B / (kGrid - 1);
    while (std::max(da, db) > 1e-10) {
      Candidate next = cur;
      for (int sa = -1; sa <= 1; ++sa) {
        for (int sb = -1; sb <= 1; ++sb) {
          if (sa == 0 && sb == 0) continue;
          const double a = std::clamp(cur.alpha + sa * da, 0.0, A);
          const double b = std::clamp(cur.beta + sb * db, 0.0, B);
          const Candidate c{eval(cur.role, a, b), a, b, cur.role};
          if (c.welfare > next.welfare + 1e-15) next = c;
        }
      }
      if (next.alpha == cur.alpha && next.beta == cur.beta) {
        da /= 2;
        db /= 2;
      } else {
        cur = next;
      }
    }
    if (better(cur, best)) best = cur;
  }

  WelfareResult r;
  r.alpha = best.alpha;
  r.beta = best.beta;
  r.two_valued_agent = best.role;
  const AtomicDist two = two_point_dist(prior, best.alpha, best.beta);
  const AtomicDist three = conjugate(two);
  r.mu1 = best.role == 0 ? two : three;
  r.mu2 = best.role == 0 ? three : two;
  r.welfare = pair_welfare(u1, u2, r.mu1, r.mu2);
  return r;
}

double reveal_to_one_welfare(const PayoffTable& u1, const PayoffTable& u2, double prior) {
  validate_payoffs(u1);
  validate_payoffs(u2);
  auto full = [&](const PayoffTable& u) {
    return (1 - prior) * indirect_utility(u, 0) + prior * indirect_utility(u, 1);
  };
  return std::max(full(u1) + indirect_utility(u2, prior), indirect_utility(u1, prior) + full(u2));
}

}  // namespace ppi
